#pragma once

#include <optional>
#include <vector>

#include "quartic/core/error.hpp"

namespace quartic {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
struct LinearSystemResult {
    int rank = 0;            // rank of the coefficient matrix
    int augmented_rank = 0;  // rank with the right-hand side appended
    std::optional<std::vector<K>> solution; // present iff consistent with full column rank
};

/// Gaussian elimination over a field for A x = b with A of size m x n.
template <class K>
LinearSystemResult<K> solve_linear(Matrix<K> a, std::vector<K> b, std::size_t n) {
    const std::size_t m = a.size();
    if (b.size() != m) fail(ErrorKind::InvalidArgument, "right-hand side has the wrong length");
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) fail(ErrorKind::InvalidArgument, "ragged matrix");
        a[i].push_back(b[i]);
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col <= n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        auto inv = a[row][col].inverse();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            auto f = a[r][col];
            for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    LinearSystemResult<K> res;
    res.augmented_rank = static_cast<int>(pivots.size());
    res.rank = res.augmented_rank - (!pivots.empty() && pivots.back() == n ? 1 : 0);
    if (res.rank == res.augmented_rank && res.rank == static_cast<int>(n)) {
        std::vector<K> x;
        for (std::size_t i = 0; i < n; ++i) x.push_back(a[i][n]);
        res.solution = std::move(x);
    }
    return res;
}

template <class K>
int matrix_rank(const Matrix<K>& a, const K& zero) {
    if (a.empty()) return 0;
    return solve_linear(a, std::vector<K>(a.size(), zero), a[0].size()).rank;
}

} // namespace quartic
