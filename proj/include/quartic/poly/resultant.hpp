#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quartic/poly/polynomial.hpp"

namespace quartic {

/// Fraction-free (Bareiss) determinant over an integral domain whose elements
/// provide exact_div. Over a field this is ordinary elimination with the
/// same number of operations.
template <class E>
E bareiss_determinant(std::vector<std::vector<E>> m, const E& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    E prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return one - one;
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                E t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = prev.is_one() ? std::move(t) : t.exact_div(prev);
            }
            m[i][k] = one - one;
        }
        prev = m[k][k];
    }
    E d = m[n - 1][n - 1];
    return negate ? -d : d;
}

/// Sylvester resultant of f and g with respect to `var`; the coefficients
/// live in the remaining variables of the same variable set.
template <class K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, const std::string& var) {
    if (f.vars() != g.vars() || !(f.base_ring() == g.base_ring()))
        fail(ErrorKind::RingMismatch, "resultant of polynomials over different rings");
    std::size_t vi = f.vars()->index(var);
    int m = f.degree_in(vi), n = g.degree_in(vi);
    if (m <= 0 && n <= 0) fail(ErrorKind::InvalidArgument, "variable '" + var + "' absent from both inputs");
    auto one = f.ring().one();
    if (f.is_zero() || g.is_zero()) return f.ring().zero();
    if (m == 0) return f.pow(static_cast<unsigned>(n));
    if (n == 0) return g.pow(static_cast<unsigned>(m));
    auto fc = f.coefficients_in(vi), gc = g.coefficients_in(vi);
    const int s = m + n;
    std::vector<std::vector<Poly<K>>> mat(s, std::vector<Poly<K>>(s, f.ring().zero()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) mat[r][r + (m - i)] = fc[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) mat[n + r][r + (n - i)] = gc[i];
    return bareiss_determinant(std::move(mat), one);
}

} // namespace quartic
