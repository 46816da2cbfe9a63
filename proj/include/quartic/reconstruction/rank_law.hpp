#pragma once

#include <array>
#include <vector>

#include "quartic/poly/linear.hpp"
#include "quartic/poly/resultant.hpp"
#include "quartic/rings/prime_field.hpp"
#include "quartic/reconstruction/hyperflex.hpp"

namespace quartic {

/// The 6 x 3 matrix stacking the row blocks of z = a x + b y and z = c x + d y.
template <class K>
Matrix<K> stacked_matrix(const K& a, const K& b, const K& c, const K& d) {
    Matrix<K> m;
    for (auto& blk : {hyperflex_row_block(a, b), hyperflex_row_block(c, d)})
        for (auto& row : blk) m.push_back({row[0], row[1], row[2]});
    return m;
}

struct RankLawCertificate {
    bool minors_factor = false; // every 3x3 minor equals its listed factorization
    bool exhaustive = false;    // rank 3 exactly off the excluded locus, all points of F_p^4
    std::uint32_t p = 0;
    bool pass() const { return minors_factor && exhaustive; }
};

/// Symbolic part: over Z[a,b,c,d] each 3x3 minor of the stacked matrix is
/// (a quadratic monomial in one pair) * (one of c(a-c), ad+bc-2cd, d(b-d),
/// a(a-c), 2ab-ad-bc, b(b-d)) or zero. If all minors vanish and (a,b) != 0,
/// then c(a-c) = d(b-d) = 0; if also (c,d) != 0 then a(a-c) = b(b-d) = 0.
/// Together a = c and b = d, so rank 3 holds off the excluded locus; on it
/// rank <= 2 since one block has rank <= 2.
inline RankLawCertificate rank_law_certificate(std::uint32_t p = 7) {
    RankLawCertificate cert;
    IntegerRing Z;
    const VarSet* vs = varset({"a", "b", "c", "d"});
    using P = Poly<Integer>;
    P a = P::variable(Z, vs, "a"), b = P::variable(Z, vs, "b"), c = P::variable(Z, vs, "c"), d = P::variable(Z, vs, "d");
    P zero(Z, vs);
    auto k = [&](std::int64_t n) { return P::constant(Z, vs, Integer(n)); };
    Matrix<P> m = stacked_matrix(a, b, c, d);
    // factors by row triple (i<j<k), listed in lexicographic order
    P ac = a - c, bd = b - d, m1 = a * d + b * c - k(2) * c * d, m2 = k(2) * a * b - a * d - b * c;
    const std::vector<P> expected = {
        zero,                      // 0 1 2
        -(a * a * c * ac),         // 0 1 3
        -(a * a * m1),             // 0 1 4
        -(a * a * d * bd),         // 0 1 5
        -(a * b * c * ac),         // 0 2 3
        -(a * b * m1),             // 0 2 4
        -(a * b * d * bd),         // 0 2 5
        a * c * c * ac,            // 0 3 4
        a * c * d * ac,            // 0 3 5
        a * d * d * ac,            // 0 4 5
        -(b * b * c * ac),         // 1 2 3
        -(b * b * m1),             // 1 2 4
        -(b * b * d * bd),         // 1 2 5
        c * c * m2,                // 1 3 4
        c * d * m2,                // 1 3 5
        d * d * m2,                // 1 4 5
        b * c * c * bd,            // 2 3 4
        b * c * d * bd,            // 2 3 5
        b * d * d * bd,            // 2 4 5
        zero,                      // 3 4 5
    };
    std::size_t n = 0;
    cert.minors_factor = true;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int l = j + 1; l < 6; ++l) {
                std::vector<std::vector<P>> sub{m[i], m[j], m[l]};
                if (!(bareiss_determinant(sub, k(1)) == expected[n])) cert.minors_factor = false;
                ++n;
            }

    cert.p = p;
    cert.exhaustive = true;
    PrimeField F = make_prime_field(p);
    for (std::uint32_t ia = 0; ia < p; ++ia)
        for (std::uint32_t ib = 0; ib < p; ++ib)
            for (std::uint32_t ic = 0; ic < p; ++ic)
                for (std::uint32_t id = 0; id < p; ++id) {
                    Fp A = F.from_int(ia), B = F.from_int(ib), C = F.from_int(ic), D = F.from_int(id);
                    bool excluded = (ia == ic && ib == id) || (ia == 0 && ib == 0) || (ic == 0 && id == 0);
                    int r = matrix_rank(stacked_matrix(A, B, C, D), F.zero());
                    if ((r == 3) == excluded) cert.exhaustive = false;
                }
    return cert;
}

} // namespace quartic
