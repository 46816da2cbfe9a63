#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quartic/invariants/pairing.hpp"

namespace quartic {

/// Element of gl3: entry (xi, eta) multiplies the operator xi * d/d(eta),
/// with indices 0, 1, 2 standing for x, y, z.
template <class K>
struct LieOperator {
    Mat3<K> c;

    K trace() const { return c[0][0] + c[1][1] + c[2][2]; }
    bool in_sl3() const { return trace().is_zero(); }
};

template <class K>
LieOperator<K> lie_basis_element(const typename K::ring_type& r, int xi, int eta) {
    LieOperator<K> g{identity3<K>(r)};
    for (auto& row : g.c)
        for (auto& x : row) x = r.zero();
    g.c[xi][eta] = r.one();
    return g;
}

/// The eight standard generators of sl3 with their printed names.
template <class K>
std::vector<std::pair<std::string, LieOperator<K>>> sl3_generators(const typename K::ring_type& r) {
    std::vector<std::pair<std::string, LieOperator<K>>> out;
    const char* v = "xyz";
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b)
                out.emplace_back(std::string(1, v[a]) + "*d" + v[b], lie_basis_element<K>(r, a, b));
    auto diff = [&](int a, int b) {
        LieOperator<K> g = lie_basis_element<K>(r, a, a);
        g.c[b][b] = -r.one();
        return g;
    };
    out.emplace_back("x*dx-y*dy", diff(0, 1));
    out.emplace_back("y*dy-z*dz", diff(1, 2));
    return out;
}

/// Action of g on a quartic as a first-order differential operator.
template <class K>
TernaryQuartic<K> lie_apply(const LieOperator<K>& g, const TernaryQuartic<K>& q) {
    TernaryQuartic<K> out(q.ring());
    const auto& mons = quartic_monomials();
    for (int n = 0; n < 15; ++n) {
        if (q[n].is_zero()) continue;
        for (int xi = 0; xi < 3; ++xi)
            for (int eta = 0; eta < 3; ++eta) {
                const K& c = g.c[xi][eta];
                if (c.is_zero() || mons[n][eta] == 0) continue;
                std::array<int, 3> e = mons[n];
                K term = c * q[n] * q.ring().from_int(e[eta]);
                --e[eta];
                ++e[xi];
                int t = quartic_index(e[0], e[1], e[2]);
                out[t] += term;
            }
    }
    return out;
}

/// H of the generic quartic over Z[a_ijk], computed once.
inline const Poly<Poly<Integer>>& generic_harmonic() {
    static const Poly<Poly<Integer>> h = harmonic_quartic(generic_quartic());
    return h;
}

struct LieIdentityResult {
    bool pass;
    Poly<Integer> residual; // zero exactly when pass
};

/// Expands <g q, H(q)> for the generic quartic and checks that it vanishes.
inline LieIdentityResult verify_lie_identity(const LieOperator<Integer>& g) {
    if (!g.in_sl3()) fail(ErrorKind::Precondition, "operator is not traceless");
    auto q = generic_quartic();
    LieOperator<Poly<Integer>> gg{identity3<Poly<Integer>>(q.ring())};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gg.c[i][j] = q.ring().from_integer(g.c[i][j].value());
    Poly<Integer> r = apolarity_pair(lie_apply(gg, q), generic_harmonic());
    return {r.is_zero(), r};
}

/// Left-hand side of the n-th coefficient identity (n = 1..6) with h = H(q).
/// Each is sum (i!j!k!/2) c_n(i,j,k) h_ijk where c_n reads off a shifted
/// coefficient of q as in the indexed formulas; all vanish identically.
template <class K>
K coefficient_identity(int index, const TernaryQuartic<K>& q) {
    if (index < 1 || index > 6) fail(ErrorKind::InvalidArgument, "identity index must be in 1..6");
    Poly<K> h = harmonic_quartic(q);
    const auto& R = q.ring();
    K acc = R.zero();
    for (auto& [e, hc] : h.terms()) {
        int i = e[0], j = e[1], k = e[2];
        K c = R.zero();
        switch (index) {
        case 1: c = R.from_int(i - j) * q.coeff(i, j, k); break;
        case 2: c = R.from_int(i + 1) * q.coeff(i + 1, j - 1, k); break;
        case 3: c = R.from_int(i + 1) * q.coeff(i + 1, j, k - 1); break;
        case 4: c = R.from_int(j - k) * q.coeff(i, j, k); break;
        case 5: c = R.from_int(j + 1) * q.coeff(i, j + 1, k - 1); break;
        case 6: c = R.from_int(j + 1) * q.coeff(i - 1, j + 1, k); break;
        }
        if (c.is_zero()) continue;
        acc += R.from_int(apolarity_weight(i, j, k)) * c * hc;
    }
    return acc;
}

} // namespace quartic
