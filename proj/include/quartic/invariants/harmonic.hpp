#pragma once

#include "quartic/invariants/binary.hpp"
#include "quartic/invariants/ternary.hpp"

namespace quartic {

namespace detail {

inline std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

/// g(y,z) = q(-v y - w z, u y, u z) as a binary quartic whose coefficients
/// are forms in (u,v,w). This is u^4 q(-(v/u)y - (w/u)z, y, z) with the
/// denominators cleared.
template <class K>
BinaryQuartic<Poly<K>> cleared_restriction(const TernaryQuartic<K>& q) {
    PolyRing<K> R{q.ring(), vars_uvw()};
    auto g = BinaryQuartic<Poly<K>>::zero(R);
    const auto& mons = quartic_monomials();
    for (int n = 0; n < 15; ++n) {
        if (q[n].is_zero()) continue;
        auto [i, j, k] = mons[n];
        for (int m = 0; m <= i; ++m) {
            std::int64_t c = detail::binom(i, m) * (i % 2 ? -1 : 1);
            g.f[i - m + k].add_term(exps({j + k, m, i - m}), q[n] * q.ring().from_int(c));
        }
    }
    return g;
}

inline Exponents u_power(int e) { return exps({e, 0, 0}); }

/// Harmonic quartic H(q) in (u,v,w): S of the cleared restriction, divided by u^4.
template <class K>
Poly<K> harmonic_quartic(const TernaryQuartic<K>& q) {
    Poly<K> h = invariant_S(cleared_restriction(q)).divided_by_monomial(u_power(4));
    if (!h.is_homogeneous(4) && !h.is_zero()) fail(ErrorKind::Internal, "harmonic quartic is not homogeneous");
    return h;
}

/// Harmonic sextic K(q): T of the cleared restriction, divided by u^6.
template <class K>
Poly<K> harmonic_sextic(const TernaryQuartic<K>& q) {
    Poly<K> h = invariant_T(cleared_restriction(q)).divided_by_monomial(u_power(6));
    if (!h.is_homogeneous(6) && !h.is_zero()) fail(ErrorKind::Internal, "harmonic sextic is not homogeneous");
    return h;
}

/// Polar form of H: H(q+r) = H(q) + <q,r> + H(r).
template <class K>
Poly<K> bilinear_H(const TernaryQuartic<K>& q, const TernaryQuartic<K>& r) {
    if (!(q.ring() == r.ring())) fail(ErrorKind::RingMismatch, "quartics over different rings");
    return bilinear_S(cleared_restriction(q), cleared_restriction(r)).divided_by_monomial(u_power(4));
}

template <class K>
Poly<K> harmonic_quartic(const Poly<K>& q) { return harmonic_quartic(TernaryQuartic<K>::from_poly(q)); }
template <class K>
Poly<K> harmonic_sextic(const Poly<K>& q) { return harmonic_sextic(TernaryQuartic<K>::from_poly(q)); }

/// H(q) in characteristic 3 as the square ((q2 - q1)(vw,uw,uv) / (uvw)^2)^2,
/// q1 collecting the x^2yz-type terms and q2 the x^2y^2-type terms.
template <class K>
Poly<K> harmonic_char3_formula(const TernaryQuartic<K>& q) {
    if (q.ring().characteristic() != 3) fail(ErrorKind::Precondition, "square formula needs characteristic 3");
    Poly<K> d(q.ring(), vars_uvw());
    const auto& mons = quartic_monomials();
    for (int n = 0; n < 15; ++n) {
        auto [i, j, k] = mons[n];
        int ones = (i == 1) + (j == 1) + (k == 1);
        int twos = (i == 2) + (j == 2) + (k == 2);
        bool in_q1 = ones == 2 && twos == 1;
        bool in_q2 = twos == 2;
        if (!in_q1 && !in_q2) continue;
        // x -> vw, y -> uw, z -> uv
        Exponents e = exps({j + k, i + k, i + j});
        d.add_term(e, in_q2 ? q[n] : -q[n]);
    }
    Poly<K> s = d.divided_by_monomial(exps({2, 2, 2}));
    return s * s;
}

/// The square formula, checked against the general construction.
template <class K>
Poly<K> harmonic_char3_square(const TernaryQuartic<K>& q) {
    Poly<K> h = harmonic_char3_formula(q);
    if (!(h == harmonic_quartic(q))) fail(ErrorKind::VerificationFailed, "square formula disagrees with H");
    return h;
}

} // namespace quartic
