#pragma once

#include "quartic/invariants/harmonic.hpp"

namespace quartic {

/// i!j!k!/2 for a quartic monomial; always an integer (12, 3, 2 or 1).
inline std::int64_t apolarity_weight(int i, int j, int k) {
    auto fact = [](int n) {
        std::int64_t r = 1;
        for (int t = 2; t <= n; ++t) r *= t;
        return r;
    };
    return fact(i) * fact(j) * fact(k) / 2;
}

/// <q, h> = sum (i!j!k!/2) a_ijk h_ijk for a quartic q and a dual quartic h.
template <class K>
K apolarity_pair(const TernaryQuartic<K>& q, const Poly<K>& h) {
    if (h.nvars() != 3) fail(ErrorKind::InvalidArgument, "dual quartic needs three variables");
    if (!(h.base_ring() == q.ring())) fail(ErrorKind::RingMismatch, "pairing across different rings");
    K acc = q.ring().zero();
    for (auto& [e, c] : h.terms()) {
        int n = quartic_index(e[0], e[1], e[2]);
        if (n < 0) fail(ErrorKind::InvalidArgument, "dual form is not a quartic");
        if (q[n].is_zero()) continue;
        acc += q.ring().from_int(apolarity_weight(e[0], e[1], e[2])) * q[n] * c;
    }
    return acc;
}

/// A(q) = <q, H(q)>.
template <class K>
K invariant_A(const TernaryQuartic<K>& q) { return apolarity_pair(q, harmonic_quartic(q)); }

/// t(q1,q2,q3) = <q1, <q2,q3>_H>.
template <class K>
K trilinear_t(const TernaryQuartic<K>& q1, const TernaryQuartic<K>& q2, const TernaryQuartic<K>& q3) {
    if (!(q1.ring() == q2.ring()) || !(q1.ring() == q3.ring())) fail(ErrorKind::RingMismatch, "quartics over different rings");
    return apolarity_pair(q1, bilinear_H(q2, q3));
}

} // namespace quartic
