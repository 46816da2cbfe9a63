#pragma once

#include "quartic/invariants/ternary.hpp"

namespace quartic {

/// V_t: t x^4 + y^4 - z^4 - 2x^2y^2 - 4xyz^2.
template <class K>
TernaryQuartic<K> vermeulen_quartic(const K& t) {
    const auto R = t.ring();
    TernaryQuartic<K> q(R);
    q.set(4, 0, 0, t);
    q.set(0, 4, 0, R.one());
    q.set(0, 0, 4, -R.one());
    q.set(2, 2, 0, R.from_int(-2));
    q.set(1, 1, 2, R.from_int(-4));
    return q;
}

/// V_t with x and y exchanged; at t = -1 this is x^4 - y^4 - z^4 - 2x^2y^2 - 4xyz^2.
template <class K>
TernaryQuartic<K> vermeulen_swapped(const K& t) {
    const auto R = t.ring();
    TernaryQuartic<K> q(R);
    q.set(0, 4, 0, t);
    q.set(4, 0, 0, R.one());
    q.set(0, 0, 4, -R.one());
    q.set(2, 2, 0, R.from_int(-2));
    q.set(1, 1, 2, R.from_int(-4));
    return q;
}

/// -3u^4 - 3t v^4 + (3t+1) w^4 + 10u^2v^2 + 8uvw^2, an equation of H(V_t);
/// the contravariant itself is 4 times this form.
template <class K>
Poly<K> vermeulen_harmonic(const K& t) {
    const auto R = t.ring();
    Poly<K> h(R, vars_uvw());
    h.add_term(exps({4, 0, 0}), R.from_int(-3));
    h.add_term(exps({0, 4, 0}), R.from_int(-3) * t);
    h.add_term(exps({0, 0, 4}), R.from_int(3) * t + R.one());
    h.add_term(exps({2, 2, 0}), R.from_int(10));
    h.add_term(exps({1, 1, 2}), R.from_int(8));
    return h;
}

} // namespace quartic
