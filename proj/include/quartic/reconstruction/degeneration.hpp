#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "quartic/invariants/harmonic.hpp"
#include "quartic/rings/local.hpp"

namespace quartic {

/// Divides out the largest power of t dividing every coefficient, then
/// sets t = 0. The zero polynomial maps to zero.
template <class K>
Poly<K> k_reduction(const Poly<Local<K>>& f) {
    const auto& base = f.base_ring().base;
    Poly<K> out(base, f.vars());
    if (f.is_zero()) return out;
    int v = std::numeric_limits<int>::max();
    for (auto& [e, c] : f.terms()) v = std::min(v, c.valuation());
    for (auto& [e, c] : f.terms()) out.add_term(e, c.shift_down(v).constant_term());
    return out;
}

template <class K>
TernaryQuartic<K> k_reduction(const TernaryQuartic<Local<K>>& q) {
    return TernaryQuartic<K>::from_poly(k_reduction(q.to_poly()));
}

/// r(H(q)): a derived quartic for the special fiber of the family q.
template <class K>
Poly<K> degenerate_harmonic(const TernaryQuartic<Local<K>>& q) {
    if (q.to_poly().is_zero()) fail(ErrorKind::InvalidArgument, "zero family");
    return k_reduction(harmonic_quartic(q));
}

template <class K>
struct DerivedSingularityReport {
    Poly<K> derived;             // r(H(family))
    std::array<K, 3> corner;     // coefficients of u^4, u^3v, u^3w
    bool pass = false;           // all three vanish: singular at [1:0:0]
};

/// For a family whose special fiber contains x = 0 with multiplicity at
/// least 3 (x^4 or x^3y), checks that the derived quartic r(H(family)) is
/// singular at the point [1:0:0] corresponding to that line.
template <class K>
DerivedSingularityReport<K> derived_singularity_check(const TernaryQuartic<K>& q_limit, const TernaryQuartic<Local<K>>& family) {
    const auto& R = q_limit.ring();
    auto only = [&](const TernaryQuartic<K>& q, int i, int j, int k) {
        for (int n = 0; n < 15; ++n) {
            auto m = quartic_monomials()[n];
            bool here = m[0] == i && m[1] == j && m[2] == k;
            if (here == q[n].is_zero()) return false;
        }
        return true;
    };
    if (!only(q_limit, 4, 0, 0) && !only(q_limit, 3, 1, 0)) fail(ErrorKind::InvalidArgument, "limit must be proportional to x^4 or x^3*y");
    TernaryQuartic<K> r = k_reduction(family);
    // r must be a nonzero multiple of q_limit
    int lead = 0;
    while (q_limit[lead].is_zero()) ++lead;
    if (r[lead].is_zero() || !(r.scaled(q_limit[lead]) == q_limit.scaled(r[lead])))
        fail(ErrorKind::InvalidArgument, "the family does not reduce to the given limit");
    DerivedSingularityReport<K> out{degenerate_harmonic(family), {R.zero(), R.zero(), R.zero()}, false};
    out.corner = {out.derived.coeff(exps({4, 0, 0})), out.derived.coeff(exps({3, 1, 0})), out.derived.coeff(exps({3, 0, 1}))};
    out.pass = out.corner[0].is_zero() && out.corner[1].is_zero() && out.corner[2].is_zero();
    return out;
}

} // namespace quartic
