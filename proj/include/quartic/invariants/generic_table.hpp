#pragma once

#include <vector>

#include "quartic/invariants/lie.hpp"

namespace quartic {

/// H(q) obtained by specializing the generic coefficient table h_ijk(a) at
/// the coefficients of q. Independent of the direct construction except for
/// the one-time generic expansion.
template <class K>
Poly<K> harmonic_from_generic_table(const TernaryQuartic<K>& q) {
    const auto& R = q.ring();
    std::vector<K> images;
    for (int n = 0; n < 15; ++n) images.push_back(q[n]);
    Poly<K> out(R, vars_uvw());
    for (auto& [e, c] : generic_harmonic().terms())
        out.add_term(e, c.eval_hom(R, images, [&](const Integer& z) { return R.from_integer(z.value()); }));
    return out;
}

/// True when the direct construction and the generic table agree on q.
template <class K>
bool cross_check_harmonic(const TernaryQuartic<K>& q) {
    return harmonic_quartic(q) == harmonic_from_generic_table(q);
}

} // namespace quartic
