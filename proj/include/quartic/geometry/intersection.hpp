#pragma once

#include <algorithm>
#include <array>
#include <utility>

#include "quartic/geometry/line.hpp"

namespace quartic {

namespace detail {

template <class K>
UPoly<K> on_first_axis(const Poly<K>& f) {
    std::vector<K> c(std::max(0, f.degree_in(0) + 1), f.base_ring().zero());
    for (auto& [e, a] : f.terms())
        if (e[1] == 0) c[e[0]] += a;
    return UPoly<K>(f.base_ring(), std::move(c));
}

template <class K>
int order_at_zero(const UPoly<K>& f) {
    int i = 0;
    while (f.coeff(i).is_zero()) ++i;
    return i;
}

} // namespace detail

/// Intersection multiplicity at the origin of two affine plane curves in
/// two variables (Fulton's algorithm).
template <class K>
int affine_intersection_multiplicity(Poly<K> F, Poly<K> G) {
    int acc = 0;
    while (true) {
        if (!F.constant_coeff().is_zero() || !G.constant_coeff().is_zero()) return acc;
        UPoly<K> f0 = detail::on_first_axis(F), g0 = detail::on_first_axis(G);
        if (f0.is_zero() && g0.is_zero()) fail(ErrorKind::NonIsolatedSingularLocus, "curves share a component through the point");
        if (g0.is_zero()) {
            std::swap(F, G);
            std::swap(f0, g0);
        }
        if (f0.is_zero()) {
            F = F.divided_by_monomial(exps({0, 1}));
            acc += detail::order_at_zero(g0);
            continue;
        }
        if (f0.deg() > g0.deg()) {
            std::swap(F, G);
            std::swap(f0, g0);
        }
        G = G.scaled(f0.lead()) - F.shifted(exps({g0.deg() - f0.deg(), 0})).scaled(g0.lead());
    }
}

/// A ternary form in local coordinates (X, Y) centered at a projective
/// point, in the chart where its first nonzero coordinate is 1.
template <class K>
Poly<K> localize_at(const Poly<K>& f, const std::array<K, 3>& P) {
    const auto& R = f.base_ring();
    auto pt = Projective<K>::normalized(P);
    int j = pt.first_nonzero();
    const VarSet* xy = varset({"X", "Y"});
    PolyRing<K> A{R, xy};
    std::vector<Poly<K>> img;
    int k = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == j) {
            img.push_back(A.one());
        } else {
            img.push_back(Poly<K>::variable(R, xy, k == 0 ? "X" : "Y") + Poly<K>::constant(R, xy, pt.c[i]));
            ++k;
        }
    }
    return f.eval_hom(A, img, [&](const K& c) { return Poly<K>::constant(R, xy, c); });
}

/// Intersection multiplicity of two ternary forms at a projective point.
template <class K>
int intersection_multiplicity(const Poly<K>& F, const Poly<K>& G, const std::array<K, 3>& P) {
    return affine_intersection_multiplicity(localize_at(F, P), localize_at(G, P));
}

/// Multiplicity of the point P on the curve f = 0: the lowest degree of the
/// local expansion, valid in every characteristic.
template <class K>
int multiplicity_at(const Poly<K>& f, const std::array<K, 3>& P) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "zero form");
    Poly<K> g = localize_at(f, P);
    int m = f.total_degree();
    for (auto& [e, c] : g.terms()) m = std::min(m, e[0] + e[1]);
    return m;
}

} // namespace quartic
