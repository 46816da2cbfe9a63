#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "quartic/poly/embedding.hpp"
#include "quartic/poly/factor.hpp"
#include "quartic/poly/polynomial.hpp"
#include "quartic/poly/univariate.hpp"

namespace quartic {

/// One Galois orbit of roots of a binary form over F_p: the point [alpha:1]
/// (or [1:0] when at_infinity) with alpha generating F_{p^d}.
struct RootOrbit {
    const GaloisField* field; // F_{p^d}, d = orbit size
    GF alpha;
    bool at_infinity = false;
    int multiplicity = 1;
    int degree() const { return field->k; }
};

/// A single projective root [alpha:beta] over some finite field.
struct BinaryRoot {
    std::array<GF, 2> point;
    int multiplicity;
};

inline UPoly<Fp> dehomogenize_binary(const Poly<Fp>& f) {
    if (f.nvars() != 2 || !f.is_homogeneous()) fail(ErrorKind::InvalidArgument, "expected a binary form");
    std::vector<Fp> c(f.total_degree() + 1, f.base_ring().zero());
    for (auto& [e, a] : f.terms()) c[e[0]] += a;
    return UPoly<Fp>(f.base_ring(), std::move(c));
}

/// One root of an irreducible polynomial over F_p in F_{p^d}, d = its degree.
inline GF root_of_irreducible(const UPoly<Fp>& h, std::uint64_t seed) {
    const GaloisField* F = galois_field(h.ring().p, h.deg());
    GaloisRing R{F};
    auto hg = map_upoly<GF>(h, R, [&](const Fp& a) { return to_gf(a, F); });
    auto roots = field_roots(hg, seed);
    if (roots.empty()) fail(ErrorKind::Internal, "irreducible factor has no root in its splitting field");
    return roots.front();
}

/// Root orbits of a nonzero binary form over F_p with multiplicities.
inline std::vector<RootOrbit> binary_root_orbits(const Poly<Fp>& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "zero form has no isolated roots");
    std::vector<RootOrbit> out;
    int n = f.total_degree();
    UPoly<Fp> g = dehomogenize_binary(f);
    const std::uint32_t p = f.base_ring().p;
    if (n - g.deg() > 0) {
        const GaloisField* F1 = galois_field(p, 1);
        out.push_back({F1, GaloisRing{F1}.zero(), true, n - g.deg()});
    }
    if (g.deg() > 0) {
        auto fac = factor_univariate(g, seed);
        for (auto& [h, m] : fac.factors) {
            GF a = root_of_irreducible(h, seed);
            out.push_back({a.field(), a, false, m});
        }
    }
    return out;
}

inline int lcm_of_degrees(const std::vector<RootOrbit>& orbits) {
    int l = 1;
    for (auto& o : orbits) l = std::lcm(l, o.degree());
    return l;
}

/// All projective roots with multiplicities over `target` (or over the
/// splitting field when target is null). Multiplicities sum to the degree.
inline std::vector<BinaryRoot> root_multiplicities(const Poly<Fp>& f, const GaloisField* target, std::uint64_t seed = 0) {
    auto orbits = binary_root_orbits(f, seed);
    if (!target) target = galois_field(f.base_ring().p, lcm_of_degrees(orbits));
    GaloisRing T{target};
    std::vector<BinaryRoot> out;
    for (auto& o : orbits) {
        if (target->k % o.degree() != 0)
            fail(ErrorKind::Precondition, "target field " + target->name() + " does not contain all roots");
        if (o.at_infinity) {
            out.push_back({{T.one(), T.zero()}, o.multiplicity});
            continue;
        }
        GF r = embed(o.alpha, T);
        for (int j = 0; j < o.degree(); ++j) {
            out.push_back({{r, T.one()}, o.multiplicity});
            r = r.frobenius();
        }
    }
    return out;
}

} // namespace quartic
