#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "quartic/geometry/configuration.hpp"
#include "quartic/poly/parse.hpp"
#include "quartic/rings/dual.hpp"

namespace quartic {

template <class K>
bool is_totally_harmonic(const TernaryQuartic<K>& q) {
    return harmonic_quartic(q).is_zero();
}

struct NormalFormCheck {
    std::string form;
    std::uint32_t characteristic; // 0 for Q
    bool expect_totally_harmonic;
    bool totally_harmonic;
    bool pass() const { return expect_totally_harmonic == totally_harmonic; }
};

inline bool totally_harmonic_in_char(const std::string& form, std::uint32_t p) {
    if (p == 0) return is_totally_harmonic(TernaryQuartic<Rational>::from_poly(parse_polynomial(form, RationalField{}, vars_xyz())));
    return is_totally_harmonic(TernaryQuartic<Fp>::from_poly(parse_polynomial(form, make_prime_field(p), vars_xyz())));
}

/// Forward check of the classification of totally harmonic quartics: each
/// normal form in its characteristic, plus forms expected not to qualify.
inline std::vector<NormalFormCheck> verify_normal_forms_totally_harmonic() {
    struct Case {
        const char* form;
        std::vector<std::uint32_t> chars;
        bool expect;
    };
    const std::vector<Case> cases = {
        // binary forms with S = 0
        {"y^4-y*z^3", {0, 2, 5, 7, 13}, true},
        {"y^4+z^4", {3}, true},
        {"y^3*z", {0, 2, 3, 5, 7}, true},
        {"y^4", {0, 2, 3, 5, 7}, true},
        {"x^4+y^3*z", {2, 3}, true},
        {"x*(x^2*y+z^3)", {3}, true},
        {"x^4+y^4+z^4", {3}, true},
        {"x^3*y+y^3*z+z^3*x", {3}, true},
        {"x^4+y^3*z", {0, 5, 7}, false},
        {"x*(x^2*y+z^3)", {0, 5}, false},
        {"x^4+y^4+z^4", {0, 5, 13}, false},
        {"x^3*y+y^3*z+z^3*x", {0, 7}, false},
        {"x^2*y*z+x*y^3+x*z^3+y^4", {0}, false},
    };
    std::vector<NormalFormCheck> out;
    for (auto& c : cases)
        for (auto p : c.chars) out.push_back({c.form, p, c.expect, totally_harmonic_in_char(c.form, p)});
    return out;
}

/// Number of lines of a Galois orbit passing through a point, over the
/// point's field. The conjugates of the orbit line are l(b) for the roots b
/// of the modulus m of its field, so the count is deg gcd(<P, l(T)>, m(T)).
inline int orbit_lines_through(const LineOrbit& o, const std::array<GF, 3>& P) {
    GaloisRing F = P[0].ring();
    const GaloisField* Fk = o.line.c[0].field();
    auto lift = [&](std::uint32_t c) { return to_gf(Fp(c, Fk->p), F.field); };
    UPoly<GF> D(F);
    for (int i = 0; i < 3; ++i) {
        const auto& cs = o.line.c[i].coeffs();
        std::vector<GF> a;
        for (auto c : cs) a.push_back(lift(c));
        D += UPoly<GF>(F, std::move(a)) * UPoly<GF>::constant(F, P[i]);
    }
    std::vector<GF> m;
    for (auto c : Fk->modulus) m.push_back(lift(c));
    return gcd(D, UPoly<GF>(F, std::move(m))).deg();
}

/// Total multiplicity of the configuration lines through a point.
inline int pencil_multiplicity(const InflectionConfiguration& cfg, const std::array<GF, 3>& point) {
    int s = 0;
    for (auto& o : cfg.orbits) s += o.multiplicity * orbit_lines_through(o, point);
    return s;
}

struct ConcurrencyReport {
    bool pass = false;
    int max_pencil = 0;
};

/// Every pencil spanned by two configuration lines carries total
/// multiplicity at most 8. By Galois invariance it suffices to take the
/// first line among orbit representatives.
inline ConcurrencyReport concurrency_bound_check(const InflectionConfiguration& cfg) {
    ConcurrencyReport r;
    for (auto& oi : cfg.orbits)
        for (auto& oj : cfg.orbits) {
            GaloisRing F{galois_field(cfg.p, std::lcm(oi.degree(), oj.degree()))};
            std::array<GF, 3> li, lj;
            for (int i = 0; i < 3; ++i) {
                li[i] = embed(oi.line.c[i], F);
                lj[i] = embed(oj.line.c[i], F);
            }
            for (int s = 0; s < oj.degree(); ++s) {
                auto P = cross(li, lj);
                if (!all_zero(P)) r.max_pencil = std::max(r.max_pencil, pencil_multiplicity(cfg, P));
                for (auto& x : lj) x = x.frobenius();
            }
        }
    r.pass = r.max_pencil <= 8;
    return r;
}

/// First-order test at a hyperinflection line l of C at p in direction q:
/// (S((q_C + eps q)|_l) = 0, q(p) = 0). The two answers agree when the
/// tangent space to the hyperinflection locus is the sections vanishing at p.
template <class K>
std::pair<bool, bool> tangent_condition_check(const TernaryQuartic<K>& qc, const std::array<K, 3>& line, const TernaryQuartic<K>& q) {
    auto flex = contact_analysis(qc, line);
    if (flex.kind != FlexTag::Hyperinflection) fail(ErrorKind::NotInflectionLine, "line is not a hyperinflection line of the curve");
    const auto& R = qc.ring();
    DualRing<K> D{R};
    TernaryQuartic<Dual<K>> def(D);
    for (int n = 0; n < 15; ++n) def[n] = Dual<K>(qc[n], q[n]);
    std::array<Dual<K>, 3> l;
    for (int i = 0; i < 3; ++i) l[i] = embed_dual(line[i]);
    Dual<K> s = invariant_S(restrict_to_line(def, l));
    auto& p = flex.contact_point->c;
    bool vanishes_at_p = q.to_poly().evaluate({p[0], p[1], p[2]}).is_zero();
    return {s.is_zero(), vanishes_at_p};
}

/// At a hyperinflection line, H is smooth and its tangent line in the dual
/// plane is the pencil of lines through the contact point.
inline bool harmonic_tangent_is_pencil(const TernaryQuartic<Fp>& q, const ProjectiveLine<GF>& line,
                                       const std::optional<ProjectivePoint<GF>>& contact) {
    if (!contact) return false;
    GaloisRing G = line.c[0].ring();
    Poly<GF> H = harmonic_quartic(lift_quartic(q, G.field));
    if (!H.evaluate({line.c[0], line.c[1], line.c[2]}).is_zero()) return false;
    auto g = gradient_at(H, line.c);
    return !all_zero(g) && all_zero(cross(g, contact->c));
}

inline bool harmonic_tangent_is_pencil(const TernaryQuartic<Fp>& q, const ConfigurationEntry& e) {
    return harmonic_tangent_is_pencil(q, e.line, e.contact_point);
}

/// The laws a configuration of a smooth quartic obeys.
struct ConfigurationLaws {
    bool length_24 = false;
    bool tags_match_multiplicity = false; // simple <-> 1, hyperinflection <-> 2
    bool harmonic_vanishes = false;
    bool hyperflex_tangents = false;
    int hyperflexes = 0; // hyperinflection lines counted over the algebraic closure
    bool all() const { return length_24 && tags_match_multiplicity && harmonic_vanishes && hyperflex_tangents; }
};

/// Checked on one line per Galois orbit; the laws are Galois invariant.
inline ConfigurationLaws check_configuration_laws(const TernaryQuartic<Fp>& q, const InflectionConfiguration& cfg) {
    ConfigurationLaws r;
    r.tags_match_multiplicity = r.harmonic_vanishes = r.hyperflex_tangents = true;
    for (auto& o : cfg.orbits) {
        bool simple = o.flex.kind == FlexTag::Simple, hyper = o.flex.kind == FlexTag::Hyperinflection;
        if ((simple != (o.multiplicity == 1)) || (hyper != (o.multiplicity == 2)) || !(simple || hyper)) r.tags_match_multiplicity = false;
        Poly<GF> H = harmonic_quartic(lift_quartic(q, o.line.c[0].field()));
        if (!H.evaluate({o.line.c[0], o.line.c[1], o.line.c[2]}).is_zero()) r.harmonic_vanishes = false;
        if (hyper) {
            r.hyperflexes += o.degree();
            if (!harmonic_tangent_is_pencil(q, o.line, o.flex.contact_point)) r.hyperflex_tangents = false;
        }
    }
    r.length_24 = cfg.total_multiplicity() == 24;
    return r;
}

/// H of a smooth quartic is reduced: no repeated factor.
template <class K>
bool harmonic_is_squarefree(const TernaryQuartic<K>& q) {
    Poly<K> H = harmonic_quartic(q);
    if (H.is_zero()) return false;
    Poly<K> g = poly_gcd(H, partials_gcd(H));
    return g.total_degree() == 0;
}

/// (line, multiplicity) pairs sorted canonically.
inline std::vector<std::pair<ProjectiveLine<GF>, int>> line_multiset(const InflectionConfiguration& cfg) {
    std::vector<std::pair<ProjectiveLine<GF>, int>> out;
    for (auto& e : cfg.entries) out.push_back({e.line, e.multiplicity});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (canonical_point_less(a.first, b.first)) return true;
        if (canonical_point_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

/// The configuration of q o M is the configuration of q with lines mapped
/// by the transpose of M.
inline bool configuration_is_equivariant(const TernaryQuartic<Fp>& q, const Mat3<Fp>& M, std::uint64_t seed = 0) {
    auto c1 = inflection_configuration(q, seed);
    auto c2 = inflection_configuration(TernaryQuartic<Fp>::from_poly(compose_linear(q.to_poly(), M)), seed);
    if (!c1.expanded() || !c2.expanded() || c1.ambient != c2.ambient) return false;
    Mat3<GF> Mt = transpose3(lift_matrix(M, c1.ambient));
    InflectionConfiguration moved = c1;
    for (auto& e : moved.entries) e.line = ProjectiveLine<GF>::normalized(apply3(Mt, e.line.c));
    return line_multiset(moved) == line_multiset(c2);
}

} // namespace quartic
