#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "quartic/geometry/classify.hpp"
#include "quartic/geometry/contact.hpp"
#include "quartic/geometry/intersection.hpp"
#include "quartic/invariants/harmonic.hpp"

namespace quartic {

/// A Galois orbit of inflection lines, represented by its least conjugate.
struct LineOrbit {
    ProjectiveLine<GF> line;
    int multiplicity = 1;
    FlexClassification<GF> flex;
    int degree() const { return line.c[0].field()->k; }
};

/// One inflection line over the ambient field.
struct ConfigurationEntry {
    ProjectiveLine<GF> line;
    int multiplicity = 1;
    FlexTag tag = FlexTag::Unclassified;
    std::optional<ProjectivePoint<GF>> contact_point;
};

struct InflectionConfiguration {
    std::uint32_t p = 0;
    std::vector<LineOrbit> orbits;
    const GaloisField* ambient = nullptr; // null when the splitting field exceeds the cap
    std::vector<ConfigurationEntry> entries;

    int total_multiplicity() const {
        int s = 0;
        for (auto& o : orbits) s += o.multiplicity * o.degree();
        return s;
    }
    bool expanded() const { return ambient != nullptr; }
};

struct ConfigurationOptions {
    int max_ambient_degree = 256;
};

inline TernaryQuartic<GF> lift_quartic(const TernaryQuartic<Fp>& q, const GaloisField* F) {
    return map_quartic<GF>(q, GaloisRing{F}, [&](const Fp& a) { return to_gf(a, F); });
}

namespace detail {

inline Poly<Fp> to_binary(const Poly<Fp>& r, const VarSet* bin) {
    Poly<Fp> out(r.base_ring(), bin);
    for (auto& [e, c] : r.terms()) out.add_term(exps({e[0], e[1]}), c);
    return out;
}

/// Solves H = K = 0 once in generic coordinates; nullopt asks for a retry.
inline std::optional<std::vector<LineOrbit>> configuration_attempt(const TernaryQuartic<Fp>& q, const Poly<Fp>& H, const Poly<Fp>& K,
                                                                   std::uint64_t s) {
    const PrimeField F = q.ring();
    std::mt19937_64 rng(s);
    Mat3<Fp> M = random_gl3(F, rng);
    Poly<Fp> H2 = compose_linear(H, M), K2 = compose_linear(K, M);
    if (H2.coeff(exps({0, 0, 4})).is_zero() || K2.coeff(exps({0, 0, 6})).is_zero()) return std::nullopt;
    Poly<Fp> R = resultant(H2, K2, "w");
    if (R.is_zero()) return std::nullopt;
    std::vector<LineOrbit> out;
    for (auto& o : binary_root_orbits(to_binary(R, vars_uv()), s)) {
        auto lines = fiber_points({H2, K2}, M, o, s);
        if (!lines || lines->empty()) return std::nullopt;
        for (auto& line : *lines) {
            GaloisRing G = line.c[0].ring();
            auto lift = [&](const Poly<Fp>& f) { return f.map_coefficients<GF>(G, [&](const Fp& a) { return to_gf(a, G.field); }); };
            int m = intersection_multiplicity(lift(H), lift(K), line.c);
            auto flex = contact_analysis(lift_quartic(q, G.field), line.c);
            out.push_back({line, m, flex});
        }
    }
    return out;
}

} // namespace detail

/// The inflection scheme H(q) = K(q) = 0 of a quartic over F_p, p >= 5, as
/// lines with multiplicities and contact classification. Every line is
/// also listed over the smallest field containing all of them unless that
/// field has degree above options.max_ambient_degree.
inline InflectionConfiguration inflection_configuration(const TernaryQuartic<Fp>& q, std::uint64_t seed = 0,
                                                        ConfigurationOptions options = {}) {
    const std::uint32_t p = q.ring().p;
    require_char_coprime_to_6(p);
    SchemeClass cls = classify_inflection_dimension(q, seed);
    if (!is_finite(cls)) fail(ErrorKind::NotFinite, label(cls));
    Poly<Fp> H = harmonic_quartic(q), K = harmonic_sextic(q);
    InflectionConfiguration cfg;
    cfg.p = p;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        if (auto orbits = detail::configuration_attempt(q, H, K, derive_seed(seed, attempt))) {
            cfg.orbits = std::move(*orbits);
            break;
        }
    }
    if (cfg.orbits.empty()) fail(ErrorKind::RetryExhausted, "no generic projection found; the field may be too small");
    std::sort(cfg.orbits.begin(), cfg.orbits.end(), [](const LineOrbit& a, const LineOrbit& b) {
        return canonical_point_less(a.line, b.line);
    });
    if (cfg.total_multiplicity() != 24) fail(ErrorKind::Internal, "inflection scheme does not have length 24");

    int L = 1;
    for (auto& o : cfg.orbits) L = std::lcm(L, o.degree());
    if (L > options.max_ambient_degree) return cfg;
    cfg.ambient = galois_field(p, L);
    GaloisRing A{cfg.ambient};
    for (auto& o : cfg.orbits) {
        std::array<GF, 3> l;
        for (int i = 0; i < 3; ++i) l[i] = embed(o.line.c[i], A);
        std::optional<std::array<GF, 3>> pt;
        if (o.flex.contact_point) {
            pt.emplace();
            for (int i = 0; i < 3; ++i) (*pt)[i] = embed(o.flex.contact_point->c[i], A);
        }
        for (int j = 0; j < o.degree(); ++j) {
            ConfigurationEntry e{ProjectiveLine<GF>{l}, o.multiplicity, o.flex.kind, std::nullopt};
            if (pt) e.contact_point = ProjectivePoint<GF>{*pt};
            cfg.entries.push_back(std::move(e));
            for (auto& x : l) x = x.frobenius();
            if (pt)
                for (auto& x : *pt) x = x.frobenius();
        }
    }
    return cfg;
}

} // namespace quartic
