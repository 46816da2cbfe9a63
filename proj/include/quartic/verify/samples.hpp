#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "quartic/geometry/checks.hpp"
#include "quartic/reconstruction/hyperflex.hpp"
#include "quartic/reconstruction/vermeulen.hpp"

namespace quartic {

inline TernaryQuartic<Fp> random_quartic(const PrimeField& F, std::mt19937_64& rng) {
    TernaryQuartic<Fp> q(F);
    for (int n = 0; n < 15; ++n) q[n] = random_element(F, rng);
    return q;
}

inline std::vector<TernaryQuartic<Fp>> random_smooth_quartics(const PrimeField& F, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TernaryQuartic<Fp>> out;
    while (static_cast<int>(out.size()) < count) {
        auto q = random_quartic(F, rng);
        if (is_smooth(q.to_poly(), seed)) out.push_back(std::move(q));
    }
    return out;
}

/// Hyperinflection lines of q defined over the prime field, with contact points.
inline std::vector<HyperflexDatum<Fp>> rational_hyperflexes(const InflectionConfiguration& cfg, const PrimeField& F) {
    std::vector<HyperflexDatum<Fp>> out;
    auto down = [&](const std::array<GF, 3>& v) {
        std::array<Fp, 3> r;
        for (int i = 0; i < 3; ++i) r[i] = Fp(v[i].coeff(0), F.p);
        return r;
    };
    for (auto& o : cfg.orbits)
        if (o.degree() == 1 && o.flex.kind == FlexTag::Hyperinflection && o.flex.contact_point)
            out.push_back({ProjectiveLine<Fp>::normalized(down(o.line.c)), ProjectivePoint<Fp>::normalized(down(o.flex.contact_point->c))});
    return out;
}

/// Every hyperinflection entry of an expanded configuration as a datum over
/// the ambient field.
inline std::vector<HyperflexDatum<GF>> hyperflex_data(const InflectionConfiguration& cfg) {
    if (!cfg.expanded()) fail(ErrorKind::Precondition, "configuration lines are not listed over a common field");
    std::vector<HyperflexDatum<GF>> out;
    for (auto& e : cfg.entries)
        if (e.tag == FlexTag::Hyperinflection && e.contact_point) out.push_back({e.line, *e.contact_point});
    return out;
}

/// Smooth quartics in the three-hyperflex normal form over F_p with eight
/// hyperflex lines. Each comes from a Vermeulen quartic V_t with t a nonzero
/// square (four rational hyperflexes) moved to normal form along an ordered
/// triple of non-concurrent rational hyperflexes. Samples are distinct and
/// drawn in a seeded order.
inline std::vector<TernaryQuartic<Fp>> conc_normal_form_samples(const PrimeField& F, int count, std::uint64_t seed) {
    std::vector<TernaryQuartic<Fp>> pool;
    for (std::uint32_t s = 1; s < F.p; ++s) {
        Fp t = F.from_int(s) * F.from_int(s);
        if (t.is_one() || (t * F.from_int(81)).is_one()) continue;
        auto V = vermeulen_quartic(t);
        if (!is_smooth(V.to_poly(), seed)) continue;
        auto hf = rational_hyperflexes(inflection_configuration(V, seed), F);
        for (std::size_t i = 0; i < hf.size(); ++i)
            for (std::size_t j = 0; j < hf.size(); ++j)
                for (std::size_t k = 0; k < hf.size(); ++k) {
                    if (i == j || j == k || i == k) continue;
                    std::array<HyperflexDatum<Fp>, 3> d{hf[i], hf[j], hf[k]};
                    std::array<std::array<Fp, 3>, 3> rows{d[0].line.c, d[1].line.c, d[2].line.c};
                    if (det3(rows).is_zero()) continue;
                    TernaryQuartic<Fp> qn(F);
                    try {
                        qn = to_conc_normal_form(V, d);
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::Precondition) throw;
                        continue; // a contact point at a vertex of the frame triangle
                    }
                    if (std::find(pool.begin(), pool.end(), qn) == pool.end()) pool.push_back(std::move(qn));
                }
    }
    std::mt19937_64 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    if (static_cast<int>(pool.size()) < count) fail(ErrorKind::Precondition, "not enough distinct normal-form samples over this field");
    pool.erase(pool.begin() + count, pool.end());
    return pool;
}

} // namespace quartic
