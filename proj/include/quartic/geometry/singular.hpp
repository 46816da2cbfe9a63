#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quartic/core/seed.hpp"
#include "quartic/geometry/intersection.hpp"
#include "quartic/geometry/line.hpp"
#include "quartic/poly/embedding.hpp"
#include "quartic/poly/gcd.hpp"
#include "quartic/poly/resultant.hpp"
#include "quartic/poly/roots.hpp"

namespace quartic {

/// gcd of the three partial derivatives (and of f itself if requested).
template <class K>
Poly<K> partials_gcd(const Poly<K>& f, bool include_f = false) {
    Poly<K> g = poly_gcd(f.derivative(0), poly_gcd(f.derivative(1), f.derivative(2)));
    if (include_f) g = poly_gcd(g, f);
    return g;
}

inline Mat3<Fp> random_gl3(const PrimeField& F, std::mt19937_64& rng) {
    while (true) {
        Mat3<Fp> m;
        for (auto& row : m)
            for (auto& x : row) x = random_element(F, rng);
        if (!det3(m).is_zero()) return m;
    }
}

/// Fp matrix embedded into a finite field.
inline Mat3<GF> lift_matrix(const Mat3<Fp>& m, const GaloisField* F) {
    Mat3<GF> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = to_gf(m[i][j], F);
    return r;
}

template <class K0, class K>
K evaluate_lifted(const Poly<K0>& f, const std::array<K, 3>& p, const typename K::ring_type& R) {
    return f.eval_hom(R, std::vector<K>(p.begin(), p.end()), [&](const K0& c) { return embed(c, R); });
}

/// f(x0, y0, z) as a univariate polynomial in the third variable.
inline UPoly<GF> fiber_in_third(const Poly<Fp>& f, const GF& x0, const GF& y0) {
    GaloisRing R = x0.ring();
    std::vector<GF> c(std::max(0, f.degree_in(2) + 1), R.zero());
    for (auto& [e, a] : f.terms()) {
        GF t = to_gf(a, R.field);
        for (int i = 0; i < e[0]; ++i) t *= x0;
        for (int i = 0; i < e[1]; ++i) t *= y0;
        c[e[2]] += t;
    }
    return UPoly<GF>(R, std::move(c));
}

/// Least representative of the Frobenius orbit of a point, for canonical output.
inline ProjectivePoint<GF> canonical_conjugate(const ProjectivePoint<GF>& p) {
    int d = p.c[0].field()->k;
    ProjectivePoint<GF> best = p, cur = p;
    auto less = [](const ProjectivePoint<GF>& a, const ProjectivePoint<GF>& b) {
        for (int i = 0; i < 3; ++i) {
            if (canonical_less(a.c[i], b.c[i])) return true;
            if (canonical_less(b.c[i], a.c[i])) return false;
        }
        return false;
    };
    for (int j = 1; j < d; ++j) {
        for (auto& x : cur.c) x = x.frobenius();
        if (less(cur, best)) best = cur;
    }
    return best;
}

inline bool canonical_point_less(const ProjectivePoint<GF>& a, const ProjectivePoint<GF>& b) {
    if (a.c[0].field()->k != b.c[0].field()->k) return a.c[0].field()->k < b.c[0].field()->k;
    for (int i = 0; i < 3; ++i) {
        if (canonical_less(a.c[i], b.c[i])) return true;
        if (canonical_less(b.c[i], a.c[i])) return false;
    }
    return false;
}

/// Common zeros of the forms on the fiber of a root orbit of the
/// eliminant, mapped back through M; one least conjugate per Galois orbit.
/// nullopt when the whole fiber is a common zero.
inline std::optional<std::vector<ProjectivePoint<GF>>> fiber_points(const std::vector<Poly<Fp>>& forms, const Mat3<Fp>& M,
                                                                     const RootOrbit& o, std::uint64_t seed) {
    GaloisRing G{o.field};
    GF x0 = o.at_infinity ? G.one() : o.alpha;
    GF y0 = o.at_infinity ? G.zero() : G.one();
    UPoly<GF> g(G);
    for (auto& e : forms) g = gcd(g, fiber_in_third(e, x0, y0));
    if (g.is_zero()) return std::nullopt;
    std::vector<ProjectivePoint<GF>> out;
    if (g.deg() == 0) return out;
    const std::uint32_t p = o.field->p;
    for (auto& [h, m] : factor_univariate(radical(g), seed).factors) {
        GaloisRing B{galois_field(p, o.degree() * h.deg())};
        auto hb = map_upoly<GF>(h, B, [&](const GF& a) { return embed(a, B); });
        GF z0 = field_roots(hb, seed).front();
        auto P = apply3(lift_matrix(M, B.field), std::array<GF, 3>{embed(x0, B), embed(y0, B), z0});
        out.push_back(canonical_conjugate(ProjectivePoint<GF>::normalized(P)));
    }
    return out;
}

/// Galois orbit of points over F_p, represented by one point over F_{p^d}.
struct PointOrbit {
    ProjectivePoint<GF> point;
    int multiplicity = 1;
    const GaloisField* field() const { return point.c[0].field(); }
    int degree() const { return field()->k; }
};

/// Isolated common zeros of homogeneous forms over F_p in three variables,
/// found by eliminating the last variable after a random change of
/// coordinates. The first `ncombine` forms (of one degree) are combined into
/// two generic members whose resultant carries the candidates.
inline std::vector<PointOrbit> common_zero_orbits(const std::vector<Poly<Fp>>& eqs, std::size_t ncombine, std::uint64_t seed) {
    if (eqs.empty() || ncombine == 0 || ncombine > eqs.size()) fail(ErrorKind::InvalidArgument, "no equations to combine");
    const PrimeField F = eqs[0].base_ring();
    const VarSet* vs = eqs[0].vars();
    const std::string zname = vs->name(2);
    const VarSet* bin = varset({vs->name(0), vs->name(1)});
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::uint64_t s = derive_seed(seed, attempt);
        std::mt19937_64 rng(s);
        Mat3<Fp> M = random_gl3(F, rng);
        std::vector<Poly<Fp>> e2;
        for (auto& e : eqs) e2.push_back(compose_linear(e, M));
        auto combo = [&]() {
            Poly<Fp> a(F, vs);
            for (std::size_t i = 0; i < ncombine; ++i) a += e2[i].scaled(random_element(F, rng));
            return a;
        };
        Poly<Fp> A = combo(), B = combo();
        if (A.is_zero() || B.is_zero()) continue;
        int da = A.total_degree(), db = B.total_degree();
        if (A.coeff(exps({0, 0, da})).is_zero() || B.coeff(exps({0, 0, db})).is_zero()) continue;
        Poly<Fp> R = resultant(A, B, zname);
        if (R.is_zero()) continue;
        Poly<Fp> R2(F, bin);
        for (auto& [e, c] : R.terms()) R2.add_term(exps({e[0], e[1]}), c);
        bool ok = true;
        std::vector<PointOrbit> out;
        for (auto& o : binary_root_orbits(R2, s)) {
            auto pts = fiber_points(e2, M, o, s);
            if (!pts) {
                ok = false;
                break;
            }
            for (auto& P : *pts) out.push_back({P, 1});
        }
        if (!ok) continue;
        std::sort(out.begin(), out.end(), [](const PointOrbit& a, const PointOrbit& b) { return canonical_point_less(a.point, b.point); });
        return out;
    }
    fail(ErrorKind::RetryExhausted, "no generic projection found; the field may be too small");
}

/// Order of vanishing of f at a point (1 for a smooth point of f = 0).
inline int point_multiplicity(const Poly<Fp>& f, const std::array<GF, 3>& p) {
    GaloisRing R = p[0].ring();
    return multiplicity_at(f.map_coefficients<GF>(R, [&](const Fp& a) { return to_gf(a, R.field); }), p);
}

/// Singular points of the curve f = 0 as Galois orbits with their
/// multiplicities. An empty result means the curve is smooth.
inline std::vector<PointOrbit> curve_singular_points(const Poly<Fp>& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "zero form");
    if (f.nvars() != 3 || !f.is_homogeneous()) fail(ErrorKind::InvalidArgument, "expected a ternary form");
    const std::uint32_t p = f.base_ring().p;
    const int d = f.total_degree();
    bool include_f = d % p == 0;
    Poly<Fp> G = partials_gcd(f, include_f);
    if (G.is_zero() || G.total_degree() > 0)
        fail(ErrorKind::NonIsolatedSingularLocus, "singular along the curve " + (G.is_zero() ? std::string("0") : G.to_string()));
    std::vector<Poly<Fp>> eqs{f.derivative(0), f.derivative(1), f.derivative(2)};
    if (include_f) eqs.push_back(f);
    auto orbits = common_zero_orbits(eqs, 3, seed);
    for (auto& o : orbits) o.multiplicity = point_multiplicity(f, o.point.c);
    return orbits;
}

inline bool is_smooth(const Poly<Fp>& f, std::uint64_t seed = 0) {
    try {
        return curve_singular_points(f, seed).empty();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NonIsolatedSingularLocus) return false;
        throw;
    }
}

/// The unique common zero of forms over Q when their zero set is a single
/// (necessarily rational) point; nullopt when there is no common zero.
inline std::optional<ProjectivePoint<Rational>> unique_rational_common_zero(const std::vector<Poly<Rational>>& eqs, std::uint64_t seed) {
    RationalField Q;
    const VarSet* vs = eqs[0].vars();
    const std::string zname = vs->name(2);
    const VarSet* bin = varset({vs->name(0), vs->name(1)});
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::mt19937_64 rng(derive_seed(seed, attempt));
        auto small = [&]() { return Rational(static_cast<std::int64_t>(rng() % 21) - 10); };
        Mat3<Rational> M;
        do {
            for (auto& row : M)
                for (auto& x : row) x = small();
        } while (det3(M).is_zero());
        std::vector<Poly<Rational>> e2;
        for (auto& e : eqs) e2.push_back(compose_linear(e, M));
        auto combo = [&]() {
            Poly<Rational> a(Q, vs);
            for (auto& e : e2) a += e.scaled(small());
            return a;
        };
        // all equations are assumed to share one degree
        Poly<Rational> A = combo();
        if (A.is_zero() || A.coeff(exps({0, 0, A.total_degree()})).is_zero()) continue;
        Poly<Rational> G(Q, bin);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            Poly<Rational> B = combo();
            if (B.is_zero() || B.coeff(exps({0, 0, B.total_degree()})).is_zero()) {
                ok = false;
                break;
            }
            Poly<Rational> R = resultant(A, B, zname);
            if (R.is_zero()) {
                ok = false;
                break;
            }
            Poly<Rational> R2(Q, bin);
            for (auto& [e, c] : R.terms()) R2.add_term(exps({e[0], e[1]}), c);
            G = poly_gcd(G, R2);
        }
        if (!ok) continue;
        if (G.total_degree() == 0) return std::nullopt;
        Poly<Rational> rep = poly_gcd(G.derivative(0), G.derivative(1));
        Poly<Rational> rad = rep.is_zero() ? G : G.exact_div(rep);
        if (rad.total_degree() != 1) continue;
        Rational a = rad.coeff(exps({1, 0})), b = rad.coeff(exps({0, 1}));
        Rational x0 = -b, y0 = a;
        UPoly<Rational> g(Q);
        for (auto& e : e2) {
            std::vector<Rational> c(std::max(0, e.degree_in(2) + 1), Q.zero());
            for (auto& [ex, cf] : e.terms()) {
                Rational t = cf;
                for (int i = 0; i < ex[0]; ++i) t *= x0;
                for (int i = 0; i < ex[1]; ++i) t *= y0;
                c[ex[2]] += t;
            }
            g = gcd(g, UPoly<Rational>(Q, c));
        }
        if (g.is_zero() || g.deg() == 0) continue;
        UPoly<Rational> grad = g / gcd(g, g.derivative());
        if (grad.deg() != 1) continue;
        Rational z0 = -grad.monic().coeff(0);
        auto P = apply3(M, std::array<Rational, 3>{x0, y0, z0});
        bool zero_everywhere = true;
        for (auto& e : eqs)
            if (!e.evaluate({P[0], P[1], P[2]}).is_zero()) zero_everywhere = false;
        if (!zero_everywhere) continue;
        return ProjectivePoint<Rational>::normalized(P);
    }
    fail(ErrorKind::RetryExhausted, "could not isolate the common zero");
}

} // namespace quartic
