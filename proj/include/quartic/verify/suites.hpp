#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quartic/geometry/checks.hpp"
#include "quartic/invariants/generic_table.hpp"
#include "quartic/poly/parse.hpp"
#include "quartic/reconstruction/degeneration.hpp"
#include "quartic/reconstruction/hyperflex.hpp"
#include "quartic/reconstruction/rank_law.hpp"
#include "quartic/reconstruction/vermeulen.hpp"
#include "quartic/rings/ring_spec.hpp"
#include "quartic/verify/samples.hpp"

namespace quartic {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionReport {
    int index = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;

    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
    void add(std::string name, bool ok, std::string detail = {}) { checks.push_back({std::move(name), ok, std::move(detail)}); }
};

/// Configurations shared between criteria, computed once per run.
class VerificationContext {
public:
    explicit VerificationContext(std::uint64_t seed = 0) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    const InflectionConfiguration& configuration(const std::string& key, const TernaryQuartic<Fp>& q) {
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, inflection_configuration(q, seed_)).first;
        return it->second;
    }
    const std::map<std::string, InflectionConfiguration>& computed() const { return cache_; }

    const std::vector<TernaryQuartic<Fp>>& random_f31() {
        if (random_.empty()) random_ = random_smooth_quartics(make_prime_field(31), 20, seed_);
        return random_;
    }
    const std::vector<TernaryQuartic<Fp>>& normal_forms_f31() {
        if (normal_.empty()) normal_ = conc_normal_form_samples(make_prime_field(31), 50, seed_);
        return normal_;
    }

private:
    std::uint64_t seed_;
    std::map<std::string, InflectionConfiguration> cache_;
    std::vector<TernaryQuartic<Fp>> random_, normal_;
};

namespace detail {

inline TernaryQuartic<Fp> quartic_mod(const std::string& s, std::uint32_t p) {
    return TernaryQuartic<Fp>::from_poly(parse_polynomial(s, make_prime_field(p), vars_xyz()));
}

inline const char* klein_form() { return "x^3*y+y^3*z+z^3*x"; }
inline const char* nodal_form() { return "x^2*y*z+x*y^3+x*z^3+y^4"; }
inline const char* pencil8_form() { return "x^4-y*z*(y-z)*(y-2*z)"; }

inline TernaryQuartic<Fp> vermeulen_m1(std::uint32_t p = 13) { return vermeulen_quartic(make_prime_field(p).from_int(-1)); }
inline TernaryQuartic<Fp> vermeulen_m1_swapped(std::uint32_t p = 13) { return vermeulen_swapped(make_prime_field(p).from_int(-1)); }

template <class K>
std::string str(const K& x) {
    return x.to_string();
}

inline Poly<Integer> int_poly(const std::string& s, const VarSet* vs) { return parse_polynomial(s, IntegerRing{}, vs); }

/// Binary quartic over Z[names...] with the given coefficient variables.
inline BinaryQuartic<Poly<Integer>> generic_binary(const VarSet* vs, const std::string& letter) {
    PolyRing<Integer> R{IntegerRing{}, vs};
    auto b = BinaryQuartic<Poly<Integer>>::zero(R);
    for (int i = 0; i < 5; ++i) b.f[i] = R.var(letter + std::to_string(i));
    return b;
}

template <class F>
void guarded(CriterionReport& r, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.add(name, false, std::string("exception: ") + e.what());
    }
}

} // namespace detail

inline CriterionReport criterion_klein() {
    CriterionReport r{1, "Klein quartic: H and K of x^3y+y^3z+z^3x over Z", {}, 0};
    detail::guarded(r, "klein", [&] {
        auto t0 = std::chrono::steady_clock::now();
        auto q = TernaryQuartic<Integer>::from_poly(detail::int_poly(detail::klein_form(), vars_xyz()));
        Poly<Integer> H = harmonic_quartic(q), K = harmonic_sextic(q);
        Poly<Integer> H0 = detail::int_poly("3*(u^3*v+v^3*w+w^3*u)", vars_uvw());
        Poly<Integer> K0 = detail::int_poly("27*(u^5*w+v^5*u+w^5*v-5*u^2*v^2*w^2)", vars_uvw());
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.add("H = 3(u^3v+v^3w+w^3u)", H == H0, H.to_string());
        r.add("K = 27(u^5w+v^5u+w^5v-5u^2v^2w^2)", K == K0, K.to_string());
        r.add("runtime below 1 s", s < 1.0, std::to_string(s) + " s");
    });
    return r;
}

inline CriterionReport criterion_identities(std::uint64_t seed = 0) {
    CriterionReport r{2, "Identity suite: S/T values, char-3 invariants, polarization, restriction pairings, char-3 square", {}, 0};
    using P = Poly<Integer>;
    IntegerRing Z;
    detail::guarded(r, "binary values", [&] {
        auto h = BinaryQuartic<Integer>::from_poly(detail::int_poly("y^4-y*z^3", vars_yz()));
        r.add("S(y^4-yz^3) = 0", invariant_S(h).is_zero(), detail::str(invariant_S(h)));
        r.add("T(y^4-yz^3) = -27", invariant_T(h) == Integer(-27), detail::str(invariant_T(h)));
        const VarSet* lv = varset({"lambda"});
        PolyRing<Integer> L{Z, lv};
        auto b = BinaryQuartic<P>::zero(L);
        b.f[2] = L.var("lambda");
        r.add("S(lambda y^2z^2) = lambda^2", invariant_S(b) == b.f[2] * b.f[2], invariant_S(b).to_string());
    });
    detail::guarded(r, "triple root", [&] {
        const VarSet* gv = varset({"alpha", "beta", "gamma", "delta"});
        PolyRing<Integer> G{Z, gv};
        PolyRing<P> B{G, vars_yz()};
        auto y = Poly<P>::variable(G, vars_yz(), "y"), z = Poly<P>::variable(G, vars_yz(), "z");
        auto c = [&](const char* n) { return Poly<P>::constant(G, vars_yz(), G.var(n)); };
        Poly<P> l1 = c("alpha") * y - c("beta") * z, l2 = c("gamma") * y - c("delta") * z;
        auto f = BinaryQuartic<P>::from_poly(l1 * l1 * l1 * l2);
        r.add("S vanishes on (ay-bz)^3(cy-dz)", invariant_S(f).is_zero(), invariant_S(f).to_string());
        r.add("T vanishes on (ay-bz)^3(cy-dz)", invariant_T(f).is_zero(), invariant_T(f).to_string());
        r.add("S3 and S4 vanish on (ay-bz)^3(cy-dz)", invariant_S3(f).is_zero() && invariant_S4(f).is_zero());
    });
    detail::guarded(r, "char-3 relations", [&] {
        const VarSet* fv = varset({"f0", "f1", "f2", "f3", "f4", "g0", "g1", "g2", "g3", "g4"});
        auto f = detail::generic_binary(fv, "f"), g = detail::generic_binary(fv, "g");
        PolyRing<Integer> R{Z, fv};
        P three = R.from_int(3), two = R.from_int(2);
        P S = invariant_S(f), T = invariant_T(f), S3 = invariant_S3(f), S4 = invariant_S4(f);
        r.add("3 S3 = T + 2 f2 S", three * S3 == T + two * f.f[2] * S);
        // the expanded S4 differs from (S3 f2 + S (f0 f4 - f1 f3)) / 3 by -11 f0 f4 S
        P rel = S3 * f.f[2] + S * (f.f[0] * f.f[4] - f.f[1] * f.f[3]);
        r.add("3 S4 = S3 f2 + S (f0 f4 - f1 f3) - 33 f0 f4 S", three * S4 == rel - R.from_int(33) * f.f[0] * f.f[4] * S);
        auto y3z = BinaryQuartic<Integer>::from_poly(detail::int_poly("y^3*z", vars_yz()));
        r.add("S3 = S4 = 0 on y^3z", invariant_S3(y3z).is_zero() && invariant_S4(y3z).is_zero());
        r.add("S(f+g) = S(f) + <f,g> + S(g)", invariant_S(f + g) == S + bilinear_S(f, g) + invariant_S(g));
        r.add("<f,f> = 2 S(f)", bilinear_S(f, f) == two * S);
    });
    detail::guarded(r, "ternary polarization", [&] {
        const VarSet* ab = generic_coefficient_vars("ab");
        auto q = generic_quartic(ab, 'a'), s = generic_quartic(ab, 'b');
        TernaryQuartic<P> sum(q.ring());
        for (int n = 0; n < 15; ++n) sum[n] = q[n] + s[n];
        Poly<P> lhs = harmonic_quartic(sum), rhs = harmonic_quartic(q) + bilinear_H(q, s) + harmonic_quartic(s);
        r.add("H(q+r) = H(q) + <q,r> + H(r) over Z[a,b]", lhs == rhs);
    });
    detail::guarded(r, "restriction pairings", [&] {
        const VarSet* cv = varset({"c0", "c1", "c2", "c3", "c4", "d0", "d1", "d2", "d3", "d4"});
        PolyRing<Integer> R{Z, cv};
        // x^a q_{4-a}(y,z) with generic coefficients named by letter
        auto xq = [&](int a, char letter) {
            TernaryQuartic<P> q(R);
            for (int i = 0; i <= 4 - a; ++i) q[quartic_index(a, 4 - a - i, i)] = R.var(std::string(1, letter) + std::to_string(i));
            return q;
        };
        auto uvw = [&](const char* n) { return Poly<P>::variable(R, vars_uvw(), n); };
        auto k = [&](std::int64_t n) { return Poly<P>::constant(R, vars_uvw(), R.from_int(n)); };
        // q_d(-w, v)
        auto sub = [&](int d, char letter) {
            Poly<P> out(R, vars_uvw());
            for (int i = 0; i <= d; ++i)
                out = out + (-uvw("w")).pow(d - i) * uvw("v").pow(i) * Poly<P>::constant(R, vars_uvw(), R.var(std::string(1, letter) + std::to_string(i)));
            return out;
        };
        auto mono = [&](int i, int j, int l) { return quartic_monomial<P>(R, i, j, l); };
        bool vanish = true;
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                if (a + b >= 5 && !bilinear_H(xq(a, 'c'), xq(b, 'd')).is_zero()) vanish = false;
        Poly<P> u = uvw("u"), s4 = sub(4, 'c');
        r.add("pairing: <x^a q, x^b q'> = 0 for a+b >= 5", vanish);
        r.add("pairing: <x^4, q4> = 12 q4(-w,v)", bilinear_H(mono(4, 0, 0), xq(0, 'c')) == k(12) * s4);
        r.add("pairing: <x^3 q1, x q3> = -3 q1(-w,v) q3(-w,v)", bilinear_H(xq(3, 'c'), xq(1, 'd')) == k(-3) * sub(1, 'c') * sub(3, 'd'));
        r.add("pairing: <x^3y, q4> = -3u d_v q4(-w,v)", bilinear_H(mono(3, 1, 0), xq(0, 'c')) == k(-3) * u * s4.derivative("v"));
        r.add("pairing: H(x^2 q2) = q2(-w,v)^2", harmonic_quartic(xq(2, 'c')) == sub(2, 'c') * sub(2, 'c'));
        r.add("pairing: <x^2y^2, q4> = u^2 d_v d_v q4(-w,v)",
              bilinear_H(mono(2, 2, 0), xq(0, 'c')) == u * u * s4.derivative("v").derivative("v"));
    });
    detail::guarded(r, "char-3 square formula", [&] {
        std::mt19937_64 rng(seed);
        int agree3 = 0, agree27 = 0;
        PrimeField F3 = make_prime_field(3);
        GaloisRing F27{galois_field(3, 3)};
        for (int n = 0; n < 100; ++n) {
            TernaryQuartic<Fp> q(F3);
            for (int i = 0; i < 15; ++i) q[i] = random_element(F3, rng);
            agree3 += harmonic_char3_formula(q) == harmonic_quartic(q);
            TernaryQuartic<GF> g(F27);
            for (int i = 0; i < 15; ++i) g[i] = random_element(F27, rng);
            agree27 += harmonic_char3_formula(g) == harmonic_quartic(g);
        }
        r.add("square formula = H on 100 random quartics over F_3", agree3 == 100, std::to_string(agree3) + "/100");
        r.add("square formula = H on 100 random quartics over F_27", agree27 == 100, std::to_string(agree27) + "/100");
    });
    return r;
}

inline CriterionReport criterion_lie() {
    CriterionReport r{3, "Lie suite: symmetry of t, sl3 identity, six coefficient identities", {}, 0};
    using P = Poly<Integer>;
    detail::guarded(r, "trilinear symmetry", [&] {
        IntegerRing Z;
        std::vector<TernaryQuartic<Integer>> m;
        for (auto& e : quartic_monomials()) m.push_back(quartic_monomial<Integer>(Z, e[0], e[1], e[2]));
        std::vector<std::vector<Poly<Integer>>> pair(15);
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j) pair[i].push_back(bilinear_H(m[i], m[j]));
        auto t = [&](int a, int b, int c) { return apolarity_pair(m[a], pair[b][c]); };
        int triples = 0, symmetric = 0;
        for (int a = 0; a < 15; ++a)
            for (int b = 0; b < 15; ++b)
                for (int c = 0; c < 15; ++c) {
                    Integer v = t(a, b, c);
                    ++triples;
                    symmetric += v == t(a, c, b) && v == t(b, a, c) && v == t(b, c, a) && v == t(c, a, b) && v == t(c, b, a);
                }
        r.add("t symmetric on all monomial triples", symmetric == 3375 && triples == 3375, std::to_string(symmetric) + "/" + std::to_string(triples));
    });
    detail::guarded(r, "sl3 identity", [&] {
        for (auto& [name, g] : sl3_generators<Integer>(IntegerRing{})) {
            auto res = verify_lie_identity(g);
            r.add("<g q, H(q)> = 0 for g = " + name, res.pass, res.pass ? "" : res.residual.to_string());
        }
    });
    detail::guarded(r, "coefficient identities", [&] {
        auto q = generic_quartic();
        for (int i = 1; i <= 6; ++i) {
            P v = coefficient_identity(i, q);
            r.add("coefficient identity " + std::to_string(i) + " vanishes over Z[a_ijk]", v.is_zero());
        }
    });
    return r;
}

inline CriterionReport criterion_vermeulen(VerificationContext& ctx) {
    CriterionReport r{4, "Vermeulen family: symbolic H(V_t); V_-1 over F_13", {}, 0};
    detail::guarded(r, "symbolic", [&] {
        LocalRing<Rational> L{RationalField{}};
        auto t = L.t();
        auto H = harmonic_quartic(vermeulen_quartic(t));
        auto D = vermeulen_harmonic(t);
        // the displayed form is H(V_t) divided by the unit 4
        r.add("H(V_t) = 4 (-3u^4-3tv^4+(3t+1)w^4+10u^2v^2+8uvw^2) in t", H == D.scaled(L.from_int(4)), H.to_string());
    });
    detail::guarded(r, "V_-1 over F_13", [&] {
        auto V = detail::vermeulen_m1();
        r.add("V_-1 smooth", is_smooth(V.to_poly(), ctx.seed()));
        r.add("H(V_-1) smooth", is_smooth(harmonic_quartic(V), ctx.seed()));
        const auto& cfg = ctx.configuration("V_-1/F13", V);
        int hyper = 0, simple = 0, hyper_ok = 0, simple_ok = 0, total = 0;
        for (auto& e : cfg.entries) {
            total += e.multiplicity;
            if (!e.contact_point) continue;
            auto& p = e.contact_point->c;
            if (e.tag == FlexTag::Hyperinflection) {
                ++hyper;
                hyper_ok += e.multiplicity == 2 && (p[0].is_zero() || p[1].is_zero());
            } else if (e.tag == FlexTag::Simple) {
                ++simple;
                GF conic = p[0].ring().from_int(2) * p[0] * p[1] + p[0].ring().from_int(3) * p[2] * p[2];
                simple_ok += e.multiplicity == 1 && conic.is_zero();
            }
        }
        r.add("8 hyperinflection entries, multiplicity 2, contacts on x=0 or y=0", hyper == 8 && hyper_ok == 8,
              std::to_string(hyper_ok) + "/" + std::to_string(hyper));
        r.add("8 simple entries, multiplicity 1, contacts on 2xy+3z^2=0", simple == 8 && simple_ok == 8,
              std::to_string(simple_ok) + "/" + std::to_string(simple));
        r.add("entries number 16 with total multiplicity 24", cfg.entries.size() == 16 && total == 24, std::to_string(total));
    });
    return r;
}

inline CriterionReport criterion_multiplicity_laws(VerificationContext& ctx) {
    CriterionReport r{5, "Multiplicity laws on V_-1, 20 random smooth quartics over F_31, and the nodal quartic", {}, 0};
    auto laws = [&](const std::string& name, const TernaryQuartic<Fp>& q) {
        auto l = check_configuration_laws(q, ctx.configuration(name, q));
        return std::make_tuple(l.tags_match_multiplicity && l.length_24, l.hyperflex_tangents && l.harmonic_vanishes, l.hyperflexes);
    };
    detail::guarded(r, "V_-1", [&] {
        auto [tags, tangents, hyper] = laws("V_-1/F13", detail::vermeulen_m1());
        r.add("V_-1: simple <-> 1, hyperinflection <-> 2", tags);
        r.add("V_-1: H-tangent at each hyperflex is the pencil through the contact point", tangents && hyper == 8,
              std::to_string(hyper) + " hyperflexes");
    });
    detail::guarded(r, "random F_31", [&] {
        int tags = 0, tangents = 0, hyper = 0;
        const auto& qs = ctx.random_f31();
        for (std::size_t i = 0; i < qs.size(); ++i) {
            auto [t, g, h] = laws("random/F31/" + std::to_string(i), qs[i]);
            tags += t;
            tangents += g;
            hyper += h;
        }
        r.add("20 random smooth quartics over F_31: simple <-> 1, hyperinflection <-> 2", tags == 20, std::to_string(tags) + "/20");
        r.add("20 random smooth quartics over F_31: hyperflex tangents", tangents == 20,
              std::to_string(tangents) + "/20, " + std::to_string(hyper) + " hyperflexes in total");
    });
    detail::guarded(r, "nodal quartic", [&] {
        auto q = detail::quartic_mod(detail::nodal_form(), 13);
        const auto& cfg = ctx.configuration("nodal/F13", q);
        int through = 0, heavy = 0;
        for (auto& o : cfg.orbits) {
            // the node is rational, so conjugate lines behave alike
            if (!o.line.c[0].is_zero()) continue;
            through += o.degree();
            heavy += o.multiplicity >= 3 ? o.degree() : 0;
        }
        r.add("nodal quartic: every line through [1:0:0] has multiplicity >= 3", through > 0 && heavy == through,
              std::to_string(heavy) + "/" + std::to_string(through) + " lines");
    });
    return r;
}

inline CriterionReport criterion_totally_harmonic(VerificationContext& ctx) {
    CriterionReport r{6, "Totally harmonic forward checks, extremal pencil, concurrency bound", {}, 0};
    detail::guarded(r, "normal forms", [&] {
        for (auto& c : verify_normal_forms_totally_harmonic()) {
            std::string where = c.characteristic == 0 ? "Q" : "char " + std::to_string(c.characteristic);
            r.add(std::string(c.expect_totally_harmonic ? "H = 0: " : "H != 0: ") + c.form + " over " + where, c.pass());
        }
    });
    detail::guarded(r, "extremal pencil", [&] {
        auto q = detail::quartic_mod(detail::pencil8_form(), 13);
        const auto& cfg = ctx.configuration("pencil8/F13", q);
        GaloisRing A{cfg.ambient};
        int pencil = pencil_multiplicity(cfg, {A.one(), A.zero(), A.zero()});
        r.add("extremal pencil through [1:0:0] carries exactly 8", pencil == 8, std::to_string(pencil));
    });
    detail::guarded(r, "concurrency bound", [&] {
        // every configuration of the run, including those of later criteria
        ctx.configuration("Klein/F13", detail::quartic_mod(detail::klein_form(), 13));
        ctx.configuration("V_-1/F13", detail::vermeulen_m1());
        ctx.configuration("V'_-1/F13", detail::vermeulen_m1_swapped());
        ctx.configuration("nodal/F13", detail::quartic_mod(detail::nodal_form(), 13));
        const auto& rs = ctx.random_f31();
        for (std::size_t i = 0; i < rs.size(); ++i) ctx.configuration("random/F31/" + std::to_string(i), rs[i]);
        const auto& ns = ctx.normal_forms_f31();
        for (std::size_t i = 0; i < ns.size(); ++i) ctx.configuration("normal/F31/" + std::to_string(i), ns[i]);
        int ok = 0, n = 0, worst = 0;
        std::string failing;
        for (auto& [name, cfg] : ctx.computed()) {
            ++n;
            auto c = concurrency_bound_check(cfg);
            worst = std::max(worst, c.max_pencil);
            if (c.pass) ++ok;
            else failing += " " + name;
        }
        r.add("pencil bound <= 8 on every computed configuration", ok == n,
              std::to_string(ok) + "/" + std::to_string(n) + ", largest pencil " + std::to_string(worst) + failing);
    });
    return r;
}

inline CriterionReport criterion_degenerations(std::uint64_t seed = 0) {
    CriterionReport r{7, "Degeneration suite: reference families, k-reduction to u^4+v^3w+w^4, derived singularity", {}, 0};
    struct Row {
        const char* limit;
        const char* family;
        std::uint32_t p;
        const char* expected;
    };
    const Row rows[] = {
        {"x^4", "x^4+t*(x^3*y+y^3*z+z^3*x+z^3*y)", 2, "u^4+u^3*v+v^3*w+w^3*u+u*v^2*w"},
        {"x^3*y", "x^3*y+t*(y^2*z^2+t*(x*z^3+y^3*z))", 2, "u^4+u*w^3+v^3*w"},
        {"x^4", "x^4+t*(x^2*y*z+y^2*z^2)", 3, "(u^2-v*w)^2"},
        {"x^3*y", "x^3*y+t*(x^2*y*z+y^2*z^2)", 3, "(u^2-v*w)^2"},
    };
    auto family = [](const std::string& s, std::uint32_t p) {
        return TernaryQuartic<Local<Fp>>::from_poly(parse_polynomial(s, LocalRing<Fp>{make_prime_field(p)}, vars_xyz()));
    };
    int n = 0;
    for (auto& row : rows) {
        ++n;
        detail::guarded(r, "reference families", [&] {
            PrimeField F = make_prime_field(row.p);
            Poly<Fp> got = degenerate_harmonic(family(row.family, row.p));
            Poly<Fp> want = parse_polynomial(row.expected, F, vars_uvw());
            r.add("reference family " + std::to_string(n) + " (char " + std::to_string(row.p) + ")", got.to_string() == want.to_string(),
                  got.to_string());
            auto d = derived_singularity_check(detail::quartic_mod(row.limit, row.p), family(row.family, row.p));
            r.add("reference family " + std::to_string(n) + ": derived quartic not singular at [1:0:0] (counterexample registered)", !d.pass);
        });
    }
    detail::guarded(r, "k-reduction of x^4 family", [&] {
        const char* fam = "(y^4-y*z^3)+t*(x^4+z^4)";
        LocalRing<Rational> L{RationalField{}};
        Poly<Rational> gq = degenerate_harmonic(TernaryQuartic<Local<Rational>>::from_poly(parse_polynomial(fam, L, vars_xyz())));
        Poly<Rational> want = parse_polynomial("u^4+v^3*w+w^4", RationalField{}, vars_uvw());
        r.add("k-reduction over Q: r(H(q)) = 12 (u^4+v^3w+w^4)", gq == want.scaled(Rational(12)), gq.to_string());
        Poly<Fp> g5 = degenerate_harmonic(family(fam, 5));
        auto monic = g5.scaled(g5.coeff(exps({4, 0, 0})).inverse());
        r.add("k-reduction over F_5: r(H(q)) = u^4+v^3w+w^4 up to a unit", monic == parse_polynomial("u^4+v^3*w+w^4", make_prime_field(5), vars_uvw()),
              g5.to_string());
    });
    detail::guarded(r, "derived singularity", [&] {
        std::mt19937_64 rng(seed);
        int pass7 = 0, pass11 = 0;
        const int trials = 10;
        for (int i = 0; i < trials; ++i) {
            std::string g7 = random_quartic(make_prime_field(7), rng).to_poly().to_string();
            std::string g11 = random_quartic(make_prime_field(11), rng).to_poly().to_string();
            pass7 += derived_singularity_check(detail::quartic_mod("x^4", 7), family("x^4+t*(" + g7 + ")", 7)).pass;
            pass11 += derived_singularity_check(detail::quartic_mod("x^3*y", 11), family("x^3*y+t*(" + g11 + ")", 11)).pass;
        }
        r.add("x^4 + t (random quartic) over F_7: derived quartic singular at [1:0:0]", pass7 == trials,
              std::to_string(pass7) + "/" + std::to_string(trials));
        r.add("x^3y + t (random quartic) over F_11: derived quartic singular at [1:0:0]", pass11 == trials,
              std::to_string(pass11) + "/" + std::to_string(trials));
    });
    return r;
}

inline CriterionReport criterion_reconstruction(VerificationContext& ctx) {
    CriterionReport r{8, "Reconstruction round trip and the rank law", {}, 0};
    auto round_trip = [&](const std::string& name, const TernaryQuartic<Fp>& q) {
        const auto& cfg = ctx.configuration(name, q);
        auto data = hyperflex_data(cfg);
        if (data.size() < 5) return false;
        return reconstruct_from_hyperflexes(data) == normalize_scalar(lift_quartic(q, cfg.ambient));
    };
    detail::guarded(r, "normal forms", [&] {
        const auto& qs = ctx.normal_forms_f31();
        int ok = 0;
        for (std::size_t i = 0; i < qs.size(); ++i) ok += round_trip("normal/F31/" + std::to_string(i), qs[i]);
        r.add("50 smooth normal forms over F_31 recovered up to scalar", ok == 50 && qs.size() == 50, std::to_string(ok) + "/50");
    });
    detail::guarded(r, "V_-1", [&] { r.add("V_-1 over F_13 recovered up to scalar", round_trip("V_-1/F13", detail::vermeulen_m1())); });
    detail::guarded(r, "rank law", [&] {
        auto c = rank_law_certificate(7);
        r.add("rank law: 3x3 minors of M_abcd factor as listed over Z[a,b,c,d]", c.minors_factor);
        r.add("rank law: rank 3 exactly off the excluded locus, all of F_7^4", c.exhaustive);
    });
    return r;
}

inline CriterionReport criterion_char13(VerificationContext& ctx) {
    CriterionReport r{9, "Char-13 pair V_-1, V'_-1: same lines, different schemes", {}, 0};
    detail::guarded(r, "pair", [&] {
        auto V = detail::vermeulen_m1(), W = detail::vermeulen_m1_swapped();
        const auto& a = ctx.configuration("V_-1/F13", V);
        const auto& b = ctx.configuration("V'_-1/F13", W);
        auto ma = line_multiset(a), mb = line_multiset(b);
        int twos = 0, ones = 0;
        for (auto& [l, m] : ma) (m == 2 ? twos : ones) += (m == 1 || m == 2);
        r.add("identical (line, multiplicity) multisets", a.ambient == b.ambient && ma == mb);
        r.add("multiset is 2(l1+...+l8) + (l9+...+l16)", ma.size() == 16 && twos == 8 && ones == 8);
        Poly<Fp> Ha = harmonic_quartic(V), Hb = harmonic_quartic(W);
        r.add("harmonic quartics are smooth", is_smooth(Ha, ctx.seed()) && is_smooth(Hb, ctx.seed()));
        r.add("harmonic quartics are distinct curves", !(normalize_scalar(TernaryQuartic<Fp>::from_poly(Ha.renamed(vars_xyz()))) ==
                                                          normalize_scalar(TernaryQuartic<Fp>::from_poly(Hb.renamed(vars_xyz())))));
        int shared = 0, distinct = 0;
        for (auto& e : a.entries) {
            if (e.tag != FlexTag::Hyperinflection) continue;
            for (auto& f : b.entries)
                if (f.tag == FlexTag::Hyperinflection && f.line == e.line) {
                    ++shared;
                    distinct += e.contact_point && f.contact_point && !(*e.contact_point == *f.contact_point);
                }
        }
        r.add("distinct contact points at the 8 shared hyperinflection lines", shared == 8 && distinct == 8,
              std::to_string(distinct) + "/" + std::to_string(shared));
    });
    return r;
}

inline CriterionReport criterion_tangent(VerificationContext& ctx) {
    CriterionReport r{10, "Tangent condition at the hyperflexes of V_-1 over F_13", {}, 0};
    detail::guarded(r, "tangent", [&] {
        auto V = detail::vermeulen_m1();
        const auto& cfg = ctx.configuration("V_-1/F13", V);
        GaloisRing A{cfg.ambient};
        PrimeField F = make_prime_field(13);
        auto qc = lift_quartic(V, cfg.ambient);
        std::mt19937_64 rng(derive_seed(ctx.seed(), 10));
        int agree = 0, checks = 0, both_true = 0, both_false = 0;
        for (auto& e : cfg.entries) {
            if (e.tag != FlexTag::Hyperinflection) continue;
            const auto& p = e.contact_point->c;
            for (int n = 0; n < 100; ++n) {
                TernaryQuartic<GF> dir = lift_quartic(random_quartic(F, rng), cfg.ambient);
                if (n % 2 == 1) {
                    // a line through p times a cubic: vanishes at the contact point
                    std::array<GF, 3> other{random_element(A, rng), random_element(A, rng), random_element(A, rng)};
                    auto l = cross(p, other);
                    if (all_zero(l)) l = cross(p, std::array<GF, 3>{A.zero(), A.one(), A.zero()});
                    Poly<GF> lin(A, vars_xyz()), cubic(A, vars_xyz());
                    for (int i = 0; i < 3; ++i) {
                        Exponents ex(3, 0);
                        ex[i] = 1;
                        lin.add_term(ex, l[i]);
                    }
                    for (int i = 0; i <= 3; ++i)
                        for (int j = 0; i + j <= 3; ++j) cubic.add_term(exps({i, j, 3 - i - j}), random_element(A, rng));
                    dir = TernaryQuartic<GF>::from_poly(lin * cubic);
                }
                auto [s_vanishes, q_vanishes] = tangent_condition_check(qc, e.line.c, dir);
                ++checks;
                agree += s_vanishes == q_vanishes;
                both_true += s_vanishes && q_vanishes;
                both_false += !s_vanishes && !q_vanishes;
            }
        }
        r.add("the two conditions agree for 100 directions at each hyperflex", checks == 800 && agree == checks,
              std::to_string(agree) + "/" + std::to_string(checks) + " (" + std::to_string(both_true) + " tangent, " +
                  std::to_string(both_false) + " transverse)");
        r.add("both outcomes occur", both_true > 0 && both_false > 0);
    });
    return r;
}

/// Runs criterion `index` (1..10) with timing.
inline CriterionReport run_criterion(int index, VerificationContext& ctx) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionReport r;
    switch (index) {
    case 1: r = criterion_klein(); break;
    case 2: r = criterion_identities(ctx.seed()); break;
    case 3: r = criterion_lie(); break;
    case 4: r = criterion_vermeulen(ctx); break;
    case 5: r = criterion_multiplicity_laws(ctx); break;
    case 6: r = criterion_totally_harmonic(ctx); break;
    case 7: r = criterion_degenerations(ctx.seed()); break;
    case 8: r = criterion_reconstruction(ctx); break;
    case 9: r = criterion_char13(ctx); break;
    case 10: r = criterion_tangent(ctx); break;
    default: fail(ErrorKind::InvalidArgument, "criterion index must be in 1..10");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Named groups of criteria for the command line.
inline const std::map<std::string, std::vector<int>>& verification_suites() {
    static const std::map<std::string, std::vector<int>> s = {
        {"identities", {1, 2, 3}},
        {"examples", {4, 5, 6}},
        {"degenerations", {7}},
        {"reconstruction", {8}},
        {"char13", {9, 10}},
    };
    return s;
}

} // namespace quartic
