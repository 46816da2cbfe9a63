#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "quartic/geometry/checks.hpp"
#include "quartic/reconstruction/degeneration.hpp"
#include "quartic/reconstruction/rank_law.hpp"
#include "quartic/reconstruction/vermeulen.hpp"
#include "quartic/verify/samples.hpp"

using namespace quartic;

namespace {

TernaryQuartic<Fp> fp_quartic(const std::string& s, std::uint32_t p) {
    return TernaryQuartic<Fp>::from_poly(parse_polynomial(s, PrimeField{p}, vars_xyz()));
}

Poly<Rational> q_poly(const std::string& s) { return parse_polynomial(s, RationalField{}, vars_xyz()); }

const InflectionConfiguration& v_minus_one_13() {
    static const InflectionConfiguration cfg = inflection_configuration(vermeulen_quartic(PrimeField{13}.from_int(-1)));
    return cfg;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("scheme classification follows the rank of the Hessian data", "[geometry]") {
    REQUIRE(classify_inflection_dimension(q_poly("x^4+y^4+z^4")) == SchemeClass::IsolatedDoublePoints);
    REQUIRE(classify_inflection_dimension(q_poly("x^3*y")) == SchemeClass::LineMult3);
    REQUIRE(classify_inflection_dimension(q_poly("x^4")) == SchemeClass::LineMult3);
    REQUIRE(classify_inflection_dimension(q_poly("(x^2+y*z)^2")) == SchemeClass::DoubleConic);
    REQUIRE(std::string(label(SchemeClass::TriplePoint)) == "triple point / dim >= 1");
    REQUIRE(kind_of([] { inflection_configuration(fp_quartic("x^3*y", 7)); }) == ErrorKind::NotFinite);
    REQUIRE(kind_of([] { inflection_configuration(fp_quartic("x^4+y^4+z^4", 3)); }) == ErrorKind::Precondition);
}

TEST_CASE("local intersection numbers", "[geometry]") {
    PrimeField F{31};
    auto P = [&](const std::string& s) { return parse_polynomial(s, F, vars_xyz()); };
    std::array<Fp, 3> origin{F.zero(), F.zero(), F.one()};
    REQUIRE(intersection_multiplicity(P("y*z-x^2"), P("y"), origin) == 2);
    REQUIRE(intersection_multiplicity(P("y*z^2-x^3"), P("y"), origin) == 3);
    REQUIRE(intersection_multiplicity(P("y^2*z-x^3"), P("y"), origin) == 3);
    REQUIRE(intersection_multiplicity(P("x"), P("y"), origin) == 1);
    REQUIRE(multiplicity_at(P("y^2*z-x^2*z-x^3"), origin) == 2);
    REQUIRE(multiplicity_at(P("x^3+y^3+x*y*z^2"), origin) == 2);
    REQUIRE(multiplicity_at(P("x*y*(x-y)+z^3"), origin) == 0);
}

TEST_CASE("contact analysis of known lines", "[geometry]") {
    PrimeField F{13};
    auto fermat = fp_quartic("x^4+y^4-z^4", 13);
    // on y = z the quartic restricts to x^4, so the contact is at [0:1:1]
    auto c = contact_analysis(fermat, std::array<Fp, 3>{F.zero(), F.one(), -F.one()});
    REQUIRE(c.kind == FlexTag::Hyperinflection);
    REQUIRE(c.contact_point->c == std::array<Fp, 3>{F.zero(), F.one(), F.one()});
    REQUIRE(kind_of([&] { contact_analysis(fermat, std::array<Fp, 3>{F.one(), F.from_int(2), F.from_int(5)}); }) == ErrorKind::NotInflectionLine);
    auto inside = contact_analysis(fp_quartic("x*(y^3+z^3)", 13), std::array<Fp, 3>{F.one(), F.zero(), F.zero()});
    REQUIRE(inside.kind == FlexTag::ContainedInCurve);
}

TEST_CASE("V_-1 over F_13 has 8 hyperflexes and 8 flexes", "[geometry]") {
    const auto& cfg = v_minus_one_13();
    REQUIRE(cfg.expanded());
    REQUIRE(cfg.total_multiplicity() == 24);
    std::map<int, int> by_mult;
    for (auto& e : cfg.entries) ++by_mult[e.multiplicity];
    REQUIRE(by_mult[2] == 8);
    REQUIRE(by_mult[1] == 8);
    auto laws = check_configuration_laws(vermeulen_quartic(PrimeField{13}.from_int(-1)), cfg);
    REQUIRE(laws.all());
    REQUIRE(laws.hyperflexes == 8);
}

TEST_CASE("orbit-wise pencil counts match the expanded entries", "[geometry][property]") {
    // brute force over the ambient field: add multiplicities of entries through P
    const auto& cfg = v_minus_one_13();
    GaloisRing A{cfg.ambient};
    int checked = 0;
    for (std::size_t i = 0; i < cfg.entries.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.entries.size(); ++j) {
            auto P = cross(cfg.entries[i].line.c, cfg.entries[j].line.c);
            int brute = 0;
            for (auto& e : cfg.entries)
                if (incidence(e.line.c, P).is_zero()) brute += e.multiplicity;
            std::array<GF, 3> Pa{embed(P[0], A), embed(P[1], A), embed(P[2], A)};
            REQUIRE(pencil_multiplicity(cfg, Pa) == brute);
            ++checked;
        }
    REQUIRE(checked == 120);
    auto r = concurrency_bound_check(cfg);
    REQUIRE(r.pass);
    REQUIRE(r.max_pencil == 6);
}

TEST_CASE("the extremal pencil carries total multiplicity 8", "[geometry]") {
    auto q = fp_quartic("x^4-y*z*(y-z)*(y-2*z)", 13);
    auto cfg = inflection_configuration(q);
    auto r = concurrency_bound_check(cfg);
    REQUIRE(r.max_pencil == 8);
    GaloisRing A{cfg.ambient};
    REQUIRE(pencil_multiplicity(cfg, {A.one(), A.zero(), A.zero()}) == 8);
}

TEST_CASE("configurations transform with the dual action", "[geometry][property]") {
    PrimeField F{13};
    std::mt19937_64 rng(2);
    auto q = fp_quartic("x^3*y+y^3*z+z^3*x", 13);
    for (int n = 0; n < 2; ++n) REQUIRE(configuration_is_equivariant(q, random_gl3(F, rng), n));
}

TEST_CASE("random smooth quartics satisfy the configuration laws", "[geometry][property]") {
    PrimeField F{13};
    for (auto& q : random_smooth_quartics(F, 3, 99)) {
        auto cfg = inflection_configuration(q);
        auto laws = check_configuration_laws(q, cfg);
        REQUIRE(laws.length_24);
        REQUIRE(laws.tags_match_multiplicity);
        REQUIRE(laws.harmonic_vanishes);
        REQUIRE(laws.hyperflex_tangents);
        REQUIRE(harmonic_is_squarefree(q));
    }
}

TEST_CASE("tangent condition at a hyperflex", "[geometry]") {
    const auto& cfg = v_minus_one_13();
    PrimeField F{13};
    auto q = vermeulen_quartic(F.from_int(-1));
    std::mt19937_64 rng(4);
    for (auto& d : rational_hyperflexes(cfg, F)) {
        for (int n = 0; n < 10; ++n) {
            TernaryQuartic<Fp> dir(F);
            for (int i = 0; i < 15; ++i) dir[i] = random_element(F, rng);
            auto [s, at_p] = tangent_condition_check(q, d.line.c, dir);
            REQUIRE(s == at_p);
        }
    }
    REQUIRE_THROWS_AS(tangent_condition_check(q, std::array<Fp, 3>{F.one(), F.from_int(3), F.from_int(7)}, q), Error);
}

TEST_CASE("reconstruction recovers V_-1 and rejects bad data", "[reconstruction]") {
    const auto& cfg = v_minus_one_13();
    auto data = hyperflex_data(cfg);
    REQUIRE(data.size() == 8);
    auto q = lift_quartic(vermeulen_quartic(PrimeField{13}.from_int(-1)), cfg.ambient);
    REQUIRE(reconstruct_from_hyperflexes(data) == normalize_scalar(q));
    std::vector<HyperflexDatum<GF>> five(data.begin(), data.begin() + 5);
    REQUIRE(reconstruct_from_hyperflexes(five) == normalize_scalar(q));

    std::vector<HyperflexDatum<GF>> four(data.begin(), data.begin() + 4);
    REQUIRE(kind_of([&] { reconstruct_from_hyperflexes(four); }) == ErrorKind::InvalidArgument);
    auto dup = five;
    dup[4] = dup[3];
    REQUIRE(kind_of([&] { reconstruct_from_hyperflexes(dup); }) == ErrorKind::InvalidArgument);
    auto off = five;
    off[0].point = off[1].point;
    REQUIRE(kind_of([&] { reconstruct_from_hyperflexes(off); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("round trip through the concurrent normal form", "[reconstruction][property]") {
    PrimeField F{31};
    for (auto& q : conc_normal_form_samples(F, 3, 5)) {
        auto cfg = inflection_configuration(q);
        auto data = hyperflex_data(cfg);
        REQUIRE(data.size() >= 5);
        REQUIRE(reconstruct_from_hyperflexes(data) == normalize_scalar(lift_quartic(q, cfg.ambient)));
    }
}

TEST_CASE("rank of the stacked hyperflex matrix", "[reconstruction]") {
    auto cert = rank_law_certificate(5);
    REQUIRE(cert.minors_factor);
    REQUIRE(cert.exhaustive);
}

TEST_CASE("k-reduction of a family over the local ring", "[reconstruction]") {
    LocalRing<Rational> L{RationalField{}};
    auto fam = TernaryQuartic<Local<Rational>>::from_poly(parse_polynomial("t*x^4+t^2*y^4+t*z^4+t^3*x*y*z^2", L, vars_xyz()));
    REQUIRE(k_reduction(fam).to_poly() == q_poly("x^4+z^4"));
    LocalRing<Fp> L7{PrimeField{7}};
    auto f7 = TernaryQuartic<Local<Fp>>::from_poly(parse_polynomial("x^4+t*(y^4+z^4+x*y*z^2)", L7, vars_xyz()));
    auto lim = k_reduction(f7);
    auto rep = derived_singularity_check(lim, f7);
    REQUIRE(rep.pass);
    REQUIRE_THROWS_AS(derived_singularity_check(fp_quartic("x^2*y^2", 7), f7), Error);
}

TEST_CASE("q_1 is singular and its hyperflexes do not determine it", "[reconstruction]") {
    PrimeField F{31};
    auto q1 = conc_normal_form(F.one(), F.one(), F.one(), F.one());
    REQUIRE_FALSE(is_smooth(q1.to_poly()));
    REQUIRE(q1.to_poly().evaluate({F.one(), F.one(), F.one()}).is_zero());
    auto cfg = inflection_configuration(q1);
    auto data = hyperflex_data(cfg);
    REQUIRE(data.size() == 3);
    REQUIRE(kind_of([&] { reconstruct_from_hyperflexes(data); }) == ErrorKind::InvalidArgument);
}
