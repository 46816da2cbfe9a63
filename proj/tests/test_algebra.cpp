#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quartic/invariants/generic_table.hpp"
#include "quartic/invariants/lie.hpp"
#include "quartic/invariants/pairing.hpp"
#include "quartic/geometry/line.hpp"
#include "quartic/poly/factor.hpp"
#include "quartic/poly/gcd.hpp"
#include "quartic/poly/linear.hpp"
#include "quartic/poly/parse.hpp"
#include "quartic/poly/resultant.hpp"
#include "quartic/poly/roots.hpp"
#include "quartic/rings/ring_spec.hpp"

using namespace quartic;

namespace {

Poly<Rational> q_poly(const std::string& s, const VarSet* v = vars_xyz()) { return parse_polynomial(s, RationalField{}, v); }
Poly<Fp> fp_poly(const std::string& s, std::uint32_t p, const VarSet* v = vars_xyz()) { return parse_polynomial(s, PrimeField{p}, v); }

template <class R>
Poly<decltype(R{}.one())> random_poly(const R& r, const VarSet* v, int degree, std::mt19937_64& rng) {
    using K = decltype(r.one());
    Poly<K> f(r, v);
    std::uniform_int_distribution<int> c(-5, 5), d(0, degree);
    for (int n = 0; n < 6; ++n) {
        Exponents e(v->size(), 0);
        for (auto& x : e) x = d(rng) / static_cast<int>(v->size());
        f.add_term(e, r.from_int(c(rng)));
    }
    return f;
}

// discriminant of prod (y - r_i z) as prod_{i<j} (r_i - r_j)^2
Fp root_discriminant(const std::vector<Fp>& r) {
    Fp d = r[0].ring().one();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) d *= (r[i] - r[j]) * (r[i] - r[j]);
    return d;
}

BinaryQuartic<Fp> from_roots(const std::vector<Fp>& r) {
    const PrimeField F = r[0].ring();
    Poly<Fp> f = Poly<Fp>::constant(F, vars_yz(), F.one());
    for (auto& a : r) f *= Poly<Fp>::variable(F, vars_yz(), "y") - Poly<Fp>::variable(F, vars_yz(), "z").scaled(a);
    return BinaryQuartic<Fp>::from_poly(f);
}

} // namespace

TEST_CASE("integers and rationals are exact", "[rings]") {
    Integer a(BigInt("123456789012345678901234567890"));
    REQUIRE((a * a).exact_div(a) == a);
    REQUIRE_THROWS_AS(Integer(7).exact_div(Integer(2)), Error);
    Rational h(1, 3);
    REQUIRE(h + h + h == Rational(1));
    REQUIRE((h * Rational(3, 7)).to_string() == "1/7");
    REQUIRE_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("prime field inverses", "[rings]") {
    for (std::uint32_t p : {2u, 3u, 13u, 101u}) {
        PrimeField F{p};
        for (std::uint32_t v = 1; v < p; ++v) REQUIRE((Fp(v, p) * Fp(v, p).inverse()).is_one());
    }
    REQUIRE_THROWS_AS(make_prime_field(91), Error);
}

TEST_CASE("extension fields: Fermat, Frobenius and embeddings", "[rings]") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : {std::pair{2, 5}, {3, 3}, {13, 2}, {31, 4}}) {
        const GaloisField* f = galois_field(p, k);
        GaloisRing G{f};
        BigInt q = f->order();
        for (int n = 0; n < 20; ++n) {
            GF a = random_element(G, rng), b = random_element(G, rng);
            REQUIRE(a.pow(q) == a);
            REQUIRE((a + b).frobenius() == a.frobenius() + b.frobenius());
            if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
        }
    }
    // F_{13^2} -> F_{13^4} is a ring homomorphism fixing F_13
    GaloisRing small{galois_field(13, 2)}, big{galois_field(13, 4)};
    for (int n = 0; n < 20; ++n) {
        GF a = random_element(small, rng), b = random_element(small, rng);
        REQUIRE(embed(a * b, big) == embed(a, big) * embed(b, big));
        REQUIRE(embed(a + b, big) == embed(a, big) + embed(b, big));
    }
    REQUIRE(embed(small.from_int(5), big) == big.from_int(5));
}

TEST_CASE("ring specs parse, print and map canonically", "[rings]") {
    for (std::string s : {"Q", "Z", "Fp:7", "Fpk:5:3", "dual:Fp:13", "local-t:Q"}) REQUIRE(RingSpec::parse(s).to_string() == s);
    REQUIRE(RingSpec::parse("Fpk:7:1").to_string() == "Fp:7");
    REQUIRE_THROWS_AS(RingSpec::parse("F:7"), Error);
    REQUIRE_THROWS_AS(RingSpec::parse("dual:dual:Q"), Error);
    REQUIRE(has_canonical_map(RingSpec::parse("Z"), RingSpec::parse("Fpk:3:2")));
    REQUIRE(has_canonical_map(RingSpec::parse("Fpk:3:2"), RingSpec::parse("Fpk:3:4")));
    REQUIRE_FALSE(has_canonical_map(RingSpec::parse("Fpk:3:2"), RingSpec::parse("Fpk:3:3")));
    REQUIRE_FALSE(has_canonical_map(RingSpec::parse("Q"), RingSpec::parse("Fp:5")));
    try {
        require_canonical_map(RingSpec::parse("Fp:5"), RingSpec::parse("Fp:7"));
        FAIL("expected an error");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::NoCanonicalMap);
    }
}

TEST_CASE("dual numbers and the local ring in t", "[rings]") {
    DualRing<Rational> D{RationalField{}};
    REQUIRE((D.eps() * D.eps()).is_zero());
    auto x = Dual<Rational>(Rational(2), Rational(3));
    REQUIRE(x * x == Dual<Rational>(Rational(4), Rational(12)));
    LocalRing<Fp> L{PrimeField{7}};
    auto t = L.t();
    REQUIRE((t * t * (L.one() + t)).valuation() == 2);
    REQUIRE((L.one() + t).is_unit());
    REQUIRE_FALSE(t.is_unit());
}

TEST_CASE("polynomial parsing round-trips and reports positions", "[poly]") {
    for (std::string s : {"x^4+y^4+z^4", "3*x^3*y-1/2*y*z^3", "x^2*y*z+x*y^3+x*z^3+y^4"}) REQUIRE(q_poly(q_poly(s).to_string()) == q_poly(s));
    try {
        q_poly("x^2 +* y");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::Parse);
        REQUIRE(std::string(e.what()).find("column") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_polynomial("x/2", IntegerRing{}, vars_xyz()), Error);
    REQUIRE_THROWS_AS(parse_polynomial("1/7*x", PrimeField{7}, vars_xyz()), Error);
}

TEST_CASE("polynomial ring axioms on random elements", "[poly][property]") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 30; ++n) {
        auto a = random_poly(IntegerRing{}, vars_xyz(), 6, rng), b = random_poly(IntegerRing{}, vars_xyz(), 6, rng),
             c = random_poly(IntegerRing{}, vars_xyz(), 6, rng);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        if (!b.is_zero()) REQUIRE((a * b).exact_div(b) == a);
    }
}

TEST_CASE("multivariate gcd recovers a planted common factor", "[poly][property]") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 15; ++n) {
        auto g = random_poly(PrimeField{101}, vars_xyz(), 3, rng), a = random_poly(PrimeField{101}, vars_xyz(), 3, rng),
             b = random_poly(PrimeField{101}, vars_xyz(), 3, rng);
        if (g.is_constant() || a.is_zero() || b.is_zero()) continue;
        auto d = poly_gcd(g * a, g * b);
        REQUIRE((g * a).try_divide(d).has_value());
        REQUIRE((g * b).try_divide(d).has_value());
        REQUIRE(d.try_divide(g).has_value());
    }
}

TEST_CASE("univariate factorization over finite fields", "[poly][property]") {
    std::mt19937_64 rng(5);
    PrimeField F{13};
    for (int n = 0; n < 20; ++n) {
        std::vector<Fp> c;
        for (int i = 0; i < 9; ++i) c.push_back(random_element(F, rng));
        c.push_back(F.one());
        UPoly<Fp> f(F, c);
        auto fac = factor_univariate(f, n);
        REQUIRE(fac.expand().coeffs() == f.coeffs());
        for (auto& [g, m] : fac.factors) REQUIRE(fpx::is_irreducible([&] {
            std::vector<std::uint32_t> v;
            for (auto& a : g.coeffs()) v.push_back(a.value());
            return v;
        }(), 13));
        // roots from brute force
        std::vector<Fp> roots;
        for (std::uint32_t v = 0; v < 13; ++v) {
            Fp s = F.zero(), x = F.one();
            for (auto& a : c) s += a * x, x *= Fp(v, 13);
            if (s.is_zero()) roots.push_back(Fp(v, 13));
        }
        auto fr = field_roots(f, n);
        std::sort(fr.begin(), fr.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
        fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
        REQUIRE(fr == roots);
    }
}

TEST_CASE("binary root multiplicities", "[poly]") {
    // y^3 (y - z)^2 z^3 (y^2 + z^2) over F_7: i is not in F_7
    Poly<Fp> f = fp_poly("y^3*(y-z)^2*z^3*(y^2+z^2)", 7, vars_yz());
    auto roots = root_multiplicities(f, galois_field(7, 2));
    int total = 0, two = 0;
    for (auto& r : roots) {
        total += r.multiplicity;
        if (r.multiplicity == 1) ++two;
    }
    REQUIRE(total == 10);
    REQUIRE(roots.size() == 5);
    REQUIRE(two == 2);
    REQUIRE_THROWS_AS(root_multiplicities(f, galois_field(7, 1)), Error);
}

TEST_CASE("resultants against closed forms", "[poly]") {
    // Res_x(x - a, x - b) = b - a and Res_w of two binary forms via determinant
    auto r = resultant(q_poly("(x-2)*(x-3)"), q_poly("x-5"), "x");
    REQUIRE(r == q_poly("6"));
    auto r2 = resultant(q_poly("x^2+y^2"), q_poly("x-y"), "x");
    REQUIRE(r2 == q_poly("2*y^2"));
    Matrix<Integer> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    REQUIRE(bareiss_determinant(m, Integer(1)) == Integer(18));
}

TEST_CASE("linear systems report rank and consistency", "[poly]") {
    PrimeField F{31};
    auto f = [&](int n) { return F.from_int(n); };
    Matrix<Fp> a{{f(1), f(2)}, {f(2), f(4)}};
    auto s = solve_linear(a, {f(1), f(3)}, 2);
    REQUIRE(s.rank == 1);
    REQUIRE(s.augmented_rank == 2);
    REQUIRE_FALSE(s.solution);
    auto t = solve_linear(Matrix<Fp>{{f(1), f(1)}, {f(1), f(30)}}, {f(3), f(1)}, 2);
    REQUIRE(t.solution);
    REQUIRE((*t.solution)[0] == f(2));
}

TEST_CASE("binary invariants: discriminant relation and SL2 invariance", "[invariants][property]") {
    std::mt19937_64 rng(17);
    PrimeField F{101};
    for (int n = 0; n < 50; ++n) {
        std::vector<Fp> r;
        for (int i = 0; i < 4; ++i) r.push_back(random_element(F, rng));
        auto b = from_roots(r);
        Fp S = invariant_S(b), T = invariant_T(b);
        REQUIRE(F.from_int(4) * S * S * S - T * T == F.from_int(27) * root_discriminant(r));
        // unimodular substitution
        Fp a0 = random_element(F, rng), b0 = random_element(F, rng), c0 = random_element(F, rng);
        if (a0.is_zero()) continue;
        Fp d0 = (F.one() + b0 * c0) / a0;
        auto g = act(b, a0, b0, c0, d0);
        REQUIRE(invariant_S(g) == S);
        REQUIRE(invariant_T(g) == T);
    }
    auto b = BinaryQuartic<Rational>::from_poly(q_poly("y^4-y*z^3", vars_yz()));
    REQUIRE(invariant_S(b).is_zero());
    REQUIRE(invariant_T(b) == Rational(-27));
    REQUIRE(bilinear_S(b, b) == invariant_S(b));
}

TEST_CASE("harmonic quartic detects equianharmonic lines", "[invariants][property]") {
    // H(l) = 0 exactly when S of the restriction vanishes, for every line over F_13
    std::mt19937_64 rng(23);
    PrimeField F{13};
    for (int n = 0; n < 5; ++n) {
        TernaryQuartic<Fp> q(F);
        for (int i = 0; i < 15; ++i) q[i] = random_element(F, rng);
        Poly<Fp> H = harmonic_quartic(q), K = harmonic_sextic(q);
        for (std::uint32_t a = 0; a < 13; ++a)
            for (std::uint32_t b = 0; b < 13; ++b) {
                std::array<Fp, 3> l{F.one(), Fp(a, 13), Fp(b, 13)};
                auto r = restrict_to_line(q, l);
                REQUIRE(H.evaluate({l[0], l[1], l[2]}).is_zero() == invariant_S(r).is_zero());
                REQUIRE(K.evaluate({l[0], l[1], l[2]}).is_zero() == invariant_T(r).is_zero());
            }
    }
}

TEST_CASE("harmonic quartic agrees with the generic coefficient table", "[invariants]") {
    std::mt19937_64 rng(29);
    for (int n = 0; n < 10; ++n) {
        TernaryQuartic<Rational> q(RationalField{});
        std::uniform_int_distribution<int> d(-9, 9);
        for (int i = 0; i < 15; ++i) q[i] = Rational(d(rng));
        REQUIRE(cross_check_harmonic(q));
    }
}

TEST_CASE("apolarity pairing and the invariant A", "[invariants]") {
    auto klein = TernaryQuartic<Rational>::from_poly(q_poly("x^3*y+y^3*z+z^3*x"));
    REQUIRE(invariant_A(klein) == Rational(27));
    auto fermat = TernaryQuartic<Rational>::from_poly(q_poly("x^4+y^4+z^4"));
    REQUIRE(harmonic_quartic(fermat) == q_poly("12*u^4+12*v^4+12*w^4", vars_uvw()));
    // symmetry of the trilinear form under permutations
    auto a = TernaryQuartic<Rational>::from_poly(q_poly("x^4+2*x*y^3")), b = TernaryQuartic<Rational>::from_poly(q_poly("y^2*z^2-x*y*z^2")),
         c = TernaryQuartic<Rational>::from_poly(q_poly("z^4+x^2*y*z"));
    REQUIRE(trilinear_t(a, b, c) == trilinear_t(c, a, b));
    REQUIRE(trilinear_t(a, b, c) == trilinear_t(b, a, c));
}

TEST_CASE("sl3 action leaves the harmonic construction equivariant", "[invariants]") {
    for (auto& [name, g] : sl3_generators<Integer>(IntegerRing{})) {
        INFO(name);
        REQUIRE(verify_lie_identity(g).pass);
    }
}
