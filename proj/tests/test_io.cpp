#include <catch2/catch_amalgamated.hpp>

#include "quartic/io/json.hpp"
#include "quartic/reconstruction/vermeulen.hpp"

using namespace quartic;

TEST_CASE("configuration JSON feeds back into reconstruction", "[io]") {
    auto q = vermeulen_quartic(PrimeField{13}.from_int(-1));
    auto cfg = inflection_configuration(q);
    json j = json::parse(configuration_json(cfg, SchemeClass::IsolatedDoublePoints).dump());
    REQUIRE(j["total_multiplicity"] == "24");
    REQUIRE(j["class"]["label"] == "isolated double points / dim 0");
    REQUIRE(j["extension"]["p"] == "13");

    json data = json::array();
    for (auto& e : j["entries"])
        if (e["tag"] == "hyperinflection") data.push_back({{"line", e["line"]}, {"point", e["contact_point"]}});
    REQUIRE(data.size() == 8);
    GaloisRing A{cfg.ambient};
    auto parsed = parse_hyperflex_data(data, A);
    REQUIRE(reconstruct_from_hyperflexes(parsed) == normalize_scalar(lift_quartic(q, cfg.ambient)));
}

TEST_CASE("numbers are decimal strings", "[io]") {
    REQUIRE(decimal(-12).is_string());
    REQUIRE(parse_element(json("3/4"), RationalField{}) == Rational(3, 4));
    REQUIRE(parse_element(json("-1"), PrimeField{13}) == Fp(12, 13));
    REQUIRE(parse_element(json("1/2"), PrimeField{13}) == Fp(7, 13));
    GaloisRing G{galois_field(13, 2)};
    GF a = parse_element(json("3*a+1"), G);
    REQUIRE(parse_element(json(a.to_string()), G) == a);
    REQUIRE(a == G.from_int(3) * G.generator() + G.one());
}

TEST_CASE("malformed JSON input is rejected with a kind", "[io]") {
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return std::string(to_string(e.kind()));
        }
        return std::string("none");
    };
    REQUIRE(kind([] { parse_element(json(3), RationalField{}); }) == "parse_error");
    REQUIRE(kind([] { parse_element(json("x+1"), RationalField{}); }) == "parse_error");
    REQUIRE(kind([] { parse_element(json("1/13"), PrimeField{13}); }) == "invalid_argument");
    REQUIRE(kind([] { parse_triple(json::array({"1", "2"}), RationalField{}); }) == "parse_error");
    REQUIRE(kind([] { parse_hyperflex_data(json::object(), RationalField{}); }) == "parse_error");
    REQUIRE(kind([] { parse_hyperflex_data(json::array({{{"line", {"0", "0", "0"}}, {"point", {"1", "0", "0"}}}}), RationalField{}); }) ==
            "invalid_argument");
    REQUIRE(kind([] { parse_element(json("t"), GaloisRing{galois_field(5, 2)}); }) == "parse_error");
}

TEST_CASE("error and class objects have a fixed shape", "[io]") {
    json e = error_json("non_finite_scheme", "line with multiplicity at least 3 / dim 2");
    REQUIRE(e.dump() == R"({"error":{"kind":"non_finite_scheme","message":"line with multiplicity at least 3 / dim 2"}})");
    json c = scheme_class_json(SchemeClass::DoubleConic);
    REQUIRE(c["label"] == "double conic / dim >= 1");
    REQUIRE(c["finite"] == false);
}
