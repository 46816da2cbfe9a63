#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quartic/geometry/classify.hpp"
#include "quartic/geometry/configuration.hpp"
#include "quartic/poly/parse.hpp"
#include "quartic/reconstruction/hyperflex.hpp"

namespace quartic {

using nlohmann::json;

// Every number is written as a decimal string; extension elements are
// polynomials in the generator "a".

inline json decimal(long long n) { return std::to_string(n); }

template <class K>
json element_json(const K& a) {
    return a.to_string();
}

template <class K>
json vector_json(const std::array<K, 3>& v) {
    return json::array({element_json(v[0]), element_json(v[1]), element_json(v[2])});
}

inline json extension_json(const GaloisField* f) {
    return {{"p", decimal(f->p)}, {"degree", decimal(f->k)}, {"modulus", f->modulus_string()}};
}

inline json scheme_class_json(SchemeClass c) {
    return {{"label", label(c)}, {"dimension", dimension(c)}, {"finite", is_finite(c)}};
}

inline json configuration_json(const InflectionConfiguration& cfg, SchemeClass cls) {
    json out;
    out["class"] = scheme_class_json(cls);
    out["total_multiplicity"] = decimal(cfg.total_multiplicity());
    json orbits = json::array();
    for (auto& o : cfg.orbits) {
        json j{{"extension", extension_json(o.line.c[0].field())},
               {"degree", decimal(o.degree())},
               {"line", vector_json(o.line.c)},
               {"multiplicity", decimal(o.multiplicity)},
               {"tag", to_string(o.flex.kind)}};
        j["contact_point"] = o.flex.contact_point ? vector_json(o.flex.contact_point->c) : json(nullptr);
        orbits.push_back(std::move(j));
    }
    out["orbits"] = std::move(orbits);
    if (!cfg.expanded()) {
        out["extension"] = nullptr;
        out["entries"] = nullptr;
        return out;
    }
    out["extension"] = extension_json(cfg.ambient);
    json entries = json::array();
    for (auto& e : cfg.entries) {
        json j{{"line", vector_json(e.line.c)}, {"multiplicity", decimal(e.multiplicity)}, {"tag", to_string(e.tag)}};
        j["contact_point"] = e.contact_point ? vector_json(e.contact_point->c) : json(nullptr);
        entries.push_back(std::move(j));
    }
    out["entries"] = std::move(entries);
    return out;
}

/// A field element written as a decimal integer or fraction, or over an
/// extension field as a polynomial in a.
template <class R>
auto parse_element(const json& j, const R& ring) {
    if (!j.is_string()) fail(ErrorKind::Parse, "expected a decimal string, got " + j.dump());
    const std::string text = j.get<std::string>();
    if constexpr (std::is_same_v<R, GaloisRing>) {
        // a polynomial in the generator a, parsed with a renamed to t
        std::string renamed = text;
        for (char& ch : renamed) {
            if (ch == 't') fail(ErrorKind::Parse, "expected a polynomial in a, got '" + text + "'");
            if (ch == 'a') ch = 't';
        }
        Poly<Rational> p = parse_rational_polynomial(renamed);
        int ai = p.vars()->index_of("t");
        GF out = ring.zero();
        for (auto& [e, c] : p.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                if (static_cast<int>(i) != ai && e[i] > 0) fail(ErrorKind::Parse, "expected a polynomial in a, got '" + text + "'");
            out += rational_to(ring, c) * ring.generator().pow(BigInt(ai < 0 ? 0 : e[ai]));
        }
        return out;
    } else {
        Poly<Rational> p = parse_rational_polynomial(text);
        if (!p.is_constant()) fail(ErrorKind::Parse, "expected a number, got '" + text + "'");
        return rational_to(ring, p.constant_coeff());
    }
}

template <class R>
auto parse_triple(const json& j, const R& ring) {
    using K = decltype(ring.one());
    if (!j.is_array() || j.size() != 3) fail(ErrorKind::Parse, "expected three coordinates, got " + j.dump());
    return std::array<K, 3>{parse_element(j[0], ring), parse_element(j[1], ring), parse_element(j[2], ring)};
}

/// [{"line": [a, b, c], "point": [x, y, z]}, ...]
template <class R>
auto parse_hyperflex_data(const json& j, const R& ring) {
    using K = decltype(ring.one());
    if (!j.is_array()) fail(ErrorKind::Parse, "hyperflex data must be a JSON array");
    std::vector<HyperflexDatum<K>> out;
    for (auto& d : j) {
        if (!d.is_object() || !d.contains("line") || !d.contains("point")) fail(ErrorKind::Parse, "each datum needs 'line' and 'point'");
        auto l = parse_triple(d["line"], ring), p = parse_triple(d["point"], ring);
        if (all_zero(l) || all_zero(p)) fail(ErrorKind::InvalidArgument, "zero vector is not a projective point");
        out.push_back({ProjectiveLine<K>::normalized(l), ProjectivePoint<K>::normalized(p)});
    }
    return out;
}

inline json error_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace quartic
