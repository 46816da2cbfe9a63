#pragma once

#include <optional>
#include <string>

#include "quartic/geometry/line.hpp"
#include "quartic/poly/univariate.hpp"

namespace quartic {

enum class FlexTag { Simple, Hyperinflection, ThroughSingular, ContainedInCurve, Unclassified };

inline const char* to_string(FlexTag t) {
    switch (t) {
    case FlexTag::Simple: return "simple";
    case FlexTag::Hyperinflection: return "hyperinflection";
    case FlexTag::ThroughSingular: return "through_singular";
    case FlexTag::ContainedInCurve: return "contained_in_curve";
    case FlexTag::Unclassified: return "unclassified";
    }
    return "?";
}

template <class K>
struct FlexClassification {
    FlexTag kind;
    std::optional<ProjectivePoint<K>> contact_point; // absent for lines inside the curve
    int contact_multiplicity = 0;
};

inline void require_char_coprime_to_6(std::uint64_t ch) {
    if (ch == 2 || ch == 3) fail(ErrorKind::Precondition, "characteristic must be coprime to 6");
}

template <class K>
bool is_singular_point(const TernaryQuartic<K>& q, const std::array<K, 3>& p) {
    auto g = gradient_at(q.to_poly(), p);
    return all_zero(g);
}

/// Decides how the line meets the quartic: the point of contact of order at
/// least 3 and whether the curve is smooth there. Over any field of
/// characteristic 0 or at least 5; the contact point is always rational over
/// the field of the line since it is the unique root of order >= 3.
template <class K>
FlexClassification<K> contact_analysis(const TernaryQuartic<K>& q, const std::array<K, 3>& line) {
    const auto& R = q.ring();
    require_char_coprime_to_6(R.characteristic());
    BinaryQuartic<K> f = restrict_to_line(q, line);
    if (f.is_zero()) return {FlexTag::ContainedInCurve, std::nullopt, 0};
    LineChart<K> ch = line_chart(line);
    // f(s, 1) = sum f_n s^(4-n)
    std::vector<K> c(5, R.zero());
    for (int n = 0; n < 5; ++n) c[4 - n] = f.f[n];
    UPoly<K> g(R, c);
    int at_infinity = 4 - g.deg();
    int mult = 0;
    std::array<K, 3> point;
    if (at_infinity >= 3) {
        mult = at_infinity;
        point = ch.point(R.one(), R.zero());
    } else {
        UPoly<K> G = gcd(gcd(g, g.derivative()), g.derivative().derivative());
        if (G.deg() <= 0) fail(ErrorKind::NotInflectionLine, "line has no point of contact of order at least 3");
        mult = G.deg() + 2;
        // G = (s - alpha)^e with e = deg G
        K alpha = -G.coeff(G.deg() - 1) / R.from_int(G.deg());
        point = ch.point(alpha, R.one());
    }
    auto pt = ProjectivePoint<K>::normalized(point);
    if (is_singular_point(q, pt.c)) return {FlexTag::ThroughSingular, pt, mult};
    if (mult == 4) return {FlexTag::Hyperinflection, pt, mult};
    return {FlexTag::Simple, pt, mult};
}

} // namespace quartic
