#pragma once

#include <string>
#include <vector>

#include "quartic/geometry/contact.hpp"
#include "quartic/geometry/singular.hpp"

namespace quartic {

/// Rows of the dimension table for inflection schemes of plane quartics.
enum class SchemeClass { IsolatedDoublePoints, DoubleConic, TriplePoint, LineMult3 };

inline const char* label(SchemeClass c) {
    switch (c) {
    case SchemeClass::IsolatedDoublePoints: return "isolated double points / dim 0";
    case SchemeClass::DoubleConic: return "double conic / dim >= 1";
    case SchemeClass::TriplePoint: return "triple point / dim >= 1";
    case SchemeClass::LineMult3: return "line with multiplicity at least 3 / dim 2";
    }
    return "?";
}

inline const char* dimension(SchemeClass c) {
    switch (c) {
    case SchemeClass::IsolatedDoublePoints: return "0";
    case SchemeClass::DoubleConic: return ">=1";
    case SchemeClass::TriplePoint: return ">=1";
    case SchemeClass::LineMult3: return "2";
    }
    return "?";
}

inline bool is_finite(SchemeClass c) { return c == SchemeClass::IsolatedDoublePoints; }

namespace detail {

/// Rank of a ternary quadratic form (characteristic != 2).
template <class K>
int conic_rank(const Poly<K>& g) {
    const auto& R = g.base_ring();
    K half = R.from_int(2).inverse();
    Mat3<K> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Exponents e(3, 0);
            e[i] += 1;
            e[j] += 1;
            m[i][j] = i == j ? g.coeff(e) : g.coeff(e) * half;
        }
    if (!det3(m).is_zero()) return 3;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = c + 1; d < 3; ++d)
                    if (!(m[a][c] * m[b][d] - m[a][d] * m[b][c]).is_zero()) return 2;
    return 1;
}

template <class K>
std::vector<Poly<K>> second_partials(const Poly<K>& f) {
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) out.push_back(f.derivative(i).derivative(j));
    return out;
}

/// Class from the gcd of the partials, or nullopt when the curve is reduced.
template <class K>
std::optional<SchemeClass> nonreduced_class(const Poly<K>& f) {
    Poly<K> G = partials_gcd(f);
    int d = G.total_degree();
    if (d >= 3) return SchemeClass::LineMult3;
    if (d == 2) {
        int r = conic_rank(G);
        if (r == 1) return SchemeClass::LineMult3;
        if (r == 3) return SchemeClass::DoubleConic;
        return SchemeClass::TriplePoint;
    }
    if (d == 1) return SchemeClass::TriplePoint;
    return std::nullopt;
}

template <class K>
void check_quartic(const Poly<K>& f) {
    if (f.is_zero() || f.nvars() != 3 || !f.is_homogeneous(4)) fail(ErrorKind::InvalidArgument, "expected a nonzero ternary quartic");
    require_char_coprime_to_6(f.base_ring().characteristic());
}

} // namespace detail

/// Dimension class of the inflection scheme of q = 0 over F_p.
inline SchemeClass classify_inflection_dimension(const Poly<Fp>& f, std::uint64_t seed = 0) {
    detail::check_quartic(f);
    if (auto c = detail::nonreduced_class(f)) return *c;
    auto d2 = detail::second_partials(f);
    if (!common_zero_orbits(d2, d2.size(), seed).empty()) return SchemeClass::TriplePoint;
    return SchemeClass::IsolatedDoublePoints;
}

/// Same over Q; a triple point of a reduced quartic is unique, hence rational.
inline SchemeClass classify_inflection_dimension(const Poly<Rational>& f, std::uint64_t seed = 0) {
    detail::check_quartic(f);
    if (auto c = detail::nonreduced_class(f)) return *c;
    if (unique_rational_common_zero(detail::second_partials(f), seed)) return SchemeClass::TriplePoint;
    return SchemeClass::IsolatedDoublePoints;
}

template <class K>
SchemeClass classify_inflection_dimension(const TernaryQuartic<K>& q, std::uint64_t seed = 0) {
    return classify_inflection_dimension(q.to_poly(), seed);
}

} // namespace quartic
