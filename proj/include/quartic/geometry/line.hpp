#pragma once

#include <array>
#include <string>

#include "quartic/invariants/binary.hpp"
#include "quartic/invariants/ternary.hpp"

namespace quartic {

/// Point of the projective plane (or of its dual) with the first nonzero
/// coordinate scaled to one.
template <class K>
struct Projective {
    std::array<K, 3> c;

    static Projective normalized(std::array<K, 3> v) {
        int first = -1;
        for (int i = 0; i < 3; ++i)
            if (!v[i].is_zero()) {
                first = i;
                break;
            }
        if (first < 0) fail(ErrorKind::InvalidArgument, "all coordinates are zero");
        K inv = v[first].inverse();
        for (auto& x : v) x *= inv;
        return Projective{v};
    }
    int first_nonzero() const {
        for (int i = 0; i < 3; ++i)
            if (!c[i].is_zero()) return i;
        return -1;
    }
    const K& operator[](int i) const { return c[i]; }
    friend bool operator==(const Projective& a, const Projective& b) { return a.c == b.c; }
    std::string to_string() const {
        return "[" + c[0].to_string() + ":" + c[1].to_string() + ":" + c[2].to_string() + "]";
    }
};

template <class K> using ProjectiveLine = Projective<K>;
template <class K> using ProjectivePoint = Projective<K>;

template <class K>
K incidence(const std::array<K, 3>& a, const std::array<K, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class K>
std::array<K, 3> cross(const std::array<K, 3>& a, const std::array<K, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
bool all_zero(const std::array<K, 3>& a) {
    return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

/// Parameterization (s,r) -> s*at_s + r*at_r of a line, chosen by its first
/// nonzero coordinate:
///   u != 0: (x,y,z) = (-v s - w r, u s, u r)
///   u = 0, v != 0: (x,y,z) = (v s, -u s - w r, v r)
///   u = v = 0: (x,y,z) = (w s, w r, -u s - v r)
template <class K>
struct LineChart {
    std::array<K, 3> at_s, at_r;

    std::array<K, 3> point(const K& s, const K& r) const {
        return {s * at_s[0] + r * at_r[0], s * at_s[1] + r * at_r[1], s * at_s[2] + r * at_r[2]};
    }
};

template <class K>
LineChart<K> line_chart(const std::array<K, 3>& l) {
    const K& u = l[0];
    const K& v = l[1];
    const K& w = l[2];
    K z = u.ring().zero();
    if (!u.is_zero()) return {{-v, u, z}, {-w, z, u}};
    if (!v.is_zero()) return {{v, -u, z}, {z, -w, v}};
    if (!w.is_zero()) return {{w, z, -u}, {z, w, -v}};
    fail(ErrorKind::InvalidArgument, "line with all coordinates zero");
}

/// Binary quartic q restricted to the line in the chart parameterization;
/// f0 is the coefficient of s^4.
template <class K>
BinaryQuartic<K> restrict_to_line(const TernaryQuartic<K>& q, const std::array<K, 3>& l) {
    LineChart<K> ch = line_chart(l);
    auto R = q.ring();
    const VarSet* sr = varset({"s", "r"});
    PolyRing<K> PR{R, sr};
    std::vector<Poly<K>> img;
    for (int i = 0; i < 3; ++i) {
        Poly<K> t(R, sr);
        t.add_term(exps({1, 0}), ch.at_s[i]);
        t.add_term(exps({0, 1}), ch.at_r[i]);
        img.push_back(t);
    }
    Poly<K> p = q.to_poly().eval_hom(PR, img, [&](const K& c) { return Poly<K>::constant(R, sr, c); });
    return BinaryQuartic<K>::from_poly(p);
}

template <class K>
BinaryQuartic<K> restrict_to_line(const TernaryQuartic<K>& q, const ProjectiveLine<K>& l) {
    return restrict_to_line(q, l.c);
}

/// Gradient of a form at a point.
template <class K>
std::array<K, 3> gradient_at(const Poly<K>& f, const std::array<K, 3>& p) {
    std::vector<K> pt(p.begin(), p.end());
    return {f.derivative(0).evaluate(pt), f.derivative(1).evaluate(pt), f.derivative(2).evaluate(pt)};
}

/// Embeds a form into another coefficient ring through `map`.
template <class K2, class K, class F>
TernaryQuartic<K2> map_quartic(const TernaryQuartic<K>& q, const typename K2::ring_type& r2, F&& map) {
    TernaryQuartic<K2> out(r2);
    for (int n = 0; n < 15; ++n) out[n] = map(q[n]);
    return out;
}

} // namespace quartic
