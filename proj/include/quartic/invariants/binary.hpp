#pragma once

#include <array>

#include "quartic/poly/polynomial.hpp"

namespace quartic {

/// f0 y^4 + f1 y^3 z + f2 y^2 z^2 + f3 y z^3 + f4 z^4.
template <class K>
struct BinaryQuartic {
    std::array<K, 5> f;

    static BinaryQuartic zero(const typename K::ring_type& r) { return {{r.zero(), r.zero(), r.zero(), r.zero(), r.zero()}}; }

    /// From a binary form of degree 4 (or zero) in two variables, the first
    /// playing the role of y.
    static BinaryQuartic from_poly(const Poly<K>& p) {
        if (p.nvars() != 2) fail(ErrorKind::InvalidArgument, "binary quartic needs exactly two variables");
        if (!p.is_homogeneous(4) && !p.is_zero()) fail(ErrorKind::InvalidArgument, "binary form is not a quartic");
        BinaryQuartic b = zero(p.base_ring());
        for (auto& [e, c] : p.terms()) b.f[e[1]] = c;
        return b;
    }
    Poly<K> to_poly(const VarSet* vars = vars_yz()) const {
        Poly<K> p(f[0].ring(), vars);
        for (int i = 0; i < 5; ++i) p.add_term(exps({4 - i, i}), f[i]);
        return p;
    }
    bool is_zero() const {
        for (auto& c : f)
            if (!c.is_zero()) return false;
        return true;
    }
    friend BinaryQuartic operator+(BinaryQuartic a, const BinaryQuartic& b) {
        for (int i = 0; i < 5; ++i) a.f[i] += b.f[i];
        return a;
    }
    friend bool operator==(const BinaryQuartic& a, const BinaryQuartic& b) { return a.f == b.f; }
};

template <class K>
K int_const(const K& like, std::int64_t n) { return like.ring().from_int(n); }

template <class K>
K invariant_S(const BinaryQuartic<K>& b) {
    const auto& f = b.f;
    return int_const(f[0], 12) * f[0] * f[4] - int_const(f[0], 3) * f[1] * f[3] + f[2] * f[2];
}

template <class K>
K invariant_T(const BinaryQuartic<K>& b) {
    const auto& f = b.f;
    auto c = [&](std::int64_t n) { return int_const(f[0], n); };
    return c(72) * f[0] * f[2] * f[4] - c(27) * f[0] * f[3] * f[3] - c(27) * f[1] * f[1] * f[4] +
           c(9) * f[1] * f[2] * f[3] - c(2) * f[2] * f[2] * f[2];
}

/// Degree-3 invariant usable in characteristic 3 (3*S3 = T + 2 f2 S).
template <class K>
K invariant_S3(const BinaryQuartic<K>& b) {
    const auto& f = b.f;
    auto c = [&](std::int64_t n) { return int_const(f[0], n); };
    return c(32) * f[0] * f[2] * f[4] - c(9) * f[0] * f[3] * f[3] - c(9) * f[1] * f[1] * f[4] + f[1] * f[2] * f[3];
}

/// Degree-4 invariant usable in characteristic 3 (3*S4 = S3 f2 + S (f0 f4 - f1 f3)).
template <class K>
K invariant_S4(const BinaryQuartic<K>& b) {
    const auto& f = b.f;
    auto c = [&](std::int64_t n) { return int_const(f[0], n); };
    return c(-128) * f[0] * f[0] * f[4] * f[4] + c(28) * f[0] * f[1] * f[3] * f[4] - c(3) * f[0] * f[2] * f[3] * f[3] -
           c(3) * f[1] * f[1] * f[2] * f[4] + f[1] * f[1] * f[3] * f[3];
}

/// Polar form of S: S(f+g) = S(f) + <f,g> + S(g).
template <class K>
K bilinear_S(const BinaryQuartic<K>& a, const BinaryQuartic<K>& b) {
    const auto& f = a.f;
    const auto& g = b.f;
    auto c = [&](std::int64_t n) { return int_const(f[0], n); };
    return c(12) * f[0] * g[4] - c(3) * f[1] * g[3] + c(2) * f[2] * g[2] - c(3) * f[3] * g[1] + c(12) * f[4] * g[0];
}

/// f(a y + b z, c y + d z).
template <class K>
BinaryQuartic<K> act(const BinaryQuartic<K>& in, const K& a, const K& b, const K& c, const K& d) {
    auto R = a.ring();
    auto vs = vars_yz();
    Poly<K> y = Poly<K>::variable(R, vs, "y"), z = Poly<K>::variable(R, vs, "z");
    Poly<K> p = in.to_poly(vs).eval_hom(PolyRing<K>{R, vs}, std::vector<Poly<K>>{y * Poly<K>::constant(R, vs, a) + z * Poly<K>::constant(R, vs, b),
                                                                    y * Poly<K>::constant(R, vs, c) + z * Poly<K>::constant(R, vs, d)},
                                        [&](const K& k) { return Poly<K>::constant(R, vs, k); });
    return BinaryQuartic<K>::from_poly(p);
}

} // namespace quartic
