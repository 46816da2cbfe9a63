#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "quartic/poly/univariate.hpp"
#include "quartic/rings/galois_field.hpp"
#include "quartic/rings/prime_field.hpp"

namespace quartic {

// Finite-field services shared by Fp and GF.
inline Fp pow_big(const Fp& a, const BigInt& e) {
    BigInt r = boost::multiprecision::powm(BigInt(a.value()), e, BigInt(a.modulus()));
    return Fp(static_cast<std::uint32_t>(r), a.modulus());
}
inline GF pow_big(const GF& a, const BigInt& e) { return a.pow(e); }

inline Fp random_element(const PrimeField& r, std::mt19937_64& rng) {
    return Fp(static_cast<std::uint32_t>(rng() % r.p), r.p);
}
inline GF random_element(const GaloisRing& r, std::mt19937_64& rng) {
    fpx::Vec c(r.field->k);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % r.field->p);
    return GF(r.field, std::move(c));
}

/// Canonical total order on finite-field elements, for deterministic output.
inline bool canonical_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }
inline bool canonical_less(const GF& a, const GF& b) {
    int n = std::max(a.coeffs().size(), b.coeffs().size());
    for (int i = n - 1; i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

template <class K>
bool canonical_less(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        if (canonical_less(a.coeff(i), b.coeff(i))) return true;
        if (canonical_less(b.coeff(i), a.coeff(i))) return false;
    }
    return false;
}

template <class K>
struct FactoredUnivariate {
    K unit;
    std::vector<std::pair<UPoly<K>, int>> factors; // monic irreducible, multiplicity

    UPoly<K> expand() const {
        UPoly<K> r = UPoly<K>::constant(unit.ring(), unit);
        for (auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) r *= f;
        return r;
    }
};

namespace detail {

template <class K>
UPoly<K> pth_root(const UPoly<K>& f) {
    const auto& r = f.ring();
    std::uint64_t p = r.characteristic();
    BigInt e = r.order() / p; // a -> a^(q/p) inverts Frobenius
    std::vector<K> c;
    for (int i = 0; i <= f.deg(); i += static_cast<int>(p)) c.push_back(pow_big(f.coeff(i), e));
    return UPoly<K>(r, std::move(c));
}

template <class K>
void squarefree(const UPoly<K>& f, int scale, std::map<int, UPoly<K>>& out) {
    if (f.deg() <= 0) return;
    auto add = [&](const UPoly<K>& g, int m) {
        auto it = out.find(m);
        if (it == out.end()) out.emplace(m, g);
        else it->second = it->second * g;
    };
    UPoly<K> fp = f.derivative();
    if (fp.is_zero()) {
        squarefree(pth_root(f), scale * static_cast<int>(f.ring().characteristic()), out);
        return;
    }
    UPoly<K> c = gcd(f, fp);
    UPoly<K> w = f / c;
    int i = 1;
    while (w.deg() > 0) {
        UPoly<K> y = gcd(w, c);
        UPoly<K> z = w / y;
        if (z.deg() > 0) add(z.monic(), i * scale);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.deg() > 0) squarefree(pth_root(c.monic()), scale * static_cast<int>(f.ring().characteristic()), out);
}

template <class K>
std::vector<std::pair<UPoly<K>, int>> distinct_degree(UPoly<K> f) {
    std::vector<std::pair<UPoly<K>, int>> out;
    const auto& r = f.ring();
    BigInt q = r.order();
    UPoly<K> x = UPoly<K>::x(r);
    UPoly<K> h = x % f;
    for (int i = 1; f.deg() >= 2 * i; ++i) {
        h = h.powmod(q, f);
        UPoly<K> g = gcd(f, h - x);
        if (g.deg() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.deg() > 0) out.emplace_back(f.monic(), f.deg());
    return out;
}

template <class K>
void equal_degree(const UPoly<K>& f, int d, std::mt19937_64& rng, std::vector<UPoly<K>>& out) {
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    const auto& r = f.ring();
    BigInt qd = boost::multiprecision::pow(r.order(), static_cast<unsigned>(d));
    std::uint64_t p = r.characteristic();
    while (true) {
        std::vector<K> c;
        for (int i = 0; i < f.deg(); ++i) c.push_back(random_element(r, rng));
        UPoly<K> a(r, std::move(c));
        if (a.deg() <= 0) continue;
        UPoly<K> g = gcd(a, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
        UPoly<K> b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(m-1)) with q^d = 2^m
            unsigned m = static_cast<unsigned>(boost::multiprecision::msb(qd));
            b = a % f;
            UPoly<K> t = b;
            for (unsigned i = 1; i < m; ++i) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            b = a.powmod((qd - 1) / 2, f) - UPoly<K>::constant(r, r.one());
        }
        g = gcd(b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace detail

/// Complete factorization over a finite field (Fp or GF). Factor order is
/// canonical: by multiplicity, then degree, then coefficients.
template <class K>
FactoredUnivariate<K> factor_univariate(const UPoly<K>& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
    FactoredUnivariate<K> out{f.lead(), {}};
    std::map<int, UPoly<K>> sqf;
    detail::squarefree(f.monic(), 1, sqf);
    std::mt19937_64 rng(seed);
    for (auto& [m, g] : sqf) {
        for (auto& [h, d] : detail::distinct_degree(g)) {
            std::vector<UPoly<K>> parts;
            detail::equal_degree(h, d, rng, parts);
            for (auto& pt : parts) out.factors.emplace_back(pt, m);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });
    return out;
}

/// Distinct roots lying in the coefficient field, sorted canonically.
template <class K>
std::vector<K> field_roots(const UPoly<K>& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial has every root");
    std::vector<K> roots;
    if (f.deg() <= 0) return roots;
    const auto& r = f.ring();
    UPoly<K> x = UPoly<K>::x(r);
    UPoly<K> g = gcd(f, x.powmod(r.order(), f.monic()) - x);
    if (g.deg() <= 0) return roots;
    std::mt19937_64 rng(seed);
    std::vector<UPoly<K>> parts;
    detail::equal_degree(g, 1, rng, parts);
    for (auto& pt : parts) roots.push_back(-pt.coeff(0));
    std::sort(roots.begin(), roots.end(), [](const K& a, const K& b) { return canonical_less(a, b); });
    return roots;
}

/// Squarefree part (radical) of a monic polynomial.
template <class K>
UPoly<K> radical(const UPoly<K>& f) {
    std::map<int, UPoly<K>> sqf;
    detail::squarefree(f.monic(), 1, sqf);
    UPoly<K> r = UPoly<K>::constant(f.ring(), f.ring().one());
    for (auto& [m, g] : sqf) r *= g;
    return r;
}

} // namespace quartic
