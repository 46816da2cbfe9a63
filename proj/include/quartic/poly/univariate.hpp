#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quartic/core/error.hpp"
#include "quartic/poly/polynomial.hpp"
#include "quartic/rings/integer.hpp"

namespace quartic {

/// Dense univariate polynomial over a field, lowest degree first.
template <class K>
class UPoly {
public:
    using ring_type_base = typename K::ring_type;

    UPoly() = default;
    explicit UPoly(ring_type_base r, std::vector<K> c = {}) : r_(r), c_(std::move(c)) { trim(); }

    static UPoly x(ring_type_base r) { return UPoly(r, {r.zero(), r.one()}); }
    static UPoly constant(ring_type_base r, const K& a) { return UPoly(r, {a}); }

    const ring_type_base& ring() const { return r_; }
    const std::vector<K>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : r_.zero(); }
    const K& lead() const { return c_.back(); }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    UPoly operator-() const {
        auto c = c_;
        for (auto& a : c) a = -a;
        return UPoly(r_, std::move(c));
    }
    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), r_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), r_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.r_);
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.r_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(a.r_, std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly scaled(const K& s) const {
        auto c = c_;
        for (auto& a : c) a *= s;
        return UPoly(r_, std::move(c));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) fail(ErrorKind::Internal, "univariate division by zero");
        int dd = d.deg();
        if (deg() < dd) return {UPoly(r_), *this};
        std::vector<K> r = c_, q(deg() - dd + 1, r_.zero());
        K li = d.lead().inverse();
        for (int i = deg() - dd; i >= 0; --i) {
            K c = r[i + dd] * li;
            q[i] = c;
            if (c.is_zero()) continue;
            for (int j = 0; j <= dd; ++j) r[i + j] -= c * d.c_[j];
        }
        r.resize(dd);
        return {UPoly(r_, std::move(q)), UPoly(r_, std::move(r))};
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }

    UPoly monic() const { return is_zero() ? *this : scaled(lead().inverse()); }

    UPoly derivative() const {
        std::vector<K> c;
        for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * r_.from_int(static_cast<std::int64_t>(i)));
        return UPoly(r_, std::move(c));
    }

    K eval(const K& a) const {
        K acc = r_.zero();
        for (int i = deg(); i >= 0; --i) acc = acc * a + c_[i];
        return acc;
    }

    /// this^e mod m.
    UPoly powmod(const BigInt& e, const UPoly& m) const {
        UPoly r = UPoly::constant(r_, r_.one()) % m, b = *this % m;
        if (e == 0) return r;
        unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
        for (unsigned i = bits; i-- > 0;) {
            r = (r * r) % m;
            if (boost::multiprecision::bit_test(e, i)) r = (r * b) % m;
        }
        return r;
    }

    std::string to_string(const std::string& var = "x") const {
        auto vs = varset({var});
        Poly<K> p(r_, vs);
        for (int i = 0; i <= deg(); ++i) p.add_term(exps({i}), c_[i]);
        return p.to_string();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    ring_type_base r_{};
    std::vector<K> c_;
};

/// Monic gcd (zero if both are zero).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
UPoly<K> upoly_from_poly(const Poly<K>& f, std::size_t var) {
    std::vector<K> c(std::max(0, f.degree_in(var) + 1), f.base_ring().zero());
    for (auto& [e, a] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) fail(ErrorKind::InvalidArgument, "polynomial is not univariate");
        c[e[var]] += a;
    }
    return UPoly<K>(f.base_ring(), std::move(c));
}

template <class K2, class K, class F>
UPoly<K2> map_upoly(const UPoly<K>& f, const typename K2::ring_type& r2, F&& map) {
    std::vector<K2> c;
    for (auto& a : f.coeffs()) c.push_back(map(a));
    return UPoly<K2>(r2, std::move(c));
}

} // namespace quartic
