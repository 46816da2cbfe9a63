#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "quartic/core/error.hpp"
#include "quartic/rings/integer.hpp"

namespace quartic {

template <class K> class Local;

template <class K>
struct LocalRing {
    typename K::ring_type base;

    Local<K> zero() const { return Local<K>(base); }
    Local<K> one() const { return Local<K>(base, {base.one()}); }
    Local<K> from_int(std::int64_t n) const { return Local<K>(base, {base.from_int(n)}); }
    Local<K> from_integer(const BigInt& n) const { return Local<K>(base, {base.from_integer(n)}); }
    /// The uniformizing parameter t.
    Local<K> t() const { return Local<K>(base, {base.zero(), base.one()}); }
    std::uint64_t characteristic() const { return base.characteristic(); }
    bool is_field() const { return false; }
    std::string name() const { return "local-t:" + base.name(); }
    bool operator==(const LocalRing&) const = default;
};

/// Polynomial in the parameter t over K, viewed inside the local ring at t = 0.
/// Units are the elements with nonzero constant term.
template <class K>
class Local {
public:
    using ring_type = LocalRing<K>;

    Local() = default;
    explicit Local(typename K::ring_type base, std::vector<K> c = {}) : base_(base), c_(std::move(c)) { trim(); }

    ring_type ring() const { return {base_}; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : base_.zero(); }
    K constant_term() const { return coeff(0); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }

    /// Largest v with t^v dividing this element; -1 for zero.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }
    /// Division by t^v; requires t^v to divide.
    Local shift_down(int v) const {
        if (v == 0) return *this;
        int val = valuation();
        if (!is_zero() && val < v) fail(ErrorKind::Internal, "t-power does not divide");
        if (is_zero()) return *this;
        return Local(base_, std::vector<K>(c_.begin() + v, c_.end()));
    }

    Local operator-() const {
        std::vector<K> r = c_;
        for (auto& x : r) x = -x;
        return Local(base_, std::move(r));
    }
    Local& operator+=(const Local& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), base_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Local& operator-=(const Local& o) { return *this += -o; }
    Local& operator*=(const Local& o) {
        if (c_.empty() || o.c_.empty()) {
            c_.clear();
            return *this;
        }
        std::vector<K> r(c_.size() + o.c_.size() - 1, base_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        c_ = std::move(r);
        trim();
        return *this;
    }
    friend Local operator+(Local a, const Local& b) { return a += b; }
    friend Local operator-(Local a, const Local& b) { return a -= b; }
    friend Local operator*(Local a, const Local& b) { return a *= b; }
    friend bool operator==(const Local& a, const Local& b) { return a.c_ == b.c_; }

    /// Exact division in K[t] (used by fraction-free elimination).
    Local exact_div(const Local& d) const {
        if (d.is_zero()) fail(ErrorKind::Internal, "division by zero in K[t]");
        if (is_zero()) return *this;
        std::vector<K> r = c_;
        int dd = d.degree();
        int dq = degree() - dd;
        if (dq < 0) fail(ErrorKind::Internal, "inexact division in K[t]");
        std::vector<K> q(dq + 1, base_.zero());
        for (int i = dq; i >= 0; --i) {
            K c = r[i + dd].exact_div(d.c_[dd]);
            q[i] = c;
            for (int j = 0; j <= dd; ++j) r[i + j] -= c * d.c_[j];
        }
        for (auto& x : r)
            if (!x.is_zero()) fail(ErrorKind::Internal, "inexact division in K[t]");
        return Local(base_, std::move(q));
    }

    std::string to_string() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            std::string c = c_[i].to_string();
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += c;
                continue;
            }
            if (!c_[i].is_one()) out += "(" + c + ")*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
        return out.empty() ? "0" : "(" + out + ")";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    typename K::ring_type base_{};
    std::vector<K> c_;
};

template <class K>
Local<K> embed_local(const K& a) { return Local<K>(a.ring(), {a}); }

} // namespace quartic
