#pragma once

#include <cstdint>
#include <string>

#include "quartic/core/error.hpp"
#include "quartic/rings/integer.hpp"

namespace quartic {

template <class K> class Dual;

template <class K>
struct DualRing {
    typename K::ring_type base;

    Dual<K> zero() const { return Dual<K>(base.zero(), base.zero()); }
    Dual<K> one() const { return Dual<K>(base.one(), base.zero()); }
    Dual<K> from_int(std::int64_t n) const { return Dual<K>(base.from_int(n), base.zero()); }
    Dual<K> from_integer(const BigInt& n) const { return Dual<K>(base.from_integer(n), base.zero()); }
    Dual<K> eps() const { return Dual<K>(base.zero(), base.one()); }
    std::uint64_t characteristic() const { return base.characteristic(); }
    bool is_field() const { return false; }
    std::string name() const { return "dual:" + base.name(); }
    bool operator==(const DualRing&) const = default;
};

/// a + b*eps with eps^2 = 0.
template <class K>
class Dual {
public:
    using ring_type = DualRing<K>;

    Dual() = default;
    Dual(K a, K b) : a_(std::move(a)), b_(std::move(b)) {}

    ring_type ring() const { return {a_.ring()}; }
    const K& real() const { return a_; }
    const K& eps_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_unit() const { return !a_.is_zero(); }

    Dual operator-() const { return Dual(-a_, -b_); }
    Dual& operator+=(const Dual& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Dual& operator-=(const Dual& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Dual& operator*=(const Dual& o) {
        K nb = a_ * o.b_ + b_ * o.a_;
        a_ *= o.a_;
        b_ = std::move(nb);
        return *this;
    }
    friend Dual operator+(Dual x, const Dual& y) { return x += y; }
    friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
    friend Dual operator*(Dual x, const Dual& y) { return x *= y; }
    friend bool operator==(const Dual& x, const Dual& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    /// Inverse of a unit a + b*eps: a^-1 - b*a^-2*eps.
    Dual inverse() const {
        if (!is_unit()) fail(ErrorKind::InvalidArgument, "dual number is not a unit");
        K ia = a_.inverse();
        return Dual(ia, -(b_ * ia * ia));
    }
    Dual exact_div(const Dual& d) const {
        if (d.is_unit()) return *this * d.inverse();
        // (a + b eps) / (d eps) requires a = 0; quotient is b/d plus an undetermined eps part.
        fail(ErrorKind::Internal, "division by a non-unit dual number");
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string s = a_.is_zero() ? "" : a_.to_string() + "+";
        return "(" + s + "(" + b_.to_string() + ")*eps)";
    }

private:
    K a_{}, b_{};
};

template <class K>
Dual<K> embed_dual(const K& a) { return Dual<K>(a, a.ring().zero()); }

} // namespace quartic
