#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "quartic/core/error.hpp"

namespace quartic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Integer;
class Rational;

struct IntegerRing {
    Integer zero() const;
    Integer one() const;
    Integer from_int(std::int64_t n) const;
    Integer from_integer(const BigInt& n) const;
    std::uint64_t characteristic() const { return 0; }
    bool is_field() const { return false; }
    std::string name() const { return "Z"; }
    bool operator==(const IntegerRing&) const = default;
};

class Integer {
public:
    using ring_type = IntegerRing;

    Integer() = default;
    Integer(std::int64_t n) : v_(n) {}
    explicit Integer(BigInt v) : v_(std::move(v)) {}

    IntegerRing ring() const { return {}; }
    const BigInt& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }

    Integer operator-() const { return Integer(BigInt(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }

    /// Division that must be exact (Bareiss elimination, content removal).
    Integer exact_div(const Integer& d) const {
        if (d.is_zero()) fail(ErrorKind::Internal, "integer division by zero");
        BigInt q, r;
        boost::multiprecision::divide_qr(v_, d.v_, q, r);
        if (r != 0) fail(ErrorKind::Internal, "inexact integer division");
        return Integer(std::move(q));
    }

    bool divides(const Integer& n) const {
        if (is_zero()) return n.is_zero();
        return n.v_ % v_ == 0;
    }

    /// Unit normalization for up-to-scalar comparison over Z: make positive.
    bool is_unit() const { return v_ == 1 || v_ == -1; }

    std::string to_string() const { return v_.str(); }

private:
    BigInt v_;
};

inline Integer IntegerRing::zero() const { return Integer(0); }
inline Integer IntegerRing::one() const { return Integer(1); }
inline Integer IntegerRing::from_int(std::int64_t n) const { return Integer(n); }
inline Integer IntegerRing::from_integer(const BigInt& n) const { return Integer(n); }

struct RationalField {
    Rational zero() const;
    Rational one() const;
    Rational from_int(std::int64_t n) const;
    Rational from_integer(const BigInt& n) const;
    std::uint64_t characteristic() const { return 0; }
    bool is_field() const { return true; }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const = default;
};

/// Always in lowest terms with positive denominator (the backend guarantees it).
class Rational {
public:
    using ring_type = RationalField;

    Rational() = default;
    Rational(std::int64_t n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
        v_ = BigRational(num, den);
    }
    explicit Rational(BigRational v) : v_(std::move(v)) {}

    RationalField ring() const { return {}; }
    const BigRational& value() const { return v_; }
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integral() const { return denominator() == 1; }

    Rational operator-() const { return Rational(BigRational(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero in Q");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    Rational inverse() const {
        if (is_zero()) fail(ErrorKind::InvalidArgument, "zero has no inverse");
        return Rational(BigRational(1) / v_);
    }
    Rational exact_div(const Rational& d) const { return *this / d; }

    std::string to_string() const {
        if (is_integral()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

private:
    BigRational v_;
};

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_int(std::int64_t n) const { return Rational(n); }
inline Rational RationalField::from_integer(const BigInt& n) const { return Rational(BigRational(n)); }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace quartic
