#pragma once

#include <cstdint>
#include <string>

#include "quartic/rings/integer.hpp"

namespace quartic {

class Fp;

struct PrimeField {
    std::uint32_t p = 2;

    Fp zero() const;
    Fp one() const;
    Fp from_int(std::int64_t n) const;
    Fp from_integer(const BigInt& n) const;
    std::uint64_t characteristic() const { return p; }
    BigInt order() const { return BigInt(p); }
    bool is_field() const { return true; }
    std::string name() const { return "Fp:" + std::to_string(p); }
    bool operator==(const PrimeField&) const = default;
};

inline PrimeField make_prime_field(std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) fail(ErrorKind::InvalidArgument, "prime too large for the word-sized field");
    return PrimeField{static_cast<std::uint32_t>(p)};
}

/// Element of Z/pZ; carries its modulus so that elements are self-describing.
class Fp {
public:
    using ring_type = PrimeField;

    Fp() = default;
    Fp(std::uint32_t v, std::uint32_t p) : v_(v % p), p_(p) {}

    PrimeField ring() const { return {p_}; }
    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) {
        check(o);
        std::uint32_t s = v_ + o.v_;
        v_ = s >= p_ ? s - p_ : s;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    Fp inverse() const {
        if (v_ == 0) fail(ErrorKind::InvalidArgument, "zero has no inverse");
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (x0 < 0) x0 += p_;
        return Fp(static_cast<std::uint32_t>(x0), p_);
    }
    Fp exact_div(const Fp& d) const { return *this / d; }

    Fp pow(std::uint64_t e) const {
        Fp r(1, p_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const {
        if (o.p_ != p_) fail(ErrorKind::RingMismatch, "elements of different prime fields");
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

inline Fp PrimeField::zero() const { return Fp(0, p); }
inline Fp PrimeField::one() const { return Fp(1, p); }
inline Fp PrimeField::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), p);
}
inline Fp PrimeField::from_integer(const BigInt& n) const {
    BigInt r = n % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), p);
}

} // namespace quartic
