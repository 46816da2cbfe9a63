#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "quartic/rings/prime_field.hpp"

namespace quartic {

namespace fpx {

// Dense polynomials over Z/pZ as coefficient vectors, lowest degree first,
// without trailing zeros. Used for moduli and field arithmetic.
using Vec = std::vector<std::uint32_t>;

inline void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Vec& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t invp(std::uint32_t a, std::uint32_t p) { return Fp(a, p).inverse().value(); }

inline Vec sub(Vec a, const Vec& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Vec mul(const Vec& a, const Vec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

/// Remainder modulo m (any nonzero m).
inline Vec rem(Vec a, const Vec& m, std::uint32_t p) {
    int dm = deg(m);
    std::uint32_t li = invp(m.back(), p);
    for (int i = deg(a); i >= dm; --i) {
        std::uint32_t c = mulp(a[i], li, p);
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j)
            a[i - dm + j] = (a[i - dm + j] + p - mulp(c, m[j], p)) % p;
    }
    trim(a);
    return a;
}

inline Vec gcd(Vec a, Vec b, std::uint32_t p) {
    while (!b.empty()) {
        Vec r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint32_t li = invp(a.back(), p);
        for (auto& c : a) c = mulp(c, li, p);
    }
    return a;
}

/// a^(p) modulo m, by square-and-multiply on the exponent p.
inline Vec pow_p_mod(const Vec& a, const Vec& m, std::uint32_t p) {
    Vec r{1}, b = rem(a, m, p);
    std::uint32_t e = p;
    while (e) {
        if (e & 1) r = rem(mul(r, b, p), m, p);
        e >>= 1;
        if (e) b = rem(mul(b, b, p), m, p);
    }
    return r;
}

/// Ben-Or irreducibility test for a monic polynomial of degree >= 1.
inline bool is_irreducible(const Vec& f, std::uint32_t p) {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    Vec x{0, 1};
    Vec h = x;
    for (int i = 1; i <= n / 2; ++i) {
        h = pow_p_mod(h, f, p);
        Vec g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) return false;
    }
    return true;
}

} // namespace fpx

/// Immutable context of F_{p^k} = F_p[a]/(modulus). Contexts are interned and
/// live for the whole program, so elements may hold raw pointers to them.
struct GaloisField {
    std::uint32_t p;
    int k;
    fpx::Vec modulus; // monic, size k + 1

    std::string name() const {
        return k == 1 ? "Fp:" + std::to_string(p) : "Fpk:" + std::to_string(p) + ":" + std::to_string(k);
    }
    BigInt order() const { return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k)); }
    std::string modulus_string() const;
};

/// Lexicographically smallest monic irreducible polynomial of degree k, the
/// coefficient of x^(k-1) being the most significant.
inline fpx::Vec smallest_irreducible(std::uint32_t p, int k) {
    std::vector<std::uint32_t> digits(k, 0); // digits[0] is the coefficient of x^(k-1)
    while (true) {
        fpx::Vec f(k + 1);
        for (int i = 0; i < k; ++i) f[k - 1 - i] = digits[i];
        f[k] = 1;
        if (fpx::is_irreducible(f, p)) return f;
        int i = k - 1;
        while (i >= 0 && ++digits[i] == p) digits[i--] = 0;
        if (i < 0) fail(ErrorKind::Internal, "no irreducible polynomial found");
    }
}

inline const GaloisField* galois_field(std::uint64_t p, int k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<GaloisField>> cache;
    if (k < 1) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
    make_prime_field(p);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) {
        auto f = std::make_unique<GaloisField>();
        f->p = static_cast<std::uint32_t>(p);
        f->k = k;
        f->modulus = smallest_irreducible(f->p, k);
        slot = std::move(f);
    }
    return slot.get();
}

class GF;

struct GaloisRing {
    const GaloisField* field = nullptr;

    GF zero() const;
    GF one() const;
    GF from_int(std::int64_t n) const;
    GF from_integer(const BigInt& n) const;
    GF generator() const;
    std::uint64_t characteristic() const { return field->p; }
    BigInt order() const { return field->order(); }
    int degree() const { return field->k; }
    bool is_field() const { return true; }
    std::string name() const { return field->name(); }
    bool operator==(const GaloisRing&) const = default;
};

/// Element of F_{p^k}: a reduced polynomial in the generator a.
class GF {
public:
    using ring_type = GaloisRing;

    GF() = default;
    GF(const GaloisField* f, fpx::Vec c) : f_(f), c_(std::move(c)) { fpx::trim(c_); }

    GaloisRing ring() const { return {f_}; }
    const GaloisField* field() const { return f_; }
    /// Coefficient of a^i.
    std::uint32_t coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    const fpx::Vec& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// True when the element lies in the prime field.
    bool is_prime_field_element() const { return c_.size() <= 1; }

    GF operator-() const {
        fpx::Vec r = c_;
        for (auto& x : r) x = x ? f_->p - x : 0;
        return GF(f_, std::move(r));
    }
    GF& operator+=(const GF& o) {
        check(o);
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            std::uint32_t s = c_[i] + o.c_[i];
            c_[i] = s >= f_->p ? s - f_->p : s;
        }
        fpx::trim(c_);
        return *this;
    }
    GF& operator-=(const GF& o) { return *this += -o; }
    GF& operator*=(const GF& o) {
        check(o);
        c_ = fpx::rem(fpx::mul(c_, o.c_, f_->p), f_->modulus, f_->p);
        return *this;
    }
    GF& operator/=(const GF& o) { return *this *= o.inverse(); }
    friend GF operator+(GF a, const GF& b) { return a += b; }
    friend GF operator-(GF a, const GF& b) { return a -= b; }
    friend GF operator*(GF a, const GF& b) { return a *= b; }
    friend GF operator/(GF a, const GF& b) { return a /= b; }
    friend bool operator==(const GF& a, const GF& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

    GF inverse() const {
        if (is_zero()) fail(ErrorKind::InvalidArgument, "zero has no inverse");
        const std::uint32_t p = f_->p;
        // extended Euclid: track s with s*c = r (mod modulus)
        fpx::Vec r0 = f_->modulus, r1 = c_, s0{}, s1{1};
        while (fpx::deg(r1) > 0) {
            fpx::Vec q;
            fpx::Vec r = r0;
            int d1 = fpx::deg(r1);
            std::uint32_t li = fpx::invp(r1.back(), p);
            q.assign(std::max(0, fpx::deg(r) - d1 + 1), 0);
            for (int i = fpx::deg(r); i >= d1; --i) {
                std::uint32_t c = fpx::mulp(r[i], li, p);
                q[i - d1] = c;
                if (c == 0) continue;
                for (int j = 0; j <= d1; ++j) r[i - d1 + j] = (r[i - d1 + j] + p - fpx::mulp(c, r1[j], p)) % p;
            }
            fpx::trim(r);
            fpx::trim(q);
            fpx::Vec s = fpx::sub(s0, fpx::mul(q, s1, p), p);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        std::uint32_t li = fpx::invp(r1[0], p);
        for (auto& x : s1) x = fpx::mulp(x, li, p);
        return GF(f_, fpx::rem(s1, f_->modulus, p));
    }
    GF exact_div(const GF& d) const { return *this / d; }

    GF pow(const BigInt& e) const {
        if (e < 0) return inverse().pow(-e);
        GF r = ring().one(), b = *this;
        unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
        for (unsigned i = bits; i-- > 0;) {
            r *= r;
            if (boost::multiprecision::bit_test(e, i)) r *= b;
        }
        return r;
    }
    GF frobenius() const { return pow(BigInt(f_->p)); }

    /// Value when the element lies in the prime field.
    Fp to_prime_field() const {
        if (!is_prime_field_element()) fail(ErrorKind::NoCanonicalMap, "element is not in the prime field");
        return Fp(coeff(0), f_->p);
    }

    std::string to_string() const;

private:
    void check(const GF& o) const {
        if (o.f_ != f_) fail(ErrorKind::RingMismatch, "elements of different finite fields");
    }

    const GaloisField* f_ = nullptr;
    fpx::Vec c_;
};

inline std::string fpx_to_string(const fpx::Vec& c, const std::string& var) {
    std::string out;
    for (int i = fpx::deg(c); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

inline std::string GF::to_string() const { return fpx_to_string(c_, "a"); }
inline std::string GaloisField::modulus_string() const { return fpx_to_string(modulus, "a"); }

inline GF GaloisRing::zero() const { return GF(field, {}); }
inline GF GaloisRing::one() const { return GF(field, {1}); }
inline GF GaloisRing::from_int(std::int64_t n) const {
    return GF(field, {PrimeField{field->p}.from_int(n).value()});
}
inline GF GaloisRing::from_integer(const BigInt& n) const {
    return GF(field, {PrimeField{field->p}.from_integer(n).value()});
}
inline GF GaloisRing::generator() const {
    if (field->k == 1) return GF(field, {static_cast<std::uint32_t>((field->p - field->modulus[0]) % field->p)});
    return GF(field, {0, 1});
}

inline GF to_gf(const Fp& a, const GaloisField* f) {
    if (a.modulus() != f->p) fail(ErrorKind::NoCanonicalMap, "characteristics differ");
    return GF(f, {a.value()});
}

} // namespace quartic
