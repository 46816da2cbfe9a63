#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "quartic/poly/polynomial.hpp"
#include "quartic/rings/dual.hpp"
#include "quartic/rings/galois_field.hpp"
#include "quartic/rings/integer.hpp"
#include "quartic/rings/local.hpp"
#include "quartic/rings/prime_field.hpp"

namespace quartic {

inline const VarSet* vars_all() { return varset({"x", "y", "z", "u", "v", "w", "t", "eps"}); }

namespace detail {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly<Rational> parse() {
        skip();
        if (pos_ >= s_.size()) error("empty expression");
        Poly<Rational> r = expr();
        skip();
        if (pos_ < s_.size()) error(std::string("unexpected character '") + s_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // '-' or the Unicode minus sign
    bool minus() {
        if (s_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    Poly<Rational> zero() const { return Poly<Rational>(RationalField{}, vars_all()); }

    Poly<Rational> expr() {
        Poly<Rational> acc = zero();
        bool first = true;
        while (true) {
            skip();
            bool neg = false;
            if (pos_ < s_.size() && s_[pos_] == '+') {
                ++pos_;
            } else if (pos_ < s_.size() && minus()) {
                neg = true;
            } else if (!first) {
                break;
            }
            skip();
            Poly<Rational> t = term();
            acc += neg ? -t : t;
            first = false;
        }
        return acc;
    }

    Poly<Rational> term() {
        Poly<Rational> acc = factor();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip();
                acc = acc * factor();
            } else if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
                acc = acc * factor(); // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Poly<Rational> factor() {
        skip();
        Poly<Rational> base = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected exponent");
            unsigned e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_++] - '0');
                if (e > 1000) error("exponent too large");
            }
            base = base.pow(e);
        }
        return base;
    }

    Poly<Rational> atom() {
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly<Rational> r = expr();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') error("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = digits();
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected denominator");
                BigInt den = digits();
                if (den == 0) error("zero denominator");
                return Poly<Rational>::constant(RationalField{}, vars_all(), Rational(num, den));
            }
            return Poly<Rational>::constant(RationalField{}, vars_all(), Rational(BigRational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (vars_all()->index_of(name) < 0) {
                pos_ = start;
                error("unknown variable '" + name + "'");
            }
            return Poly<Rational>::variable(RationalField{}, vars_all(), name);
        }
        error(std::string("unexpected character '") + c + "'");
    }

    BigInt digits() {
        BigInt n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = n * 10 + (s_[pos_++] - '0');
        return n;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

template <class T> struct is_dual : std::false_type {};
template <class B> struct is_dual<Dual<B>> : std::true_type {};
template <class T> struct is_local : std::false_type {};
template <class B> struct is_local<Local<B>> : std::true_type {};

} // namespace detail

/// Parses text into a polynomial with rational coefficients over the
/// variables x, y, z, u, v, w, t, eps.
inline Poly<Rational> parse_rational_polynomial(const std::string& text) { return detail::Parser(text).parse(); }

/// Image of a rational number in a ring; fails when the denominator is not
/// invertible there.
template <class R>
auto rational_to(const R& ring, const Rational& q) {
    using K = decltype(ring.one());
    if constexpr (std::is_same_v<K, Rational>) {
        return q;
    } else if constexpr (std::is_same_v<K, Integer>) {
        if (!q.is_integral()) fail(ErrorKind::InvalidArgument, "fraction " + q.to_string() + " is not an integer");
        return Integer(q.numerator());
    } else if constexpr (detail::is_dual<K>::value) {
        return embed_dual(rational_to(ring.base, q));
    } else if constexpr (detail::is_local<K>::value) {
        return embed_local(rational_to(ring.base, q));
    } else {
        K n = ring.from_integer(q.numerator());
        K d = ring.from_integer(q.denominator());
        if (d.is_zero()) fail(ErrorKind::InvalidArgument, "denominator of " + q.to_string() + " vanishes in " + ring.name());
        return n / d;
    }
}

/// Converts a parsed polynomial into the ring R over the variables `target`.
/// The symbol eps is absorbed into coefficients over dual numbers and t into
/// coefficients over the local parameter ring; every other variable must
/// belong to `target`.
template <class R>
auto convert_polynomial(const Poly<Rational>& src, const R& ring, const VarSet* target) {
    using K = decltype(ring.one());
    Poly<K> out(ring, target);
    const VarSet* sv = src.vars();
    for (auto& [e, c] : src.terms()) {
        K coeff = rational_to(ring, c);
        Exponents te(target->size(), 0);
        for (std::size_t i = 0; i < sv->size(); ++i) {
            if (e[i] == 0) continue;
            const std::string& n = sv->name(i);
            int ti = target->index_of(n);
            if (ti >= 0) {
                te[ti] = e[i];
            } else if constexpr (detail::is_dual<K>::value) {
                if (n != "eps") fail(ErrorKind::InvalidArgument, "variable '" + n + "' not allowed here");
                coeff = e[i] >= 2 ? ring.zero() : coeff * ring.eps();
            } else if constexpr (detail::is_local<K>::value) {
                if (n != "t") fail(ErrorKind::InvalidArgument, "variable '" + n + "' not allowed here");
                for (int k = 0; k < e[i]; ++k) coeff = coeff * ring.t();
            } else {
                fail(ErrorKind::InvalidArgument, "variable '" + n + "' not allowed here");
            }
        }
        out.add_term(te, coeff);
    }
    return out;
}

template <class R>
auto parse_polynomial(const std::string& text, const R& ring, const VarSet* target) {
    return convert_polynomial(parse_rational_polynomial(text), ring, target);
}

} // namespace quartic
