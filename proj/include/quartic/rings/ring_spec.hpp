#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "quartic/rings/dual.hpp"
#include "quartic/rings/galois_field.hpp"
#include "quartic/rings/integer.hpp"
#include "quartic/rings/local.hpp"
#include "quartic/rings/prime_field.hpp"

namespace quartic {

/// Runtime description of a coefficient ring, as used on the command line:
/// "Q", "Z", "Fp:<p>", "Fpk:<p>:<k>", "dual:<base>", "local-t:<base>".
class RingSpec {
public:
    enum class Kind { Integers, Rationals, PrimeField, ExtensionField, DualNumbers, ParameterLocal };

    static RingSpec integers() { return RingSpec(Kind::Integers); }
    static RingSpec rationals() { return RingSpec(Kind::Rationals); }
    static RingSpec prime_field(std::uint64_t p) {
        RingSpec r(Kind::PrimeField);
        r.p_ = make_prime_field(p).p;
        return r;
    }
    static RingSpec extension(const GaloisField* f) {
        if (f->k == 1) return prime_field(f->p);
        RingSpec r(Kind::ExtensionField);
        r.p_ = f->p;
        r.field_ = f;
        return r;
    }
    static RingSpec dual(const RingSpec& base) { return wrap(Kind::DualNumbers, base); }
    static RingSpec local(const RingSpec& base) { return wrap(Kind::ParameterLocal, base); }

    static RingSpec parse(const std::string& s) {
        auto bad = [&]() -> RingSpec { fail(ErrorKind::InvalidArgument, "bad field spec '" + s + "'"); };
        if (s == "Q") return rationals();
        if (s == "Z") return integers();
        if (s.rfind("dual:", 0) == 0) return dual(parse(s.substr(5)));
        if (s.rfind("local-t:", 0) == 0) return local(parse(s.substr(8)));
        auto number = [&](const std::string& t) -> std::uint64_t {
            if (t.empty() || t.size() > 12 || t.find_first_not_of("0123456789") != std::string::npos) bad();
            return std::stoull(t);
        };
        if (s.rfind("Fp:", 0) == 0) return prime_field(number(s.substr(3)));
        if (s.rfind("Fpk:", 0) == 0) {
            auto rest = s.substr(4);
            auto colon = rest.find(':');
            if (colon == std::string::npos) return bad();
            std::uint64_t p = number(rest.substr(0, colon)), k = number(rest.substr(colon + 1));
            if (k < 1 || k > 4096) return bad();
            return extension(galois_field(p, static_cast<int>(k)));
        }
        return bad();
    }

    Kind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }
    const GaloisField* field() const { return field_; }
    const RingSpec& base() const { return *base_; }
    std::uint64_t characteristic() const {
        if (kind_ == Kind::DualNumbers || kind_ == Kind::ParameterLocal) return base_->characteristic();
        return p_;
    }
    bool is_finite_field() const { return kind_ == Kind::PrimeField || kind_ == Kind::ExtensionField; }

    std::string to_string() const {
        switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "Fp:" + std::to_string(p_);
        case Kind::ExtensionField: return "Fpk:" + std::to_string(p_) + ":" + std::to_string(field_->k);
        case Kind::DualNumbers: return "dual:" + base_->to_string();
        case Kind::ParameterLocal: return "local-t:" + base_->to_string();
        }
        return "?";
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.to_string() == b.to_string(); }

private:
    explicit RingSpec(Kind k) : kind_(k) {}
    static RingSpec wrap(Kind k, const RingSpec& base) {
        if (base.kind_ == Kind::DualNumbers || base.kind_ == Kind::ParameterLocal)
            fail(ErrorKind::InvalidArgument, "nested parameter rings are not supported");
        RingSpec r(k);
        r.base_ = std::make_shared<const RingSpec>(base);
        return r;
    }

    Kind kind_;
    std::uint32_t p_ = 0;
    const GaloisField* field_ = nullptr;
    std::shared_ptr<const RingSpec> base_;
};

/// Extension of degree k with the lexicographically smallest monic
/// irreducible modulus; degree 1 gives the prime field itself.
inline RingSpec make_extension(std::uint64_t p, int k) { return RingSpec::extension(galois_field(p, k)); }

/// Whether a canonical ring homomorphism source -> target exists.
inline bool has_canonical_map(const RingSpec& s, const RingSpec& t) {
    using K = RingSpec::Kind;
    if (s == t) return true;
    if (s.kind() == K::Integers) return true;
    if (t.kind() == K::DualNumbers || t.kind() == K::ParameterLocal) return has_canonical_map(s, t.base());
    if (s.kind() == K::Rationals) return false; // Q maps only into rings of characteristic 0 built on Q
    if (s.kind() == K::PrimeField) return t.is_finite_field() && t.p() == s.p();
    if (s.kind() == K::ExtensionField) return t.kind() == K::ExtensionField && t.p() == s.p() && t.field()->k % s.field()->k == 0;
    return false;
}

inline void require_canonical_map(const RingSpec& s, const RingSpec& t) {
    if (!has_canonical_map(s, t))
        fail(ErrorKind::NoCanonicalMap, "no canonical map " + s.to_string() + " -> " + t.to_string());
}

/// Calls f with the concrete ring object described by spec.
template <class F>
decltype(auto) visit_ring(const RingSpec& spec, F&& f) {
    using K = RingSpec::Kind;
    auto base_visit = [&](const RingSpec& b, auto&& g) -> decltype(auto) {
        switch (b.kind()) {
        case K::Integers: return g(IntegerRing{});
        case K::Rationals: return g(RationalField{});
        case K::PrimeField: return g(PrimeField{b.p()});
        case K::ExtensionField: return g(GaloisRing{b.field()});
        default: fail(ErrorKind::InvalidArgument, "unsupported base ring");
        }
    };
    switch (spec.kind()) {
    case K::DualNumbers:
        return base_visit(spec.base(), [&](auto r) -> decltype(auto) {
            using B = decltype(r.one());
            return f(DualRing<B>{r});
        });
    case K::ParameterLocal:
        return base_visit(spec.base(), [&](auto r) -> decltype(auto) {
            using B = decltype(r.one());
            return f(LocalRing<B>{r});
        });
    default: return base_visit(spec, f);
    }
}

} // namespace quartic
