#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "quartic/core/error.hpp"
#include "quartic/poly/varset.hpp"
#include "quartic/rings/integer.hpp"

namespace quartic {

using Exponents = boost::container::small_vector<std::uint16_t, 4>;

inline unsigned total_degree_of(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded lexicographic order with the declared variable order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = total_degree_of(a), db = total_degree_of(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

template <class K> class Poly;

template <class K>
struct PolyRing {
    typename K::ring_type base;
    const VarSet* vars = nullptr;

    Poly<K> zero() const { return Poly<K>(base, vars); }
    Poly<K> one() const { return Poly<K>::constant(base, vars, base.one()); }
    Poly<K> from_int(std::int64_t n) const { return Poly<K>::constant(base, vars, base.from_int(n)); }
    Poly<K> from_integer(const BigInt& n) const { return Poly<K>::constant(base, vars, base.from_integer(n)); }
    Poly<K> var(const std::string& n) const { return Poly<K>::variable(base, vars, n); }
    std::uint64_t characteristic() const { return base.characteristic(); }
    bool is_field() const { return false; }
    std::string name() const {
        std::string s = base.name() + "[";
        for (std::size_t i = 0; i < vars->size(); ++i) s += (i ? "," : "") + vars->name(i);
        return s + "]";
    }
    bool operator==(const PolyRing&) const = default;
};

namespace detail {

/// Renders a coefficient for use in front of a monomial. Sets `negative` when
/// the rendering is a plain negative number whose sign can be pulled out.
inline std::string coeff_repr(const std::string& s, bool& negative) {
    negative = false;
    std::string body = s;
    if (!body.empty() && body[0] == '-' && body.find_first_of("+-", 1) == std::string::npos) {
        negative = true;
        body = body.substr(1);
    }
    if (body.find_first_of("+-", 1) != std::string::npos && body.front() != '(') body = "(" + body + ")";
    return body;
}

} // namespace detail

/// Sparse multivariate polynomial over a coefficient ring K. No zero
/// coefficients are stored; terms are kept in graded-lex order.
template <class K>
class Poly {
public:
    using ring_type = PolyRing<K>;
    using coeff_type = K;
    using TermMap = std::map<Exponents, K, GrlexLess>;

    Poly() = default;
    Poly(typename K::ring_type base, const VarSet* vars) : base_(base), vars_(vars) {}

    static Poly constant(typename K::ring_type base, const VarSet* vars, const K& c) {
        Poly p(base, vars);
        p.add_term(Exponents(vars->size(), 0), c);
        return p;
    }
    static Poly variable(typename K::ring_type base, const VarSet* vars, const std::string& n) {
        Exponents e(vars->size(), 0);
        e[vars->index(n)] = 1;
        return monomial(base, vars, e, base.one());
    }
    static Poly monomial(typename K::ring_type base, const VarSet* vars, const Exponents& e, const K& c) {
        Poly p(base, vars);
        p.add_term(e, c);
        return p;
    }

    ring_type ring() const { return {base_, vars_}; }
    const typename K::ring_type& base_ring() const { return base_; }
    const VarSet* vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree_of(terms_.begin()->first) == 0);
    }
    bool is_one() const { return is_constant() && !is_zero() && terms_.begin()->second.is_one(); }

    K coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? base_.zero() : it->second;
    }
    K constant_coeff() const { return coeff(Exponents(nvars(), 0)); }

    void add_term(const Exponents& e, const K& c) {
        if (e.size() != nvars()) fail(ErrorKind::InvalidArgument, "exponent vector has wrong arity");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int total_degree() const {
        return is_zero() ? -1 : static_cast<int>(total_degree_of(terms_.rbegin()->first));
    }
    int degree_in(std::size_t var) const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
        return d;
    }
    bool is_homogeneous(int d) const {
        for (auto& [e, c] : terms_)
            if (static_cast<int>(total_degree_of(e)) != d) return false;
        return true;
    }
    bool is_homogeneous() const { return is_zero() || is_homogeneous(total_degree()); }

    const Exponents& lead_exponents() const { return terms_.rbegin()->first; }
    const K& lead_coeff() const { return terms_.rbegin()->second; }

    Poly operator-() const {
        Poly r(base_, vars_);
        for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.base_, a.vars_);
        std::size_t n = a.nvars();
        Exponents e(n);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Poly scaled(const K& s) const {
        Poly r(base_, vars_);
        for (auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }
    Poly operator*(const K& s) const { return scaled(s); }

    Poly pow(unsigned n) const {
        Poly r = ring().one(), b = *this;
        while (n) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

    /// Multiplication by a monomial with coefficient one.
    Poly shifted(const Exponents& m) const {
        Poly r(base_, vars_);
        for (auto& [e, c] : terms_) {
            Exponents f = e;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::uint16_t>(f[i] + m[i]);
            r.terms_.emplace(f, c);
        }
        return r;
    }

    /// Exact division by a monomial; fails if some term is not divisible.
    Poly divided_by_monomial(const Exponents& m) const {
        Poly r(base_, vars_);
        for (auto& [e, c] : terms_) {
            Exponents f = e;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] < m[i]) fail(ErrorKind::Internal, "monomial does not divide polynomial");
                f[i] = static_cast<std::uint16_t>(f[i] - m[i]);
            }
            r.terms_.emplace(f, c);
        }
        return r;
    }

    Poly derivative(std::size_t var) const {
        Poly r(base_, vars_);
        for (auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents f = e;
            --f[var];
            r.add_term(f, c * base_.from_int(e[var]));
        }
        return r;
    }
    Poly derivative(const std::string& var) const { return derivative(vars_->index(var)); }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != nvars()) fail(ErrorKind::InvalidArgument, "evaluation point has wrong arity");
        return eval_hom<K>(base_, point, [](const K& c) { return c; });
    }

    /// Image under the ring homomorphism sending coefficients through `embed`
    /// and the i-th variable to images[i].
    template <class R, class F>
    R eval_hom(const typename R::ring_type& target, const std::vector<R>& images, F&& embed) const {
        if (images.size() != nvars()) fail(ErrorKind::InvalidArgument, "wrong number of images");
        std::vector<std::vector<R>> powers(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) {
            int d = degree_in(i);
            powers[i].push_back(target.one());
            for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
        }
        R acc = target.zero();
        for (auto& [e, c] : terms_) {
            R t = embed(c);
            for (std::size_t i = 0; i < nvars(); ++i)
                if (e[i]) t = t * powers[i][e[i]];
            acc += t;
        }
        return acc;
    }

    /// Substitution of polynomials for variables; unassigned variables map to
    /// themselves in the common target variable set.
    Poly substitute(const std::map<std::string, Poly>& assignment) const {
        if (assignment.empty()) return *this;
        const VarSet* target = assignment.begin()->second.vars();
        auto tb = assignment.begin()->second.base_ring();
        for (auto& [n, p] : assignment)
            if (p.vars() != target || !(p.base_ring() == tb))
                fail(ErrorKind::RingMismatch, "substitution images must share ring and variables");
        if (!(tb == base_)) fail(ErrorKind::RingMismatch, "substitution images over a different ring");
        std::vector<Poly> images;
        for (std::size_t i = 0; i < nvars(); ++i) {
            auto it = assignment.find(vars_->name(i));
            if (it != assignment.end()) {
                images.push_back(it->second);
            } else {
                if (target->index_of(vars_->name(i)) < 0)
                    fail(ErrorKind::RingMismatch, "unassigned variable missing from target");
                images.push_back(Poly::variable(base_, target, vars_->name(i)));
            }
        }
        PolyRing<K> tr{base_, target};
        return eval_hom<Poly>(tr, images, [&](const K& c) { return Poly::constant(base_, target, c); });
    }

    /// Same terms viewed in another variable set of equal arity.
    Poly renamed(const VarSet* target) const {
        if (target->size() != nvars()) fail(ErrorKind::InvalidArgument, "renaming needs equal arity");
        Poly r(base_, target);
        r.terms_ = terms_;
        return r;
    }

    /// Same polynomial viewed in a larger variable set containing all current names.
    Poly embedded_in(const VarSet* target) const {
        Poly r(base_, target);
        std::vector<std::size_t> map(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) map[i] = target->index(vars_->name(i));
        for (auto& [e, c] : terms_) {
            Exponents f(target->size(), 0);
            for (std::size_t i = 0; i < nvars(); ++i) f[map[i]] = e[i];
            r.terms_.emplace(f, c);
        }
        return r;
    }

    template <class K2, class F>
    Poly<K2> map_coefficients(const typename K2::ring_type& base2, F&& f) const {
        Poly<K2> r(base2, vars_);
        for (auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    /// Coefficients with respect to one variable: result[d] is the part of
    /// degree d in `var`, with that variable removed (same variable set).
    std::vector<Poly> coefficients_in(std::size_t var) const {
        std::vector<Poly> out(std::max(0, degree_in(var) + 1), Poly(base_, vars_));
        for (auto& [e, c] : terms_) {
            Exponents f = e;
            int d = f[var];
            f[var] = 0;
            out[d].terms_.emplace(f, c);
        }
        return out;
    }

    /// Exact division; std::nullopt when d does not divide.
    std::optional<Poly> try_divide(const Poly& d) const {
        check(d);
        if (d.is_zero()) fail(ErrorKind::Internal, "polynomial division by zero");
        Poly r = *this, q(base_, vars_);
        const Exponents& ld = d.lead_exponents();
        const K& lc = d.lead_coeff();
        while (!r.is_zero()) {
            const Exponents& lr = r.lead_exponents();
            Exponents m(nvars());
            for (std::size_t i = 0; i < nvars(); ++i) {
                if (lr[i] < ld[i]) return std::nullopt;
                m[i] = static_cast<std::uint16_t>(lr[i] - ld[i]);
            }
            K c;
            try {
                c = r.lead_coeff().exact_div(lc);
            } catch (const Error&) {
                return std::nullopt;
            }
            if (!(c * lc == r.lead_coeff())) return std::nullopt;
            Poly t = monomial(base_, vars_, m, c);
            q += t;
            r -= d.shifted(m).scaled(c);
        }
        return q;
    }
    Poly exact_div(const Poly& d) const {
        auto q = try_divide(d);
        if (!q) fail(ErrorKind::Internal, "inexact polynomial division");
        return *q;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t i = 0; i < nvars(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_->name(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            bool neg = false;
            std::string cs = detail::coeff_repr(c.to_string(), neg);
            std::string term;
            if (mono.empty()) term = cs;
            else if (cs == "1") term = mono;
            else term = cs + "*" + mono;
            if (out.empty()) out = neg ? "-" + term : term;
            else out += (neg ? "-" : "+") + term;
        }
        return out;
    }

private:
    void check(const Poly& o) const {
        if (vars_ != o.vars_ || !(base_ == o.base_))
            fail(ErrorKind::RingMismatch, "polynomials over different rings or variable sets");
    }

    typename K::ring_type base_{};
    const VarSet* vars_ = nullptr;
    TermMap terms_;
};

/// Exponent vector helper.
inline Exponents exps(std::initializer_list<int> l) {
    Exponents e;
    for (int x : l) e.push_back(static_cast<std::uint16_t>(x));
    return e;
}

} // namespace quartic
