#pragma once

#include <vector>

#include "quartic/poly/polynomial.hpp"

namespace quartic {

namespace detail {

template <class K>
Poly<K> normalize_lead(const Poly<K>& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.lead_coeff().inverse());
}

template <class K>
int main_variable(const Poly<K>& f, const Poly<K>& g) {
    for (int i = static_cast<int>(f.nvars()) - 1; i >= 0; --i)
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) return i;
    return -1;
}

template <class K>
Poly<K> with_power(const Poly<K>& f, std::size_t var, int d) {
    Exponents e(f.nvars(), 0);
    e[var] = static_cast<std::uint16_t>(d);
    return f.shifted(e);
}

template <class K> Poly<K> gcd_rec(const Poly<K>& f, const Poly<K>& g);

template <class K>
Poly<K> content_in(const Poly<K>& f, std::size_t var) {
    Poly<K> c = f.ring().zero();
    for (auto& part : f.coefficients_in(var)) {
        if (part.is_zero()) continue;
        c = gcd_rec(c, part);
        if (c.is_one()) break;
    }
    return c;
}

template <class K>
Poly<K> primitive_in(const Poly<K>& f, std::size_t var) {
    if (f.is_zero()) return f;
    return f.exact_div(content_in(f, var));
}

template <class K>
Poly<K> pseudo_remainder(Poly<K> a, const Poly<K>& b, std::size_t var) {
    int db = b.degree_in(var);
    Poly<K> lb = b.coefficients_in(var)[db];
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        Poly<K> la = a.coefficients_in(var)[da];
        a = a * lb - with_power(la * b, var, da - db);
    }
    return a;
}

template <class K>
Poly<K> gcd_rec(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero()) return normalize_lead(g);
    if (g.is_zero()) return normalize_lead(f);
    int v = main_variable(f, g);
    if (v < 0) return f.ring().one();
    Poly<K> cf = content_in(f, v), cg = content_in(g, v);
    Poly<K> c = gcd_rec(cf, cg);
    Poly<K> a = f.exact_div(cf), b = g.exact_div(cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree_in(v) == 0) {
            a = f.ring().one();
            break;
        }
        Poly<K> r = pseudo_remainder(a, b, v);
        a = std::move(b);
        b = primitive_in(r, v);
    }
    return normalize_lead(c * primitive_in(a, v));
}

} // namespace detail

/// Greatest common divisor of multivariate polynomials over a field, made
/// monic in the graded-lex leading term. gcd(0, 0) = 0.
template <class K>
Poly<K> poly_gcd(const Poly<K>& f, const Poly<K>& g) {
    return detail::gcd_rec(f, g);
}

} // namespace quartic
