#pragma once

#include <array>
#include <string>
#include <vector>

#include "quartic/poly/polynomial.hpp"

namespace quartic {

/// Exponents (i,j,k) of the 15 quartic monomials x^i y^j z^k, in descending
/// lexicographic order: x^4, x^3y, x^3z, x^2y^2, ...
inline const std::array<std::array<int, 3>, 15>& quartic_monomials() {
    static const std::array<std::array<int, 3>, 15> m = [] {
        std::array<std::array<int, 3>, 15> r{};
        int n = 0;
        for (int i = 4; i >= 0; --i)
            for (int j = 4 - i; j >= 0; --j) r[n++] = {i, j, 4 - i - j};
        return r;
    }();
    return m;
}

inline int quartic_index(int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0 || i + j + k != 4) return -1;
    const auto& m = quartic_monomials();
    for (int n = 0; n < 15; ++n)
        if (m[n][0] == i && m[n][1] == j && m[n][2] == k) return n;
    return -1;
}

/// q = sum a_ijk x^i y^j z^k.
template <class K>
class TernaryQuartic {
public:
    using ring_base = typename K::ring_type;

    explicit TernaryQuartic(ring_base r) : r_(r) { a_.fill(r.zero()); }

    static TernaryQuartic from_poly(const Poly<K>& p) {
        if (p.nvars() != 3) fail(ErrorKind::InvalidArgument, "ternary quartic needs exactly three variables");
        if (!p.is_zero() && !p.is_homogeneous(4)) fail(ErrorKind::InvalidArgument, "form is not a homogeneous quartic");
        TernaryQuartic q(p.base_ring());
        for (auto& [e, c] : p.terms()) q.a_[quartic_index(e[0], e[1], e[2])] = c;
        return q;
    }

    Poly<K> to_poly(const VarSet* vars = vars_xyz()) const {
        Poly<K> p(r_, vars);
        const auto& m = quartic_monomials();
        for (int n = 0; n < 15; ++n) p.add_term(exps({m[n][0], m[n][1], m[n][2]}), a_[n]);
        return p;
    }

    const ring_base& ring() const { return r_; }
    const K& operator[](int n) const { return a_[n]; }
    K& operator[](int n) { return a_[n]; }
    /// Coefficient a_ijk, zero for exponents outside the quartic range.
    K coeff(int i, int j, int k) const {
        int n = quartic_index(i, j, k);
        return n < 0 ? r_.zero() : a_[n];
    }
    void set(int i, int j, int k, const K& c) {
        int n = quartic_index(i, j, k);
        if (n < 0) fail(ErrorKind::InvalidArgument, "not a quartic monomial");
        a_[n] = c;
    }

    bool is_zero() const {
        for (auto& c : a_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TernaryQuartic operator+(TernaryQuartic a, const TernaryQuartic& b) {
        for (int n = 0; n < 15; ++n) a.a_[n] += b.a_[n];
        return a;
    }
    friend TernaryQuartic operator-(TernaryQuartic a, const TernaryQuartic& b) {
        for (int n = 0; n < 15; ++n) a.a_[n] -= b.a_[n];
        return a;
    }
    TernaryQuartic scaled(const K& s) const {
        TernaryQuartic r = *this;
        for (auto& c : r.a_) c *= s;
        return r;
    }
    friend bool operator==(const TernaryQuartic& a, const TernaryQuartic& b) { return a.a_ == b.a_; }

    std::string to_string() const { return to_poly().to_string(); }

private:
    ring_base r_;
    std::array<K, 15> a_;
};

/// Monomial x^i y^j z^k as a ternary quartic.
template <class K>
TernaryQuartic<K> quartic_monomial(const typename K::ring_type& r, int i, int j, int k) {
    TernaryQuartic<K> q(r);
    q.set(i, j, k, r.one());
    return q;
}

/// Variable set of the generic coefficients a_ijk (named a400, a310, ...),
/// optionally prefixed by another letter for a second generic form.
inline const VarSet* generic_coefficient_vars(const std::string& letters = "a") {
    std::vector<std::string> names;
    for (char L : letters)
        for (auto& m : quartic_monomials())
            names.push_back(std::string(1, L) + std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]));
    return varset(names);
}

/// The generic quartic sum a_ijk x^i y^j z^k over Z[a_ijk] (or the one named
/// with `letter` inside the coefficient variable set `vars`).
inline TernaryQuartic<Poly<Integer>> generic_quartic(const VarSet* vars = generic_coefficient_vars("a"), char letter = 'a') {
    PolyRing<Integer> R{IntegerRing{}, vars};
    TernaryQuartic<Poly<Integer>> q(R);
    for (int n = 0; n < 15; ++n) {
        const auto& m = quartic_monomials()[n];
        q[n] = R.var(std::string(1, letter) + std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]));
    }
    return q;
}

/// 3x3 matrix over K, row major.
template <class K>
using Mat3 = std::array<std::array<K, 3>, 3>;

/// Form composed with a linear change of variables: (q o M)(X) = q(M X).
template <class K>
Poly<K> compose_linear(const Poly<K>& q, const Mat3<K>& m) {
    auto R = q.base_ring();
    const VarSet* vs = q.vars();
    std::vector<Poly<K>> img;
    for (int r = 0; r < 3; ++r) {
        Poly<K> s(R, vs);
        for (int c = 0; c < 3; ++c) {
            Exponents e(3, 0);
            e[c] = 1;
            s.add_term(e, m[r][c]);
        }
        img.push_back(s);
    }
    return q.eval_hom(PolyRing<K>{R, vs}, img, [&](const K& c) { return Poly<K>::constant(R, vs, c); });
}

template <class K>
K det3(const Mat3<K>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class K>
Mat3<K> adjugate3(const Mat3<K>& m) {
    Mat3<K> a = m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    return a;
}

template <class K>
Mat3<K> inverse3(const Mat3<K>& m) {
    K d = det3(m);
    if (d.is_zero()) fail(ErrorKind::InvalidArgument, "singular matrix");
    K di = d.inverse();
    Mat3<K> a = adjugate3(m);
    for (auto& row : a)
        for (auto& x : row) x *= di;
    return a;
}

template <class K>
Mat3<K> transpose3(const Mat3<K>& m) {
    Mat3<K> t = m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

template <class K>
Mat3<K> mul3(const Mat3<K>& a, const Mat3<K>& b) {
    Mat3<K> r = a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            K s = a[i][0] * b[0][j];
            s += a[i][1] * b[1][j];
            s += a[i][2] * b[2][j];
            r[i][j] = s;
        }
    return r;
}

template <class K>
std::array<K, 3> apply3(const Mat3<K>& m, const std::array<K, 3>& v) {
    std::array<K, 3> r = v;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

template <class K>
Mat3<K> identity3(const typename K::ring_type& r) {
    Mat3<K> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = i == j ? r.one() : r.zero();
    return m;
}

} // namespace quartic
