#pragma once

#include <array>
#include <vector>

#include "quartic/geometry/contact.hpp"
#include "quartic/poly/linear.hpp"

namespace quartic {

/// A hyperinflection line together with its contact point.
template <class K>
struct HyperflexDatum {
    ProjectiveLine<K> line;
    ProjectivePoint<K> point;
};

/// Coordinates X' = M X in which three hyperinflection lines are x = 0,
/// y = 0, z = 0 with contact points [0:1:eps], [1:0:1], [1:1:0].
template <class K>
struct NormalizedFrame {
    Mat3<K> M;
    K eps;
};

template <class K>
bool is_fourth_root_of_unity(const K& e) {
    K e2 = e * e;
    return (e2 * e2).is_one();
}

/// (x-y)^4 + (x-z)^4 + (y-eps z)^4 - (x^4+y^4+z^4).
template <class K>
TernaryQuartic<K> q_epsilon(const K& eps) {
    if (!is_fourth_root_of_unity(eps)) fail(ErrorKind::InvalidArgument, "eps must satisfy eps^4 = 1");
    const auto R = eps.ring();
    PolyRing<K> P{R, vars_xyz()};
    Poly<K> x = P.var("x"), y = P.var("y"), z = P.var("z");
    Poly<K> f = (x - y).pow(4) + (x - z).pow(4) + (y - z.scaled(eps)).pow(4) - (x.pow(4) + y.pow(4) + z.pow(4));
    return TernaryQuartic<K>::from_poly(f);
}

/// q_eps + xyz(lambda x + mu y + nu z).
template <class K>
TernaryQuartic<K> conc_normal_form(const K& eps, const K& lambda, const K& mu, const K& nu) {
    TernaryQuartic<K> q = q_epsilon(eps);
    q.set(2, 1, 1, q.coeff(2, 1, 1) + lambda);
    q.set(1, 2, 1, q.coeff(1, 2, 1) + mu);
    q.set(1, 1, 2, q.coeff(1, 1, 2) + nu);
    return q;
}

template <class K>
Mat3<K> matrix_of_rows(const std::array<K, 3>& a, const std::array<K, 3>& b, const std::array<K, 3>& c) {
    return Mat3<K>{a, b, c};
}

template <class K>
NormalizedFrame<K> normalize_frame(const std::array<HyperflexDatum<K>, 3>& d) {
    const auto& l1 = d[0].line.c;
    const auto& l2 = d[1].line.c;
    const auto& l3 = d[2].line.c;
    Mat3<K> L = matrix_of_rows(l1, l2, l3);
    if (det3(L).is_zero()) fail(ErrorKind::Precondition, "frame lines are concurrent");
    for (auto& e : d)
        if (!incidence(e.line.c, e.point.c).is_zero()) fail(ErrorKind::InvalidArgument, "contact point does not lie on its line");
    const auto& p1 = d[0].point.c;
    const auto& p2 = d[1].point.c;
    const auto& p3 = d[2].point.c;
    K a3 = incidence(l1, p3), b3 = incidence(l2, p3);
    K a2 = incidence(l1, p2), c2 = incidence(l3, p2);
    K b1 = incidence(l2, p1), c1 = incidence(l3, p1);
    for (const K* v : {&a3, &b3, &a2, &c2, &b1, &c1})
        if (v->is_zero()) fail(ErrorKind::Precondition, "a contact point is a vertex of the coordinate triangle");
    K beta = a3 / b3, gamma = a2 / c2;
    Mat3<K> M = L;
    for (auto& x : M[1]) x *= beta;
    for (auto& x : M[2]) x *= gamma;
    K eps = (gamma * c1) / (beta * b1);
    if (!is_fourth_root_of_unity(eps)) fail(ErrorKind::Inconsistent, "no quartic has these three hyperflexes: eps^4 != 1");
    return {M, eps};
}

/// Linear conditions on (lambda, mu, nu) from the hyperinflection line
/// z = a x + b y, as coefficients of x^3y, x^2y^2, xy^3.
template <class K>
Mat3<K> hyperflex_row_block(const K& a, const K& b) {
    K zero = a.ring().zero();
    K two = a.ring().from_int(2);
    return Mat3<K>{std::array<K, 3>{a, zero, a * a}, std::array<K, 3>{b, a, two * a * b}, std::array<K, 3>{zero, b, b * b}};
}

template <class K>
struct HyperflexRows {
    Mat3<K> block; // acts on (lambda, mu, nu)
    std::array<K, 3> rhs;
};

/// Rows for one further hyperflex (line, point) given in the normalized
/// frame. The line is solved for z when it involves z; otherwise x or y is
/// swapped into the z slot and the unknowns are permuted accordingly.
template <class K>
HyperflexRows<K> hyperflex_rows(const K& eps, const std::array<K, 3>& line, const std::array<K, 3>& point) {
    const auto R = eps.ring();
    int k = !line[2].is_zero() ? 2 : !line[1].is_zero() ? 1 : 0;
    int others = (line[0].is_zero() ? 0 : 1) + (line[1].is_zero() ? 0 : 1) + (line[2].is_zero() ? 0 : 1);
    if (others < 2) fail(ErrorKind::InvalidArgument, "extra hyperflex line coincides with a frame line");
    std::array<int, 3> P{0, 1, 2};
    std::swap(P[k], P[2]);
    std::array<K, 3> l, p;
    for (int i = 0; i < 3; ++i) {
        l[i] = line[P[i]];
        p[i] = point[P[i]];
    }
    K a = -(l[0] / l[2]), b = -(l[1] / l[2]);
    // q_eps in the swapped coordinates, restricted to z = a x + b y
    const VarSet* xy = varset({"x", "y"});
    PolyRing<K> B{R, xy};
    Poly<K> X = B.var("x"), Y = B.var("y");
    std::array<Poly<K>, 3> workY{X, Y, X.scaled(a) + Y.scaled(b)};
    std::vector<Poly<K>> img(3);
    for (int j = 0; j < 3; ++j) img[j] = workY[P[j]];
    Poly<K> c = q_epsilon(eps).to_poly().eval_hom(B, img, [&](const K& v) { return Poly<K>::constant(R, xy, v); });
    auto cx = [&](int i) { return c.coeff(exps({4 - i, i})); }; // coefficient of x^(4-i) y^i
    // fourth power of the linear form vanishing at the point
    K x0 = p[0], y0 = p[1];
    Poly<K> L4 = (X.scaled(y0) - Y.scaled(x0)).pow(4);
    auto lx = [&](int i) { return L4.coeff(exps({4 - i, i})); };
    K kappa;
    if (!lx(0).is_zero() && !cx(0).is_zero()) kappa = cx(0) / lx(0);
    else if (!lx(4).is_zero() && !cx(4).is_zero()) kappa = cx(4) / lx(4);
    else fail(ErrorKind::Inconsistent, "restriction to the line cannot be a nonzero fourth power vanishing at the point");
    if (!(cx(0) == kappa * lx(0)) || !(cx(4) == kappa * lx(4)))
        fail(ErrorKind::Inconsistent, "restriction to the line is incompatible with the contact point");
    Mat3<K> blockY = hyperflex_row_block(a, b);
    HyperflexRows<K> out;
    for (int r = 0; r < 3; ++r) {
        for (int i = 0; i < 3; ++i) out.block[r][P[i]] = blockY[r][i];
        out.rhs[r] = kappa * lx(r + 1) - cx(r + 1);
    }
    return out;
}

/// Scales q so that the x^4 coefficient is 1, or else the first nonzero
/// coefficient in graded-lex order.
template <class K>
TernaryQuartic<K> normalize_scalar(const TernaryQuartic<K>& q) {
    for (int n = 0; n < 15; ++n)
        if (!q[n].is_zero()) return q.scaled(q[n].inverse());
    fail(ErrorKind::InvalidArgument, "zero form");
}

template <class K>
bool is_hyperflex_of(const TernaryQuartic<K>& q, const HyperflexDatum<K>& d) {
    auto f = contact_analysis(q, d.line.c);
    return f.kind == FlexTag::Hyperinflection && f.contact_point && *f.contact_point == ProjectivePoint<K>::normalized(d.point.c);
}

template <class K>
struct Reconstruction {
    TernaryQuartic<K> quartic;
    NormalizedFrame<K> frame;
    std::array<std::size_t, 3> frame_indices;
    K lambda, mu, nu;
};

/// The unique quartic with the given hyperinflection lines and contact
/// points (at least five data).
template <class K>
Reconstruction<K> reconstruct_from_hyperflexes_full(const std::vector<HyperflexDatum<K>>& data) {
    if (data.size() < 5) fail(ErrorKind::InvalidArgument, "at least five hyperflex data are required");
    const auto R = data[0].line.c[0].ring();
    require_char_coprime_to_6(R.characteristic());
    std::vector<HyperflexDatum<K>> d;
    for (auto& e : data) {
        d.push_back({ProjectiveLine<K>::normalized(e.line.c), ProjectivePoint<K>::normalized(e.point.c)});
        if (!incidence(d.back().line.c, d.back().point.c).is_zero())
            fail(ErrorKind::InvalidArgument, "contact point does not lie on its line");
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i].line == d[j].line) fail(ErrorKind::InvalidArgument, "hyperflex lines must be pairwise distinct");
    std::optional<std::array<std::size_t, 3>> triple;
    for (std::size_t i = 0; i < d.size() && !triple; ++i)
        for (std::size_t j = i + 1; j < d.size() && !triple; ++j)
            for (std::size_t k = j + 1; k < d.size() && !triple; ++k)
                if (!det3(matrix_of_rows(d[i].line.c, d[j].line.c, d[k].line.c)).is_zero()) triple = {i, j, k};
    if (!triple) fail(ErrorKind::Precondition, "all hyperflex lines pass through one point");
    auto [i0, j0, k0] = *triple;
    NormalizedFrame<K> frame = normalize_frame<K>({d[i0], d[j0], d[k0]});
    Mat3<K> Minv_t = transpose3(inverse3(frame.M));
    Matrix<K> A;
    std::vector<K> b;
    for (std::size_t n = 0; n < d.size(); ++n) {
        if (n == i0 || n == j0 || n == k0) continue;
        auto l = apply3(Minv_t, d[n].line.c);
        auto p = apply3(frame.M, d[n].point.c);
        auto rows = hyperflex_rows(frame.eps, l, p);
        for (int r = 0; r < 3; ++r) {
            A.push_back({rows.block[r][0], rows.block[r][1], rows.block[r][2]});
            b.push_back(rows.rhs[r]);
        }
    }
    auto sol = solve_linear(A, b, 3);
    if (sol.rank < 3) fail(ErrorKind::RankDeficient, "linear system has rank " + std::to_string(sol.rank) + " < 3");
    if (!sol.solution) fail(ErrorKind::Inconsistent, "no quartic has these hyperflex data");
    auto& x = *sol.solution;
    TernaryQuartic<K> qn = conc_normal_form(frame.eps, x[0], x[1], x[2]);
    TernaryQuartic<K> q = normalize_scalar(TernaryQuartic<K>::from_poly(compose_linear(qn.to_poly(), frame.M)));
    for (auto& e : d)
        if (!is_hyperflex_of(q, e)) fail(ErrorKind::VerificationFailed, "reconstructed quartic does not have datum " + e.line.to_string() + " as a hyperflex");
    return {q, frame, *triple, x[0], x[1], x[2]};
}

template <class K>
TernaryQuartic<K> reconstruct_from_hyperflexes(const std::vector<HyperflexDatum<K>>& data) {
    return reconstruct_from_hyperflexes_full(data).quartic;
}

/// Coordinates putting q in the form q_eps + xyz(lambda x + mu y + nu z)
/// using three of its hyperflexes; returns the normal form (scaled so the
/// x^4 coefficient is 1).
template <class K>
TernaryQuartic<K> to_conc_normal_form(const TernaryQuartic<K>& q, const std::array<HyperflexDatum<K>, 3>& d, NormalizedFrame<K>* frame_out = nullptr) {
    for (auto& e : d)
        if (!is_hyperflex_of(q, e)) fail(ErrorKind::InvalidArgument, "datum is not a hyperflex of the quartic");
    NormalizedFrame<K> frame = normalize_frame(d);
    TernaryQuartic<K> qn = normalize_scalar(TernaryQuartic<K>::from_poly(compose_linear(q.to_poly(), inverse3(frame.M))));
    TernaryQuartic<K> base = q_epsilon(frame.eps);
    for (int n = 0; n < 15; ++n) {
        auto [i, j, k] = quartic_monomials()[n];
        bool free = i >= 1 && j >= 1 && k >= 1;
        if (!free && !(qn[n] == base[n])) fail(ErrorKind::VerificationFailed, "transformed quartic is not in normal form");
    }
    if (frame_out) *frame_out = frame;
    return qn;
}

} // namespace quartic
