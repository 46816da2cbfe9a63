#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "quartic/poly/factor.hpp"
#include "quartic/rings/dual.hpp"
#include "quartic/rings/galois_field.hpp"
#include "quartic/rings/local.hpp"

namespace quartic {

namespace detail {

/// Solves A c = b over F_p for square invertible A (columns given).
inline std::vector<std::uint32_t> solve_mod_p(std::vector<std::vector<std::uint32_t>> a, std::vector<std::uint32_t> b,
                                              std::uint32_t p) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) fail(ErrorKind::Internal, "singular basis matrix in field embedding");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        std::uint32_t inv = fpx::invp(a[col][col], p);
        for (auto& x : a[col]) x = fpx::mulp(x, inv, p);
        b[col] = fpx::mulp(b[col], inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            std::uint32_t f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) a[r][j] = (a[r][j] + p - fpx::mulp(f, a[col][j], p)) % p;
            b[r] = (b[r] + p - fpx::mulp(f, b[col], p)) % p;
        }
    }
    return b;
}

} // namespace detail

/// The embedding F_{p^d} -> F_{p^n} for d | n, fixed by the image of the
/// generator of the small field.
class FieldEmbedding {
public:
    FieldEmbedding(const GaloisField* from, const GaloisField* to, GF image) : from_(from), to_(to), image_(std::move(image)) {
        GF g = GaloisRing{to_}.one();
        for (int i = 0; i < from_->k; ++i) {
            powers_.push_back(g);
            g *= image_;
        }
    }

    const GaloisField* from() const { return from_; }
    const GaloisField* to() const { return to_; }
    const GF& image_of_generator() const { return image_; }

    GF operator()(const GF& x) const {
        if (x.field() != from_) fail(ErrorKind::RingMismatch, "element not in the embedding's source field");
        GF r = GaloisRing{to_}.zero();
        for (int i = 0; i < from_->k; ++i)
            if (x.coeff(i)) r += powers_[i] * GaloisRing{to_}.from_int(x.coeff(i));
        return r;
    }

private:
    const GaloisField* from_;
    const GaloisField* to_;
    GF image_;
    std::vector<GF> powers_;
};

namespace detail {

inline GF find_generator_image(const GaloisField* small, const GaloisField* big) {
    const std::uint32_t p = small->p;
    const int d = small->k;
    GaloisRing br{big}, sr{small};
    if (d == 1) return br.from_int((p - small->modulus[0]) % p);
    BigInt e = (big->order() - 1) / (small->order() - 1);
    std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(big->k) * 1315423911ULL + d);
    for (int attempt = 0; attempt < 256; ++attempt) {
        GF gamma = random_element(br, rng);
        if (gamma.is_zero()) continue;
        GF beta = gamma.pow(e); // norm to the degree-d subfield
        std::vector<GF> conj{beta};
        for (int j = 1; j < d; ++j) conj.push_back(conj.back().frobenius());
        bool distinct = true;
        for (int i = 0; i < d && distinct; ++i)
            for (int j = i + 1; j < d; ++j)
                if (conj[i] == conj[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;
        // minimal polynomial of beta over F_p
        std::vector<GF> mu{br.one()};
        for (auto& c : conj) {
            std::vector<GF> next(mu.size() + 1, br.zero());
            for (std::size_t i = 0; i < mu.size(); ++i) {
                next[i + 1] += mu[i];
                next[i] -= mu[i] * c;
            }
            mu = std::move(next);
        }
        std::vector<GF> mu_small;
        for (auto& c : mu) mu_small.push_back(sr.from_int(c.to_prime_field().value()));
        auto roots = field_roots(UPoly<GF>(sr, mu_small), 0);
        if (roots.empty()) fail(ErrorKind::Internal, "minimal polynomial has no root in the subfield");
        const GF& r = roots.front();
        // write the small generator in the basis 1, r, ..., r^(d-1)
        std::vector<std::vector<std::uint32_t>> a(d, std::vector<std::uint32_t>(d));
        GF pw = sr.one();
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) a[i][j] = pw.coeff(i);
            pw *= r;
        }
        std::vector<std::uint32_t> b(d, 0);
        b[1 % d] = 1;
        auto c = solve_mod_p(a, b, p);
        GF img = br.zero(), bp = br.one();
        for (int j = 0; j < d; ++j) {
            img += bp * br.from_int(c[j]);
            bp *= beta;
        }
        return img;
    }
    fail(ErrorKind::Internal, "could not find a subfield generator");
}

} // namespace detail

inline const FieldEmbedding& field_embedding(const GaloisField* small, const GaloisField* big) {
    static std::mutex mu;
    static std::map<std::pair<const GaloisField*, const GaloisField*>, std::unique_ptr<FieldEmbedding>> cache;
    if (small->p != big->p || big->k % small->k != 0)
        fail(ErrorKind::NoCanonicalMap, "no embedding " + small->name() + " -> " + big->name());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({small, big});
        if (it != cache.end()) return *it->second;
    }
    GF img = small == big ? GaloisRing{big}.generator() : detail::find_generator_image(small, big);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{small, big}];
    if (!slot) slot = std::make_unique<FieldEmbedding>(small, big, img);
    return *slot;
}

/// Canonical embeddings between the library's rings.
template <class R>
auto embed(const Integer& a, const R& target) { return target.from_integer(a.value()); }

inline Fp embed(const Fp& a, const PrimeField& target) {
    if (a.modulus() != target.p) fail(ErrorKind::NoCanonicalMap, "no map between prime fields of different characteristic");
    return a;
}
inline GF embed(const Fp& a, const GaloisRing& target) { return to_gf(a, target.field); }
inline GF embed(const GF& a, const GaloisRing& target) {
    if (a.field() == target.field) return a;
    return field_embedding(a.field(), target.field)(a);
}
template <class K>
Dual<K> embed(const K& a, const DualRing<K>&) { return embed_dual(a); }
template <class K>
Local<K> embed(const K& a, const LocalRing<K>&) { return embed_local(a); }

} // namespace quartic
