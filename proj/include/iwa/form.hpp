#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "iwa/linalg.hpp"
#include "iwa/poly.hpp"
#include "iwa/rational.hpp"

namespace iwa {

// Basis covector indices 0..5 <-> (alpha, beta, gamma, conj alpha, conj beta,
// conj gamma). A monomial is a bit set over these; canonical order is ascending
// index, signs by inversion parity.
using Mask = uint8_t;

constexpr int kAlpha = 0, kBeta = 1, kGamma = 2;
constexpr int kAlphaBar = 3, kBetaBar = 4, kGammaBar = 5;
constexpr Mask kTopMask = 0x3F;

inline int mask_degree(Mask m) { return std::popcount(unsigned(m)); }
inline int mask_p(Mask m) { return std::popcount(unsigned(m & 0x07)); }
inline int mask_q(Mask m) { return std::popcount(unsigned(m & 0x38)); }

// Sign of merging two disjoint ascending index sets a, b into ascending order.
inline int merge_sign(Mask a, Mask b) {
    int inversions = 0;
    for (int i = 0; i < 6; ++i)
        if (b & (1u << i)) inversions += std::popcount(unsigned(a >> (i + 1)));
    return (inversions & 1) ? -1 : 1;
}

// Sign of sorting the image of an ascending set under index map 0..5 -> 0..5.
int permuted_sign(Mask m, const int map6[6]);

template <class C>
C scalar_to(const GScalar& c);

template <>
inline GScalar scalar_to<GScalar>(const GScalar& c) { return c; }
template <>
inline MultiPoly scalar_to<MultiPoly>(const GScalar& c) { return MultiPoly(c); }
template <>
inline RatFunc scalar_to<RatFunc>(const GScalar& c) { return RatFunc(c); }
template <>
inline Jet1 scalar_to<Jet1>(const GScalar& c) { return Jet1(c); }

// Graded element of the rank-64 exterior algebra; coefficients live in one of
// the tower levels (GScalar, MultiPoly, RatFunc, Jet1).
template <class C>
class Form {
  public:
    Form() = default;

    static Form monomial(Mask m, C coeff) {
        Form f;
        f.add(m, std::move(coeff));
        return f;
    }
    static Form covector(int index) { return monomial(Mask(1u << index), scalar_to<C>(GScalar(1))); }
    static Form one() { return monomial(0, scalar_to<C>(GScalar(1))); }

    const std::map<Mask, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    C coeff(Mask m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? C() : it->second;
    }

    void add(Mask m, const C& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(m);
        if (it == coeffs_.end()) {
            coeffs_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    bool is_homogeneous(int* degree_out = nullptr) const {
        int deg = -1;
        for (const auto& [m, c] : coeffs_) {
            if (deg < 0) deg = mask_degree(m);
            else if (deg != mask_degree(m)) return false;
        }
        if (degree_out) *degree_out = deg < 0 ? 0 : deg;
        return true;
    }
    int degree() const {
        int d = 0;
        is_homogeneous(&d);
        return d;
    }
    Form graded_piece(int k) const {
        Form f;
        for (const auto& [m, c] : coeffs_)
            if (mask_degree(m) == k) f.add(m, c);
        return f;
    }

    friend Form operator+(const Form& a, const Form& b) {
        Form r = a;
        for (const auto& [m, c] : b.coeffs_) r.add(m, c);
        return r;
    }
    friend Form operator-(const Form& a, const Form& b) {
        Form r = a;
        for (const auto& [m, c] : b.coeffs_) r.add(m, -c);
        return r;
    }
    Form operator-() const {
        Form r;
        for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(m, -c);
        return r;
    }
    Form& operator+=(const Form& b) { return *this = *this + b; }
    Form& operator-=(const Form& b) { return *this = *this - b; }
    friend Form operator*(const C& c, const Form& f) {
        Form r;
        for (const auto& [m, fc] : f.coeffs_) r.add(m, c * fc);
        return r;
    }
    bool operator==(const Form& b) const { return (*this - b).is_zero(); }

    friend Form wedge(const Form& a, const Form& b) {
        Form r;
        for (const auto& [ma, ca] : a.coeffs_)
            for (const auto& [mb, cb] : b.coeffs_) {
                if (ma & mb) continue;
                int sign = merge_sign(ma, mb);
                C c = ca * cb;
                r.add(Mask(ma | mb), sign < 0 ? -c : c);
            }
        return r;
    }

    std::map<Mask, C>& mutable_coeffs() { return coeffs_; }

  private:
    std::map<Mask, C> coeffs_;
};

// d extends d(gamma) = -alpha^beta, d(conj gamma) = -conj(alpha)^conj(beta),
// all other coframe differentials zero, as an anti-derivation.
template <class C>
Form<C> d(const Form<C>& u) {
    Form<C> r;
    for (const auto& [m, c] : u.coeffs()) {
        int pos = 0;
        for (int j = 0; j < 6; ++j) {
            if (!(m & (1u << j))) continue;
            if (j == kGamma || j == kGammaBar) {
                Mask dj = (j == kGamma) ? Mask(0x03) : Mask(0x18);  // alpha^beta / bars
                Mask rest = Mask(m & ~(1u << j));
                if (!(dj & rest)) {
                    int sign = -merge_sign(dj, rest);  // minus from d(gamma) = -alpha^beta
                    if (pos & 1) sign = -sign;
                    C v = c;
                    r.add(Mask(dj | rest), sign < 0 ? -v : v);
                }
            }
            ++pos;
        }
    }
    return r;
}

// Complex conjugation: swaps barred and unbarred covectors.
template <class C>
Form<C> conj(const Form<C>& u) {
    static const int swap_bar[6] = {3, 4, 5, 0, 1, 2};
    Form<C> r;
    for (const auto& [m, c] : u.coeffs()) {
        Mask cm = Mask(((m & 0x07) << 3) | ((m & 0x38) >> 3));
        int sign = permuted_sign(m, swap_bar);
        C v = c.conj();
        r.add(cm, sign < 0 ? -v : v);
    }
    return r;
}

// Interior product with the basis vector dual to covector `index`.
template <class C>
Form<C> contract_basis(int index, const Form<C>& u) {
    Form<C> r;
    for (const auto& [m, c] : u.coeffs()) {
        if (!(m & (1u << index))) continue;
        int pos = std::popcount(unsigned(m & ((1u << index) - 1)));
        C v = c;
        r.add(Mask(m & ~(1u << index)), (pos & 1) ? -v : v);
    }
    return r;
}

// Interior product with a vector given by components in the dual coframe.
template <class C>
Form<C> contract(const std::array<C, 6>& vec, const Form<C>& u) {
    Form<C> r;
    for (int j = 0; j < 6; ++j) {
        if (vec[j].is_zero()) continue;
        r += vec[j] * contract_basis(j, u);
    }
    return r;
}

using FormQ = Form<GScalar>;
using FormR = Form<RatFunc>;
using FormJ = Form<Jet1>;

template <class To, class From>
Form<To> promote(const Form<From>& u);

FormR to_ratfunc(const FormQ& u);
FormQ eval(const FormR& u, const ParamPoint& pt);
FormJ eval_jet(const FormR& u, const ParamPoint& base);
FormQ jet_value(const FormJ& u);
FormQ jet_partial(const FormJ& u, int index);

// All masks of given total degree (or J0-bidegree), ascending numeric order.
const std::vector<Mask>& masks_of_degree(int k);
const std::vector<Mask>& masks_of_bidegree(int p, int q);

Vec form_to_vec(const FormQ& u, const std::vector<Mask>& basis);
FormQ vec_to_form(const Vec& v, const std::vector<Mask>& basis);

// Wedge past the canonical volume monomial: u = c * dV with
// dV = i^9 a^b^g^ab^bb^gb (total measure one). Returns c for 6-forms.
GScalar integrate(const FormQ& u);
Jet1 integrate(const FormJ& u);

// Hodge star of a monomial for an orthonormal coframe (u ^ conj(star v) =
// <u,v> dV with the coframe monomials orthonormal). Works in any coframe's
// coordinates, in particular the t-frame of a deformed structure.
std::pair<Mask, GScalar> star_orthonormal_monomial(Mask m);

template <class C>
Form<C> star_orthonormal(const Form<C>& u) {
    Form<C> r;
    for (const auto& [m, c] : u.coeffs()) {
        auto [sm, z] = star_orthonormal_monomial(m);
        r.add(sm, scalar_to<C>(z) * c);
    }
    return r;
}

std::string form_str(const FormQ& u);

}  // namespace iwa
