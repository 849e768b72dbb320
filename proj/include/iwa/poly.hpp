#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "iwa/rational.hpp"

namespace iwa {

// The 12 deformation variables: t11,t12,t21,t22,t31,t32 and their formal
// conjugates s11..s32. Conjugation is imposed only at evaluation.
constexpr int kNumParams = 12;

int param_index(const std::string& name);  // "t11" -> 0, ..., "s32" -> 11
std::string param_name(int index);
inline int t_index(int i, int lambda) { return (i - 1) * 2 + (lambda - 1); }
inline int s_index(int i, int lambda) { return 6 + t_index(i, lambda); }
inline int conj_param(int index) { return (index + 6) % 12; }

// A point of the deformation space; conjugate values are derived, not stored.
struct ParamPoint {
    std::array<GScalar, 6> t{};  // t11, t12, t21, t22, t31, t32

    static ParamPoint zero() { return {}; }
    const GScalar& t_at(int i, int lambda) const { return t[t_index(i, lambda)]; }
    GScalar& t_at(int i, int lambda) { return t[t_index(i, lambda)]; }
    // Value of any of the 12 formal variables, with s |-> conj(t).
    GScalar value(int index) const { return index < 6 ? t[index] : t[index - 6].conj(); }
    GScalar det() const {  // D(t) = t11 t22 - t12 t21
        return t[0] * t[3] - t[1] * t[2];
    }
    bool on_essential_slice() const { return t[4].is_zero() && t[5].is_zero(); }
    ParamPoint essential() const {
        ParamPoint p = *this;
        p.t[4] = p.t[5] = GScalar(0);
        return p;
    }
    bool operator==(const ParamPoint& o) const { return t == o.t; }
};

using Expo = std::array<uint8_t, kNumParams>;

// Sparse polynomial over the Gaussian rationals in the 12 deformation variables.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(const GScalar& c) {
        if (!c.is_zero()) terms_[Expo{}] = c;
    }
    static MultiPoly var(int index, const GScalar& coeff = GScalar(1));
    static MultiPoly t(int i, int lambda) { return var(t_index(i, lambda)); }
    static MultiPoly s(int i, int lambda) { return var(s_index(i, lambda)); }
    static MultiPoly det();  // D(t)

    const std::map<Expo, GScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    MultiPoly conj() const;  // swaps t <-> s, conjugates coefficients
    GScalar eval(const ParamPoint& pt) const;
    struct Jet1 eval_jet(const ParamPoint& base) const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
    friend MultiPoly operator*(const GScalar& c, const MultiPoly& p);
    bool operator==(const MultiPoly& b) const { return terms_ == b.terms_; }

    std::string str() const;

  private:
    void add_term(const Expo& e, const GScalar& c);
    std::map<Expo, GScalar> terms_;
};

// First-order jet at a base point: value plus the 12 partials d/dt, d/ds.
struct Jet1 {
    GScalar value;
    std::array<GScalar, kNumParams> partials{};

    Jet1() : value(0) {}
    explicit Jet1(const GScalar& v) : value(v) {}
    static Jet1 variable(int index, const GScalar& v) {
        Jet1 j(v);
        j.partials[index] = GScalar(1);
        return j;
    }

    bool is_zero() const;
    Jet1 conj() const;  // conjugate values, swap holomorphic/anti-holomorphic slots

    friend Jet1 operator+(const Jet1& a, const Jet1& b);
    friend Jet1 operator-(const Jet1& a, const Jet1& b);
    friend Jet1 operator*(const Jet1& a, const Jet1& b);
    friend Jet1 operator/(const Jet1& a, const Jet1& b);  // PoleError if b.value == 0
    Jet1 operator-() const;
    Jet1& operator+=(const Jet1& b) { return *this = *this + b; }
    Jet1& operator-=(const Jet1& b) { return *this = *this - b; }
    Jet1& operator*=(const Jet1& b) { return *this = *this * b; }
    bool operator==(const Jet1& b) const { return value == b.value && partials == b.partials; }
};

// Fraction of polynomials; stored unreduced, equality by cross-multiplication.
class RatFunc {
  public:
    RatFunc() : num_(), den_(GScalar(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);
    RatFunc(const MultiPoly& p) : num_(p), den_(GScalar(1)) {}
    RatFunc(const GScalar& c) : num_(c), den_(GScalar(1)) {}

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc conj() const { return RatFunc(num_.conj(), den_.conj()); }
    GScalar eval(const ParamPoint& pt) const;
    Jet1 eval_jet(const ParamPoint& base) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    // a/b == c/d  iff  a d - c b == 0
    bool operator==(const RatFunc& b) const { return (num_ * b.den_ - b.num_ * den_).is_zero(); }

  private:
    MultiPoly num_, den_;
};

GScalar poly_eval(const MultiPoly& p, const ParamPoint& pt);
GScalar ratfunc_eval(const RatFunc& f, const ParamPoint& pt);
Jet1 jet_lift(const RatFunc& f, const ParamPoint& base);

}  // namespace iwa
