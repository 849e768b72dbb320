#include "iwa/poly.hpp"

#include <sstream>

namespace iwa {

int param_index(const std::string& name) {
    if (name.size() == 3 && (name[0] == 't' || name[0] == 's')) {
        int i = name[1] - '0', lambda = name[2] - '0';
        if (i >= 1 && i <= 3 && lambda >= 1 && lambda <= 2)
            return name[0] == 't' ? t_index(i, lambda) : s_index(i, lambda);
    }
    throw ParseError("unknown deformation variable '" + name + "'");
}

std::string param_name(int index) {
    int base = index % 6;
    std::string s(1, index < 6 ? 't' : 's');
    s += char('1' + base / 2);
    s += char('1' + base % 2);
    return s;
}

MultiPoly MultiPoly::var(int index, const GScalar& coeff) {
    MultiPoly p;
    if (!coeff.is_zero()) {
        Expo e{};
        e[index] = 1;
        p.terms_[e] = coeff;
    }
    return p;
}

MultiPoly MultiPoly::det() {
    return t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1);
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (uint8_t k : e) d += k;
        if (d > deg) deg = d;
    }
    return deg;
}

void MultiPoly::add_term(const Expo& e, const GScalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::conj() const {
    MultiPoly q;
    for (const auto& [e, c] : terms_) {
        Expo f;
        for (int k = 0; k < kNumParams; ++k) f[conj_param(k)] = e[k];
        q.terms_[f] = c.conj();
    }
    return q;
}

GScalar MultiPoly::eval(const ParamPoint& pt) const {
    GScalar acc(0);
    for (const auto& [e, c] : terms_) {
        GScalar term = c;
        for (int k = 0; k < kNumParams; ++k)
            for (uint8_t p = 0; p < e[k]; ++p) term *= pt.value(k);
        acc += term;
    }
    return acc;
}

Jet1 MultiPoly::eval_jet(const ParamPoint& base) const {
    Jet1 acc;
    for (const auto& [e, c] : terms_) {
        Jet1 term{c};
        for (int k = 0; k < kNumParams; ++k)
            for (uint8_t p = 0; p < e[k]; ++p) term *= Jet1::variable(k, base.value(k));
        acc += term;
    }
    return acc;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Expo e;
            for (int k = 0; k < kNumParams; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const GScalar& c, const MultiPoly& p) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms()) r.terms_[e] = c * pc;
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int k = 0; k < kNumParams; ++k) {
            if (e[k] == 0) continue;
            os << "*" << param_name(k);
            if (e[k] > 1) os << "^" << int(e[k]);
        }
    }
    return os.str();
}

bool Jet1::is_zero() const {
    if (!value.is_zero()) return false;
    for (const auto& p : partials)
        if (!p.is_zero()) return false;
    return true;
}

Jet1 Jet1::conj() const {
    Jet1 j(value.conj());
    for (int k = 0; k < kNumParams; ++k) j.partials[conj_param(k)] = partials[k].conj();
    return j;
}

Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r(a.value + b.value);
    for (int k = 0; k < kNumParams; ++k) r.partials[k] = a.partials[k] + b.partials[k];
    return r;
}

Jet1 operator-(const Jet1& a, const Jet1& b) {
    Jet1 r(a.value - b.value);
    for (int k = 0; k < kNumParams; ++k) r.partials[k] = a.partials[k] - b.partials[k];
    return r;
}

Jet1 Jet1::operator-() const {
    Jet1 r(-value);
    for (int k = 0; k < kNumParams; ++k) r.partials[k] = -partials[k];
    return r;
}

Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r(a.value * b.value);
    for (int k = 0; k < kNumParams; ++k)
        r.partials[k] = a.partials[k] * b.value + a.value * b.partials[k];
    return r;
}

Jet1 operator/(const Jet1& a, const Jet1& b) {
    if (b.value.is_zero()) throw PoleError("jet division by zero value");
    Jet1 r(a.value / b.value);
    GScalar b2 = b.value * b.value;
    for (int k = 0; k < kNumParams; ++k)
        r.partials[k] = (a.partials[k] * b.value - a.value * b.partials[k]) / b2;
    return r;
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PoleError("rational function with zero denominator");
}

GScalar RatFunc::eval(const ParamPoint& pt) const {
    GScalar d = den_.eval(pt);
    if (d.is_zero()) throw PoleError("denominator vanishes at the parameter point");
    return num_.eval(pt) / d;
}

Jet1 RatFunc::eval_jet(const ParamPoint& base) const {
    Jet1 d = den_.eval_jet(base);
    if (d.value.is_zero()) throw PoleError("denominator vanishes at the jet base point");
    return num_.eval_jet(base) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw PoleError("division by identically zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

GScalar poly_eval(const MultiPoly& p, const ParamPoint& pt) { return p.eval(pt); }
GScalar ratfunc_eval(const RatFunc& f, const ParamPoint& pt) { return f.eval(pt); }
Jet1 jet_lift(const RatFunc& f, const ParamPoint& base) { return f.eval_jet(base); }

}  // namespace iwa
