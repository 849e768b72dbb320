#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace iwa {

// Domain / precondition violations that callers may want to catch individually.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FrameSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructureEquationViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WrongClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotExact : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClosednessFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IsotropyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NormalizationPole : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct JacobianSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPositive : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Gaussian rational re + im*i with arbitrary-precision components.
// mpq_class keeps both parts in canonical reduced form.
class GScalar {
  public:
    GScalar() : re_(0), im_(0) {}
    GScalar(long n) : re_(n), im_(0) {}
    GScalar(const mpq_class& re) : re_(re), im_(0) { canonicalize(); }
    GScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canonicalize(); }
    GScalar(long num, long den) : re_(num, den), im_(0) {
        if (den == 0) throw PoleError("rational with zero denominator");
        canonicalize();
    }

    static GScalar i() { return GScalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GScalar conj() const { return GScalar(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    friend GScalar operator+(const GScalar& a, const GScalar& b) {
        return GScalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GScalar operator-(const GScalar& a, const GScalar& b) {
        return GScalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    GScalar operator-() const { return GScalar(-re_, -im_); }
    friend GScalar operator*(const GScalar& a, const GScalar& b) {
        return GScalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GScalar operator/(const GScalar& a, const GScalar& b) {
        if (b.is_zero()) throw PoleError("division by zero Gaussian rational");
        mpq_class n = b.norm();
        return GScalar((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    GScalar& operator+=(const GScalar& b) { return *this = *this + b; }
    GScalar& operator-=(const GScalar& b) { return *this = *this - b; }
    GScalar& operator*=(const GScalar& b) { return *this = *this * b; }
    GScalar& operator/=(const GScalar& b) { return *this = *this / b; }

    friend bool operator==(const GScalar& a, const GScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GScalar& a, const GScalar& b) { return !(a == b); }

    // Total order used only for deterministic pivoting and map keys.
    friend bool operator<(const GScalar& a, const GScalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    // Literal grammar: `a/b` or `a/b+c/di`, signs optional, integers as shorthand.
    static GScalar parse(const std::string& text);
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GScalar& z);

  private:
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }
    mpq_class re_, im_;
};

inline GScalar operator*(long a, const GScalar& b) { return GScalar(a) * b; }

std::string rat_str(const mpq_class& q);

}  // namespace iwa
