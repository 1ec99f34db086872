#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace kslogos {

/// Arbitrary-precision rational; gmpxx keeps it canonical after arithmetic.
using Rational = mpq_class;

/// Gaussian rational a + bi with a, b in Q.
///
/// Every value is kept in canonical form (positive denominators, lowest
/// terms), so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "p/q" or "p"; never a decimal point.
std::string to_string(const Rational& q);
/// "a", "bi", "a+bi", "a-bi" with rational a, b ("i" and "-i" for unit b).
std::string to_string(const Scalar& z);

/// Accepts integers, fractions "p/q" and finite decimals "0.96" (converted
/// exactly). Throws kslogos::Error on anything else.
Rational parse_rational(std::string_view text);
/// Accepts a rational, a pure imaginary "bi" / "i" / "-i", or "a+bi" / "a-bi".
Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& z);

}  // namespace kslogos
