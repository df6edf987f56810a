#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace adjspec {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q" or a finite decimal such as "-0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical reduced form: "3", "-1/2".
std::string to_string(const Rational& value);

Rational abs(const Rational& value);

/// Exact element of Q[i]. All operator identities are checked in this field.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re) : re_(re) {}  // NOLINT(implicit)

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2, always rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& other);
  GaussianRational& operator-=(const GaussianRational& other);
  GaussianRational& operator*=(const GaussianRational& other);
  GaussianRational& operator/=(const GaussianRational& other);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// "a", "b*i" or "a+b*i" with rational parts; used in diagnostics only.
std::string to_string(const GaussianRational& value);
std::ostream& operator<<(std::ostream& out, const GaussianRational& value);

}  // namespace adjspec
