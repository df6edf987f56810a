#include "adjspec/rational.hpp"

#include <cctype>
#include <ostream>

#include "adjspec/errors.hpp"

namespace adjspec {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw Error(Errc::ParseError, "not a rational number: \"" + std::string(whole) + "\"");
  }
  return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(Errc::ParseError, "bad denominator in \"" + std::string(text) + "\"");
    }
    Integer den(std::string{den_text});
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool negative = !s.empty() && s.front() == '-';
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part)) {
      throw Error(Errc::ParseError, "not a rational number: \"" + std::string(text) + "\"");
    }
    Integer whole = int_part.empty() ? Integer(0) : Integer(std::string{int_part});
    Integer frac(std::string{frac_part});
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  return q.get_str();
}

Rational abs(const Rational& value) { return sgn(value) < 0 ? Rational(-value) : value; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  if (this == &other) {
    const GaussianRational copy = other;
    return *this *= copy;
  }
  // Most operator entries are purely real or purely imaginary; skip the
  // vanishing cross terms.
  if (other.is_real()) {
    re_ *= other.re_;
    im_ *= other.re_;
    return *this;
  }
  if (other.is_imaginary()) {
    Rational re = -im_ * other.im_;
    im_ = re_ * other.im_;
    re_ = std::move(re);
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  im_ = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& other) {
  if (other.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (this == &other) {
    *this = GaussianRational(1);
    return *this;
  }
  Rational n = other.norm2();
  *this *= other.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& value) {
  if (value.is_real()) return to_string(value.re());
  if (value.is_imaginary()) return to_string(value.im()) + "*i";
  std::string im = to_string(value.im());
  return to_string(value.re()) + (im.front() == '-' ? "" : "+") + im + "*i";
}

std::ostream& operator<<(std::ostream& out, const GaussianRational& value) {
  return out << to_string(value);
}

}  // namespace adjspec
