#include "kslogos/scalar.hpp"

#include <cctype>
#include <ostream>

#include "kslogos/error.hpp"

namespace kslogos {

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero scalar");
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Scalar& z) {
  const bool has_re = sgn(z.real()) != 0;
  const bool has_im = sgn(z.imag()) != 0;
  if (!has_im) return to_string(z.real());

  std::string im;
  if (z.imag() == 1) {
    im = "i";
  } else if (z.imag() == -1) {
    im = "-i";
  } else {
    im = to_string(z.imag()) + "i";
  }
  if (!has_re) return im;
  if (im.front() != '-') im.insert(im.begin(), '+');
  return to_string(z.real()) + im;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error("not an exact number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad_number(text);
    mpz_class scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    const mpz_class digits(std::string(whole) + std::string(frac), 10);
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) bad_number(text);
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) bad_number(text);
  if (text.back() != 'i') return Scalar(parse_rational(text));

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }

  auto coefficient = [&](std::string_view c) -> Rational {
    if (c.empty() || c == "+") return Rational(1);
    if (c == "-") return Rational(-1);
    return parse_rational(c);
  };

  if (split == std::string_view::npos) return Scalar(Rational(0), coefficient(body));
  return Scalar(parse_rational(body.substr(0, split)), coefficient(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << to_string(z); }

}  // namespace kslogos
