#include "rcb/rational.hpp"

#include <cctype>
#include <string>

#include "rcb/error.hpp"

namespace rcb {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) {
    throw ParseError(begin, "empty rational");
  }
  const auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const std::size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!valid_int(num, true)) {
    throw ParseError(begin, "malformed numerator '" + std::string(num) + "'");
  }
  if (!valid_int(den, false)) {
    throw ParseError(begin + slash + 1, "malformed denominator '" + std::string(den) + "'");
  }
  std::string num_text(num);
  if (!num_text.empty() && num_text.front() == '+') num_text.erase(0, 1);
  mpz_class n(num_text, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational '" + std::string(body) + "' has zero denominator");
  }
  return Rational(mpq_class(n, d));
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "division of " + str() + " by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1);
  Rational factor = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= factor;
    e >>= 1U;
    if (e != 0) factor *= factor;
  }
  return result;
}

Rational pochhammer(const Rational& x, unsigned m) {
  Rational result(1);
  Rational factor = x;
  for (unsigned i = 0; i < m; ++i) {
    result *= factor;
    factor += 1;
  }
  return result;
}

Rational factorial(unsigned k) { return pochhammer(Rational(1), k); }

Rational binom_general(const Rational& x, unsigned k) {
  return pochhammer(x - Rational(k) + 1, k) / factorial(k);
}

Rational gamma_ratio(const Rational& a, const Rational& b) {
  const Rational diff = a - b;
  const auto steps = diff.to_long();
  if (!steps) {
    throw Error(ErrorKind::InvalidArgument,
                "Gamma(" + a.str() + ")/Gamma(" + b.str() + ") is not a Pochhammer ratio");
  }
  // Gamma(b + m)/Gamma(b) = (b)_m; for m < 0 invert (a)_{-m}.
  if (*steps >= 0) {
    if (b.is_nonpositive_integer()) {
      throw Error(ErrorKind::DivisionByZero, "Gamma pole at " + b.str());
    }
    return pochhammer(b, static_cast<unsigned>(*steps));
  }
  if (a.is_nonpositive_integer()) {
    throw Error(ErrorKind::DivisionByZero, "Gamma pole at " + a.str());
  }
  return Rational(1) / pochhammer(a, static_cast<unsigned>(-*steps));
}

}  // namespace rcb
