#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace rcb {

/// Exact rational number, always stored reduced with a positive denominator.
/// Backed by GMP's mpq_class; division by zero raises Error.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  /// Throws Error(DivisionByZero) when den == 0.
  Rational(long num, long den);

  explicit Rational(mpq_class value);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// True for 0, -1, -2, ...
  bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }
  /// The value as a machine integer if it is an integer that fits in a long.
  std::optional<long> to_long() const;

  /// Canonical text form: "p/q", or "p" when q == 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// Integer power with a signed exponent; throws DivisionByZero for 0^negative.
Rational pow(const Rational& base, long exponent);

/// Rising factorial x(x+1)...(x+m-1); 1 when m == 0.
Rational pochhammer(const Rational& x, unsigned m);

/// k!
Rational factorial(unsigned k);

/// Generalized binomial x(x-1)...(x-k+1)/k!, i.e. pochhammer(x-k+1, k)/k!.
Rational binom_general(const Rational& x, unsigned k);

/// Gamma(a)/Gamma(b) for a - b an integer, as a Pochhammer ratio.
/// Throws DivisionByZero when the ratio passes through a pole, and
/// InvalidArgument when a - b is not an integer.
Rational gamma_ratio(const Rational& a, const Rational& b);

}  // namespace rcb
