#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rcb/bracket.hpp"
#include "rcb/poly.hpp"
#include "rcb/rational.hpp"

namespace rcb {

/// Element of V[[h]] truncated after h^N. coeffs[m] maps a weight to the
/// component of h^m in that weight; zero components are never stored.
class StarSeries {
 public:
  explicit StarSeries(unsigned truncation = 0);

  unsigned truncation() const { return truncation_; }
  const std::vector<std::map<Rational, Poly>>& coeffs() const { return coeffs_; }

  /// Adds `form` to the h^order component at `weight`; orders above N are dropped.
  void add(unsigned order, const Rational& weight, const Poly& form);
  Poly component(unsigned order, const Rational& weight) const;
  bool is_zero() const;

  StarSeries& operator+=(const StarSeries& rhs);
  StarSeries& operator-=(const StarSeries& rhs);
  StarSeries& operator*=(const Rational& c);
  friend StarSeries operator+(StarSeries a, const StarSeries& b) { return a += b; }
  friend StarSeries operator-(StarSeries a, const StarSeries& b) { return a -= b; }
  friend StarSeries operator*(StarSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const StarSeries&, const StarSeries&) = default;

  /// "h^m  weight w: poly" per stored component, by order then weight.
  std::string str() const;

 private:
  void require_same_truncation(const StarSeries& other) const;

  unsigned truncation_;
  std::vector<std::map<Rational, Poly>> coeffs_;
};

/// f placed at order 0.
StarSeries inject(const WeightedForm& f, unsigned truncation);

/// sum_n [a_i, b_j]_n h^{i+j+n}, bilinear over all weight components.
/// Throws TruncationMismatch on unequal truncation orders.
StarSeries star(const StarSeries& a, const StarSeries& b);

/// Which weights the CMZ coefficients t_n^kappa(l1, l2) are evaluated at.
enum class CmzReading { Printed, Halved };

/// sum_n t_n^kappa(l1, l2) [a_i, b_j]_n h^{i+j+n}.
StarSeries star_kappa(const StarSeries& a, const StarSeries& b, const Rational& kappa, CmzReading reading);

/// (f*g)*h - f*(g*h) at truncation N.
StarSeries assoc_defect(const WeightedForm& f, const WeightedForm& g, const WeightedForm& h, unsigned truncation);
StarSeries assoc_defect_kappa(const WeightedForm& f, const WeightedForm& g, const WeightedForm& h,
                              unsigned truncation, const Rational& kappa, CmzReading reading);

/// "weight:poly", e.g. "7/3:z^2+1".
WeightedForm parse_weighted_form(std::string_view text);

}  // namespace rcb
