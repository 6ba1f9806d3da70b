#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcb/poly.hpp"
#include "rcb/rational.hpp"

namespace rcb {

enum class Generator { H, E, F, C };

std::string_view generator_name(Generator g);
/// "H", "E", "F" or "C"; throws InvalidArgument otherwise.
Generator parse_generator(std::string_view text);

/// Polynomial realizations of sl2 modules.
///   Highest(l):        H = -l - 2x d,  E = -d,  F = x^2 d + l x       on Pol(x)
///   Lowest(l):         H = l + 2x d,   E = x,   F = -(x d^2 + l d)    on Pol(x)
///   TensorLowest:      Lowest(l1) in x plus Lowest(l2) in y          on Pol(x,y)
///   TensorLowestTV:    the same module transported by Psi             on Pol(t,v)
struct ModuleModel {
  enum class Kind { Highest, Lowest, TensorLowest, TensorLowestTV };

  Kind kind = Kind::Lowest;
  Rational lam1;
  Rational lam2;  // unused by the one-variable models

  static ModuleModel highest(const Rational& lam) { return {Kind::Highest, lam, 0}; }
  static ModuleModel lowest(const Rational& lam) { return {Kind::Lowest, lam, 0}; }
  static ModuleModel tensor_lowest(const Rational& l1, const Rational& l2) { return {Kind::TensorLowest, l1, l2}; }
  static ModuleModel tensor_lowest_tv(const Rational& l1, const Rational& l2) {
    return {Kind::TensorLowestTV, l1, l2};
  }

  /// {x}, {x,y} or {t,v}.
  VarSet vars() const;
  std::string str() const;
  /// "highest:l", "lowest:l", "tensor:l1,l2", "tv:l1,l2".
  static ModuleModel parse(std::string_view text);
};

/// Applies the generator. C is H^2/4 + H/2 + FE. Input is embedded into the
/// model's variable set; throws VarsetMismatch if it uses other variables and
/// NonPolynomialResult when the (t,v) F action leaves the polynomials.
Poly act(const ModuleModel& model, Generator g, const Poly& p);

/// Normal-ordered one-variable differential operator sum c_{a,b} x^a d^b.
class DiffOp {
 public:
  using Key = std::pair<unsigned, unsigned>;

  DiffOp() = default;
  static DiffOp term(unsigned a, unsigned b, const Rational& c = Rational(1));

  const std::map<Key, Rational>& terms() const { return terms_; }
  Poly apply(const Poly& p, Var var) const;
  /// Fischer adjoint: x^a d^b goes to x^b d^a.
  DiffOp adjoint() const;

  DiffOp& operator+=(const DiffOp& rhs);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator*(const Rational& c, DiffOp op);
  DiffOp operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const DiffOp&, const DiffOp&) = default;
  std::string str() const;

 private:
  void add(const Key& key, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// H, E or F of a one-variable model as a DiffOp; InvalidArgument otherwise.
DiffOp generator_op(const ModuleModel& model, Generator g);

/// [p(d) q](0): monomials are orthogonal with <x^a y^b, x^a y^b> = a! b!.
/// Throws VarsetMismatch when the variable sets differ.
Rational fischer(const Poly& p, const Poly& q);

/// P(x, y) -> P(t(1-v)/2, t(1+v)/2) over {t, v}.
Poly psi_map(const Poly& p);

/// Replaces the slot variable `u` of `poly` by a+b and multiplies by the
/// two-variable Jacobi form in (a, b): one application of Phi-tilde in a
/// tensor slot.
Poly phi_tilde_in_slot(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& poly, Var u, Var a,
                       Var b);

/// Phi-tilde_ell Q (x, y) = jacobi_two_var(ell, l1, l2)(x, y) Q(x + y). Q has
/// at most one variable.
Poly intertwiner_phi_tilde(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& q);

/// The same intertwiner in (t, v): t^ell P_ell^{(l1-1, l2-1)}(v) Q(t).
Poly intertwiner_phi(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& q);

/// Fischer adjoint of Phi-tilde_ell: apply the Jacobi form at (d_x, d_y), then
/// set x = y = z.
Poly adjoint_phi_tilde(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& p);

/// (l1+l2)(l1+l2-2)/4 + ell(ell+l1+l2-1).
Rational casimir_eigenvalue(unsigned ell, const Rational& lam1, const Rational& lam2);

/// Expands Psi(p) as sum_j c_j(t) P_j^{(l1-1,l2-1)}(v). Entry j is c_j over
/// {t}. Requires the Jacobi parameters to be basis-admissible.
std::vector<Poly> jacobi_expansion_tv(const Poly& tv_poly, const Rational& lam1, const Rational& lam2);

}  // namespace rcb
