#include "rcb/verma.hpp"

#include <sstream>

#include "rcb/error.hpp"
#include "rcb/specfun.hpp"

namespace rcb {

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::H: return "H";
    case Generator::E: return "E";
    case Generator::F: return "F";
    case Generator::C: return "C";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  if (text == "H") return Generator::H;
  if (text == "E") return Generator::E;
  if (text == "F") return Generator::F;
  if (text == "C") return Generator::C;
  throw Error(ErrorKind::InvalidArgument, "unknown generator '" + std::string(text) + "'");
}

VarSet ModuleModel::vars() const {
  switch (kind) {
    case Kind::Highest:
    case Kind::Lowest: return VarSet{Var::x};
    case Kind::TensorLowest: return VarSet{Var::x, Var::y};
    case Kind::TensorLowestTV: return VarSet{Var::t, Var::v};
  }
  return {};
}

std::string ModuleModel::str() const {
  switch (kind) {
    case Kind::Highest: return "highest:" + lam1.str();
    case Kind::Lowest: return "lowest:" + lam1.str();
    case Kind::TensorLowest: return "tensor:" + lam1.str() + "," + lam2.str();
    case Kind::TensorLowestTV: return "tv:" + lam1.str() + "," + lam2.str();
  }
  return "?";
}

ModuleModel ModuleModel::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument, "model must look like kind:weights, got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  const auto comma = rest.find(',');
  if (kind == "highest" || kind == "lowest") {
    if (comma != std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "one weight expected");
    const Rational lam = Rational::parse(rest);
    return kind == "highest" ? highest(lam) : lowest(lam);
  }
  if (kind == "tensor" || kind == "tv") {
    if (comma == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "two weights expected");
    const Rational l1 = Rational::parse(rest.substr(0, comma));
    const Rational l2 = Rational::parse(rest.substr(comma + 1));
    return kind == "tensor" ? tensor_lowest(l1, l2) : tensor_lowest_tv(l1, l2);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown model kind '" + std::string(kind) + "'");
}

namespace {

Poly into(const Poly& p, const VarSet& target) {
  VarSet common;
  for (Var var : p.vars().vars()) {
    if (target.contains(var)) {
      common = common.with(var);
    } else if (p.degree_in(var) > 0) {
      throw Error(ErrorKind::VarsetMismatch, "polynomial over " + p.vars().str() + " outside " + target.str());
    }
  }
  return p.restrict_to(common).embed(target);
}

Poly lowest_one(const Rational& lam, Generator g, const Poly& p, Var x) {
  const Poly xv = Poly::variable(p.vars(), x);
  switch (g) {
    case Generator::H: return p * lam + xv * p.diff(x) * Rational(2);
    case Generator::E: return xv * p;
    case Generator::F: return -(xv * p.diff(x, 2) + p.diff(x) * lam);
    case Generator::C: break;
  }
  throw Error(ErrorKind::InvalidArgument, "C is not first order");
}

Poly highest_one(const Rational& lam, Generator g, const Poly& p, Var x) {
  const Poly xv = Poly::variable(p.vars(), x);
  switch (g) {
    case Generator::H: return -(p * lam) - xv * p.diff(x) * Rational(2);
    case Generator::E: return -p.diff(x);
    case Generator::F: return xv * xv * p.diff(x) + xv * p * lam;
    case Generator::C: break;
  }
  throw Error(ErrorKind::InvalidArgument, "C is not first order");
}

/// (1-v^2) P_vv + (beta - alpha - (alpha+beta+2) v) P_v on a (t, v) polynomial.
Poly jacobi_operator_tv(const Rational& alpha, const Rational& beta, const Poly& p) {
  const VarSet& vs = p.vars();
  const Poly one = Poly::constant(vs, 1);
  const Poly v = Poly::variable(vs, Var::v);
  const Poly first = one * (beta - alpha) - v * (alpha + beta + 2);
  return (one - v * v) * p.diff(Var::v, 2) + first * p.diff(Var::v);
}

Poly tv_action(const ModuleModel& m, Generator g, const Poly& p) {
  const Rational lam = m.lam1 + m.lam2;
  const Poly t = Poly::variable(p.vars(), Var::t);
  switch (g) {
    case Generator::H: return p * lam + t * p.diff(Var::t) * Rational(2);
    case Generator::E: return t * p;
    case Generator::F: {
      const Poly jac = jacobi_operator_tv(m.lam1 - 1, m.lam2 - 1, p);
      const auto quotient = jac.divide_by_power(Var::t, 1);
      if (!quotient) {
        throw Error(ErrorKind::NonPolynomialResult, "F leaves the image of Psi on " + p.str());
      }
      return -(t * p.diff(Var::t, 2) + p.diff(Var::t) * lam + *quotient);
    }
    case Generator::C: break;
  }
  throw Error(ErrorKind::InvalidArgument, "C is not first order");
}

Poly act_first_order(const ModuleModel& m, Generator g, const Poly& p) {
  switch (m.kind) {
    case ModuleModel::Kind::Highest: return highest_one(m.lam1, g, p, Var::x);
    case ModuleModel::Kind::Lowest: return lowest_one(m.lam1, g, p, Var::x);
    case ModuleModel::Kind::TensorLowest:
      return lowest_one(m.lam1, g, p, Var::x) + lowest_one(m.lam2, g, p, Var::y);
    case ModuleModel::Kind::TensorLowestTV: return tv_action(m, g, p);
  }
  return p;
}

}  // namespace

Poly act(const ModuleModel& model, Generator g, const Poly& p) {
  const Poly q = into(p, model.vars());
  if (g != Generator::C) return act_first_order(model, g, q);
  const Poly hq = act_first_order(model, Generator::H, q);
  const Poly hhq = act_first_order(model, Generator::H, hq);
  const Poly feq = act_first_order(model, Generator::F, act_first_order(model, Generator::E, q));
  return hhq * Rational(1, 4) + hq * Rational(1, 2) + feq;
}

// ---------------------------------------------------------------- DiffOp

DiffOp DiffOp::term(unsigned a, unsigned b, const Rational& c) {
  DiffOp op;
  op.add({a, b}, c);
  return op;
}

void DiffOp::add(const Key& key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly DiffOp::apply(const Poly& p, Var var) const {
  const Poly q = p.embed(p.vars().with(var));
  const Poly x = Poly::variable(q.vars(), var);
  Poly out(q.vars());
  for (const auto& [key, c] : terms_) {
    const Poly d = q.diff(var, key.second);
    if (!d.is_zero()) out += pow(x, key.first) * d * c;
  }
  return out;
}

DiffOp DiffOp::adjoint() const {
  DiffOp out;
  for (const auto& [key, c] : terms_) out.add({key.second, key.first}, c);
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  for (const auto& [key, c] : rhs.terms_) add(key, c);
  return *this;
}

DiffOp operator*(const Rational& c, DiffOp op) {
  if (c.is_zero()) return {};
  for (auto& [key, value] : op.terms_) value *= c;
  return op;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    os << (first ? "" : " + ") << c << "*x^" << key.first << "*d^" << key.second;
    first = false;
  }
  return os.str();
}

DiffOp generator_op(const ModuleModel& model, Generator g) {
  const Rational& lam = model.lam1;
  const bool hi = model.kind == ModuleModel::Kind::Highest;
  if (!hi && model.kind != ModuleModel::Kind::Lowest) {
    throw Error(ErrorKind::InvalidArgument, "generator_op needs a one-variable model");
  }
  switch (g) {
    case Generator::H:
      return hi ? DiffOp::term(0, 0, -lam) + DiffOp::term(1, 1, -2) : DiffOp::term(0, 0, lam) + DiffOp::term(1, 1, 2);
    case Generator::E: return hi ? DiffOp::term(0, 1, -1) : DiffOp::term(1, 0);
    case Generator::F:
      return hi ? DiffOp::term(2, 1) + DiffOp::term(1, 0, lam) : DiffOp::term(1, 2, -1) + DiffOp::term(0, 1, -lam);
    case Generator::C: break;
  }
  throw Error(ErrorKind::InvalidArgument, "C has no first-order DiffOp form");
}

// ------------------------------------------------------- Fischer and Psi

Rational fischer(const Poly& p, const Poly& q) {
  if (!(p.vars() == q.vars())) {
    throw Error(ErrorKind::VarsetMismatch, "fischer over " + p.vars().str() + " and " + q.vars().str());
  }
  Rational total;
  for (const auto& [exps, c] : p.terms()) {
    const Rational d = q.coefficient(exps);
    if (d.is_zero()) continue;
    Rational norm = c * d;
    for (unsigned e : exps) norm *= factorial(e);
    total += norm;
  }
  return total;
}

Poly psi_map(const Poly& p) {
  const VarSet tv{Var::t, Var::v};
  const Poly q = into(p, VarSet{Var::x, Var::y});
  const Poly t = Poly::variable(tv, Var::t);
  const Poly v = Poly::variable(tv, Var::v);
  const Poly one = Poly::constant(tv, 1);
  return q.subst({{Var::x, t * (one - v) * Rational(1, 2)}, {Var::y, t * (one + v) * Rational(1, 2)}});
}

// ------------------------------------------------------------ intertwiners

Poly phi_tilde_in_slot(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& poly, Var u, Var a,
                       Var b) {
  const VarSet out = poly.vars().with(a).with(b);
  const Poly jac = jacobi_two_var(ell, lam1, lam2).subst(
      {{Var::x, Poly::variable(out, a)}, {Var::y, Poly::variable(out, b)}});
  const Poly shifted =
      poly.embed(poly.vars().with(u)).subst({{u, Poly::variable(out, a) + Poly::variable(out, b)}}).embed(out);
  return jac * shifted;
}

namespace {

Var single_var(const Poly& q) {
  std::vector<Var> used;
  for (Var var : q.vars().vars()) {
    if (q.degree_in(var) > 0) used.push_back(var);
  }
  if (used.size() > 1) {
    throw Error(ErrorKind::VarsetMismatch, "expected a polynomial in one variable, got " + q.vars().str());
  }
  return used.empty() ? Var::t : used.front();
}

}  // namespace

Poly intertwiner_phi_tilde(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& q) {
  const Var u = single_var(q);
  const Poly q1 = q.restrict_to(VarSet{u});
  return phi_tilde_in_slot(ell, lam1, lam2, q1, u, Var::x, Var::y).restrict_to(VarSet{Var::x, Var::y});
}

Poly intertwiner_phi(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& q) {
  const VarSet tv{Var::t, Var::v};
  const Var u = single_var(q);
  const Poly qt = q.restrict_to(VarSet{u}).subst({{u, Poly::variable(tv, Var::t)}});
  const Poly pv = jacobi_poly({lam1 - 1, lam2 - 1, ell}).embed(tv);
  return pow(Poly::variable(tv, Var::t), ell) * pv * qt;
}

Poly adjoint_phi_tilde(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& p) {
  const Poly q = into(p, VarSet{Var::x, Var::y});
  const Poly jac = jacobi_two_var(ell, lam1, lam2);
  Poly applied(q.vars());
  for (const auto& [exps, c] : jac.terms()) {
    applied += q.diff(Var::x, exps[0]).diff(Var::y, exps[1]) * c;
  }
  const VarSet zs{Var::z};
  const Poly z = Poly::variable(zs, Var::z);
  return applied.subst({{Var::x, z}, {Var::y, z}});
}

Rational casimir_eigenvalue(unsigned ell, const Rational& lam1, const Rational& lam2) {
  const Rational lam = lam1 + lam2;
  const Rational l(ell);
  return lam * (lam - 2) / 4 + l * (l + lam - 1);
}

std::vector<Poly> jacobi_expansion_tv(const Poly& tv_poly, const Rational& lam1, const Rational& lam2) {
  const VarSet tv{Var::t, Var::v};
  const VarSet ts{Var::t};
  Poly rest = into(tv_poly, tv);
  const int top = rest.degree_in(Var::v);
  std::vector<Poly> coeffs(top < 0 ? 0 : static_cast<std::size_t>(top) + 1, Poly(ts));
  for (int j = top; j >= 0; --j) {
    const JacobiParams params{lam1 - 1, lam2 - 1, static_cast<unsigned>(j)};
    if (!params.basis_admissible()) {
      throw Error(ErrorKind::Inadmissible, "Jacobi parameters do not give a basis");
    }
    const Poly pj = jacobi_poly(params);
    const Rational lead = pj.coefficient_of_power(static_cast<unsigned>(j));
    Poly cj(ts);
    for (const auto& [exps, c] : rest.terms()) {
      if (exps[1] == static_cast<unsigned>(j)) cj += Poly::power(Var::t, exps[0], c / lead).embed(ts);
    }
    coeffs[static_cast<std::size_t>(j)] = cj;
    rest -= cj.embed(tv) * pj.embed(tv);
  }
  if (!rest.is_zero()) throw Error(ErrorKind::InvalidArgument, "Jacobi expansion left a remainder");
  return coeffs;
}

}  // namespace rcb
