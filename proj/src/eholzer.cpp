#include "rcb/eholzer.hpp"

#include "rcb/error.hpp"
#include "rcb/racah.hpp"

namespace rcb {

namespace {

const VarSet& z_only() {
  static const VarSet vars{Var::z};
  return vars;
}

}  // namespace

StarSeries::StarSeries(unsigned truncation) : truncation_(truncation), coeffs_(truncation + 1) {}

void StarSeries::add(unsigned order, const Rational& weight, const Poly& form) {
  if (order > truncation_ || form.is_zero()) return;
  auto& slot = coeffs_[order];
  auto [it, inserted] = slot.try_emplace(weight, form.embed(z_only()));
  if (!inserted) {
    it->second += form.embed(z_only());
    if (it->second.is_zero()) slot.erase(it);
  }
}

Poly StarSeries::component(unsigned order, const Rational& weight) const {
  if (order > truncation_) return Poly(z_only());
  const auto it = coeffs_[order].find(weight);
  return it == coeffs_[order].end() ? Poly(z_only()) : it->second;
}

bool StarSeries::is_zero() const {
  for (const auto& level : coeffs_) {
    if (!level.empty()) return false;
  }
  return true;
}

void StarSeries::require_same_truncation(const StarSeries& other) const {
  if (truncation_ != other.truncation_) {
    throw Error(ErrorKind::TruncationMismatch, "truncation orders " + std::to_string(truncation_) + " and " +
                                                   std::to_string(other.truncation_) + " differ");
  }
}

StarSeries& StarSeries::operator+=(const StarSeries& rhs) {
  require_same_truncation(rhs);
  for (unsigned m = 0; m <= truncation_; ++m) {
    for (const auto& [w, p] : rhs.coeffs_[m]) add(m, w, p);
  }
  return *this;
}

StarSeries& StarSeries::operator-=(const StarSeries& rhs) {
  require_same_truncation(rhs);
  for (unsigned m = 0; m <= truncation_; ++m) {
    for (const auto& [w, p] : rhs.coeffs_[m]) add(m, w, -p);
  }
  return *this;
}

StarSeries& StarSeries::operator*=(const Rational& c) {
  if (c.is_zero()) {
    for (auto& level : coeffs_) level.clear();
    return *this;
  }
  for (auto& level : coeffs_) {
    for (auto& [w, p] : level) p *= c;
  }
  return *this;
}

std::string StarSeries::str() const {
  std::string out;
  for (unsigned m = 0; m <= truncation_; ++m) {
    for (const auto& [w, p] : coeffs_[m]) out += "h^" + std::to_string(m) + "  weight " + w.str() + ": " + p.str() + "\n";
  }
  return out;
}

StarSeries inject(const WeightedForm& f, unsigned truncation) {
  StarSeries out(truncation);
  out.add(0, f.weight, make_form(f.weight, f.form).form);
  return out;
}

namespace {

template <typename Scale>
StarSeries star_with(const StarSeries& a, const StarSeries& b, const Scale& scale) {
  if (a.truncation() != b.truncation()) {
    throw Error(ErrorKind::TruncationMismatch, "truncation orders " + std::to_string(a.truncation()) + " and " +
                                                   std::to_string(b.truncation()) + " differ");
  }
  const unsigned top = a.truncation();
  StarSeries out(top);
  for (unsigned i = 0; i <= top; ++i) {
    for (const auto& [wa, pa] : a.coeffs()[i]) {
      for (unsigned j = 0; i + j <= top; ++j) {
        for (const auto& [wb, pb] : b.coeffs()[j]) {
          for (unsigned n = 0; i + j + n <= top; ++n) {
            const Rational c = scale(wa, wb, n);
            if (c.is_zero()) continue;
            const WeightedForm r = rc_bracket({wa, pa}, {wb, pb}, n);
            out.add(i + j + n, r.weight, r.form * c);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

StarSeries star(const StarSeries& a, const StarSeries& b) {
  return star_with(a, b, [](const Rational&, const Rational&, unsigned) { return Rational(1); });
}

StarSeries star_kappa(const StarSeries& a, const StarSeries& b, const Rational& kappa, CmzReading reading) {
  const Rational half(1, 2);
  return star_with(a, b, [&](const Rational& wa, const Rational& wb, unsigned n) {
    return reading == CmzReading::Printed ? cmz_t_sum(kappa, wa, wb, n) : cmz_t_sum(kappa, wa * half, wb * half, n);
  });
}

StarSeries assoc_defect(const WeightedForm& f, const WeightedForm& g, const WeightedForm& h, unsigned truncation) {
  const StarSeries sf = inject(f, truncation);
  const StarSeries sg = inject(g, truncation);
  const StarSeries sh = inject(h, truncation);
  return star(star(sf, sg), sh) - star(sf, star(sg, sh));
}

StarSeries assoc_defect_kappa(const WeightedForm& f, const WeightedForm& g, const WeightedForm& h,
                              unsigned truncation, const Rational& kappa, CmzReading reading) {
  const StarSeries sf = inject(f, truncation);
  const StarSeries sg = inject(g, truncation);
  const StarSeries sh = inject(h, truncation);
  return star_kappa(star_kappa(sf, sg, kappa, reading), sh, kappa, reading) -
         star_kappa(sf, star_kappa(sg, sh, kappa, reading), kappa, reading);
}

WeightedForm parse_weighted_form(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "expected 'weight:poly' in '" + std::string(text) + "'");
  const Rational weight = Rational::parse(text.substr(0, colon));
  try {
    return make_form(weight, parse_poly(text.substr(colon + 1), z_only()));
  } catch (const ParseError& e) {
    throw ParseError(colon + 1 + e.position(), e.what());
  }
}

}  // namespace rcb
