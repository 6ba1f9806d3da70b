#include "rcb/samples.hpp"

#include <random>

namespace rcb {

namespace {

const Rational kBase[] = {Rational(1, 2), Rational(1), Rational(7, 3)};

Rational draw(std::mt19937_64& rng) {
  const auto num = static_cast<long>(rng() % 20) + 1;
  const auto den = static_cast<long>(rng() % 20) + 1;
  return Rational(num, den);
}

}  // namespace

std::vector<ParamTriple> base_triples() {
  std::vector<ParamTriple> out;
  for (const Rational& a : kBase) {
    for (const Rational& b : kBase) {
      for (const Rational& c : kBase) out.push_back({a, b, c});
    }
  }
  return out;
}

std::vector<ParamTriple> random_triples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<ParamTriple> out;
  while (out.size() < count) {
    ParamTriple t;
    t.lam1 = draw(rng);
    t.lam2 = draw(rng);
    t.lam3 = draw(rng);
    if (t.admissible()) out.push_back(t);
  }
  return out;
}

std::vector<ParamTriple> default_triples(std::uint64_t seed, std::size_t count) {
  std::vector<ParamTriple> out = base_triples();
  for (auto& t : random_triples(seed, count)) out.push_back(std::move(t));
  return out;
}

std::vector<std::vector<Rational>> weight_tuples(std::size_t arity, std::uint64_t seed, std::size_t count) {
  std::vector<std::vector<Rational>> out;
  std::size_t i = 0;
  for (const ParamTriple& t : base_triples()) {
    std::vector<Rational> w{t.lam1, t.lam2, t.lam3};
    w.resize(std::min<std::size_t>(arity, 3));
    for (std::size_t j = w.size(); j < arity; ++j) w.push_back(kBase[(i + j) % 3]);
    out.push_back(std::move(w));
    ++i;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Rational> w;
    for (std::size_t j = 0; j < arity; ++j) w.push_back(draw(rng));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace rcb
