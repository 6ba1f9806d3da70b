#pragma once

#include <cstdint>
#include <vector>

#include "rcb/racah.hpp"
#include "rcb/rational.hpp"

namespace rcb {

/// The 27 triples with every weight in {1/2, 1, 7/3}.
std::vector<ParamTriple> base_triples();

/// `count` admissible triples of positive rationals with numerator and
/// denominator in [1, 20], drawn from mt19937_64 seeded with `seed`.
std::vector<ParamTriple> random_triples(std::uint64_t seed, std::size_t count);

/// base_triples() followed by random_triples(seed, count).
std::vector<ParamTriple> default_triples(std::uint64_t seed, std::size_t count);

/// Weight tuples for `arity` forms: each base triple extended cyclically by
/// {1/2, 1, 7/3}, then `count` seeded random positive tuples.
std::vector<std::vector<Rational>> weight_tuples(std::size_t arity, std::uint64_t seed, std::size_t count);

}  // namespace rcb
