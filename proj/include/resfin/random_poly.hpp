// Copyright 2026 The resfin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESFIN_RANDOM_POLY_HPP_
#define RESFIN_RANDOM_POLY_HPP_

#include <cstdint>
#include <random>

#include "resfin/multipoly.hpp"

namespace resfin {

struct RandomPolyShape {
  std::size_t max_vars = 3;
  std::uint32_t max_degree = 5;
  std::int64_t max_coefficient = 100;
  std::size_t max_terms = 6;
};

// Nonzero polynomial with 1..max_vars variables, total degree <= max_degree
// and coefficients in [-max_coefficient, max_coefficient].
MultiPoly random_nonzero_poly(std::mt19937_64& rng, const BigInt& characteristic,
                              const RandomPolyShape& shape = {});

struct LemmaZSummary {
  std::size_t cases = 0;
  std::size_t nonzero = 0;
  std::size_t recursion = 0;
  std::size_t fallback = 0;
  std::size_t bound_violations = 0;  // recursion results above d^{2s}
  std::size_t interpretations_disagree = 0;
};

// Runs lemma_z_exponents on `count` random polynomials, cycling through
// characteristics 0, 2, 3.
LemmaZSummary check_lemma_z(std::uint64_t seed, std::size_t count);

}  // namespace resfin

#endif  // RESFIN_RANDOM_POLY_HPP_
