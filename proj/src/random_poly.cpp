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

#include "resfin/random_poly.hpp"

namespace resfin {

MultiPoly random_nonzero_poly(std::mt19937_64& rng, const BigInt& characteristic,
                              const RandomPolyShape& shape) {
  std::uniform_int_distribution<std::size_t> nvars_dist(1, shape.max_vars);
  std::uniform_int_distribution<std::size_t> terms_dist(1, shape.max_terms);
  std::uniform_int_distribution<std::uint32_t> deg_dist(0, shape.max_degree);
  std::uniform_int_distribution<std::int64_t> coeff_dist(-shape.max_coefficient,
                                                         shape.max_coefficient);
  const std::size_t s = nvars_dist(rng);
  while (true) {
    std::vector<Term> terms;
    const std::size_t nterms = terms_dist(rng);
    for (std::size_t k = 0; k < nterms; ++k) {
      Monomial m(s, 0);
      std::uint32_t budget = deg_dist(rng);
      for (std::uint32_t step = 0; step < budget; ++step) {
        m[std::uniform_int_distribution<std::size_t>(0, s - 1)(rng)] += 1;
      }
      std::int64_t c = 0;
      while (c == 0) c = coeff_dist(rng);
      terms.push_back({std::move(m), BigInt(static_cast<long>(c))});
    }
    MultiPoly f(characteristic, s, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

LemmaZSummary check_lemma_z(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  const BigInt chars[] = {0, 2, 3};
  LemmaZSummary out;
  for (std::size_t k = 0; k < count; ++k) {
    const MultiPoly f = random_nonzero_poly(rng, chars[k % 3]);
    const ExponentChoice c = lemma_z_exponents(f);
    ++out.cases;
    if (!substitute_powers(f, c.exponents).is_zero()) ++out.nonzero;
    if (c.interpretations_disagree) ++out.interpretations_disagree;
    if (c.method == ExponentMethod::kKroneckerFallback) {
      ++out.fallback;
      continue;
    }
    ++out.recursion;
    const long d = f.total_degree();
    const BigInt cap = resfin::pow(BigInt(d), 2 * f.nvars());
    for (std::uint64_t n : c.exponents) {
      if (BigInt(static_cast<unsigned long>(n)) > cap) {
        ++out.bound_violations;
        break;
      }
    }
  }
  return out;
}

}  // namespace resfin
