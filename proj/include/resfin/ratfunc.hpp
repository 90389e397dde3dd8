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

#ifndef RESFIN_RATFUNC_HPP_
#define RESFIN_RATFUNC_HPP_

#include <span>
#include <string>

#include "resfin/multipoly.hpp"

namespace resfin {

// Quotient num/den of polynomials over Z or F_p, kept in canonical form:
//  - den != 0; zero is 0/1;
//  - gcd(num, den) removed (complete for at most one variable, and for
//    multivariate pairs up to kGcdDegreeLimit; beyond that only the integer
//    content and common monomial factor are removed);
//  - den has positive leading coefficient over Z, is monic over F_p.
class RatFunc {
 public:
  static constexpr long kGcdDegreeLimit = 48;

  RatFunc() = default;
  explicit RatFunc(MultiPoly num);
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(const BigInt& characteristic, std::size_t nvars,
                          const BigInt& c);

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  const BigInt& characteristic() const noexcept { return num_.characteristic(); }
  std::size_t nvars() const noexcept { return num_.nvars(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  // Equality by cross-multiplication; independent of how far the gcd
  // reduction went.
  friend bool equal_exact(const RatFunc& a, const RatFunc& b);

  // "num" when den == 1, otherwise "(num)/(den)" with parentheses dropped
  // around single-factor numerators/denominators.
  std::string to_string(std::span<const std::string> names = {}) const;
  std::size_t hash() const noexcept { return num_.hash() * 1000003u ^ den_.hash(); }

 private:
  void canonicalize();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace resfin

template <>
struct std::hash<resfin::RatFunc> {
  std::size_t operator()(const resfin::RatFunc& r) const noexcept {
    return r.hash();
  }
};

#endif  // RESFIN_RATFUNC_HPP_
