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

#ifndef RESFIN_UNI_POLY_HPP_
#define RESFIN_UNI_POLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "resfin/number_theory.hpp"

namespace resfin {

// Dense univariate polynomial over Z (characteristic 0) or F_p.
// Coefficients are stored lowest degree first; the highest stored
// coefficient is nonzero unless the polynomial is zero (empty vector).
// In characteristic p every coefficient lies in [0, p).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(BigInt characteristic) : characteristic_(std::move(characteristic)) {}
  UniPoly(BigInt characteristic, std::vector<BigInt> coeffs);

  static UniPoly constant(const BigInt& characteristic, const BigInt& c);
  static UniPoly monomial(const BigInt& characteristic, const BigInt& c,
                          std::size_t degree);

  const BigInt& characteristic() const noexcept { return characteristic_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly scaled(const BigInt& c) const;
  BigInt evaluate(const BigInt& x) const;
  BigInt max_abs_coefficient() const;

  // Characteristic p only.
  UniPoly monic() const;
  // Content and primitive part over Z; primitive part has positive leading
  // coefficient.
  BigInt content() const;
  UniPoly primitive_part() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  BigInt characteristic_ = 0;
  std::vector<BigInt> coeffs_;
};

// Division with remainder. In characteristic 0 the leading coefficient of b
// must divide every intermediate leading coefficient (exact or unit case);
// otherwise InvalidArgument is thrown.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

// Greatest common divisor: monic in characteristic p, primitive with
// positive leading coefficient over Z. gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// base^e mod m in characteristic p.
UniPoly powmod(const UniPoly& base, const BigInt& e, const UniPoly& m);

// Irreducibility over F_p (Rabin's test). Rejects the zero polynomial and
// characteristic-0 input; nonzero constants are units, hence not irreducible.
bool is_irreducible(const UniPoly& f);

// The monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `index` (constant term least significant).
UniPoly monic_from_index(const BigInt& p, std::size_t degree,
                         const BigInt& index);

// All monic irreducibles of degree `degree` over F_p ordered by the base-p
// value of their lower coefficients. Throws BudgetExceeded when p^degree
// exceeds `budget`.
std::vector<UniPoly> enumerate_irreducibles(const BigInt& p, std::size_t degree,
                                            std::uint64_t budget = 1u << 22);

}  // namespace resfin

#endif  // RESFIN_UNI_POLY_HPP_
