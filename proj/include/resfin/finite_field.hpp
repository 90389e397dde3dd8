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

#ifndef RESFIN_FINITE_FIELD_HPP_
#define RESFIN_FINITE_FIELD_HPP_

#include <vector>

#include "resfin/number_theory.hpp"
#include "resfin/uni_poly.hpp"

namespace resfin {

// Element of the prime field F_p in least nonnegative form.
class PFieldElem {
 public:
  PFieldElem(BigInt p, const BigInt& value);

  const BigInt& modulus() const noexcept { return p_; }
  const BigInt& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  PFieldElem operator-() const;
  friend PFieldElem operator+(const PFieldElem& a, const PFieldElem& b);
  friend PFieldElem operator-(const PFieldElem& a, const PFieldElem& b);
  friend PFieldElem operator*(const PFieldElem& a, const PFieldElem& b);
  PFieldElem inverse() const;
  friend bool operator==(const PFieldElem&, const PFieldElem&) = default;

 private:
  BigInt p_;
  BigInt value_;
};

// Residues of F_p[x]/(h); the vector always has exactly deg(h) entries.
struct ExtFieldElem {
  std::vector<BigInt> coeffs;
  friend bool operator==(const ExtFieldElem&, const ExtFieldElem&) = default;
};

// The field F_p[x]/(h) for a monic irreducible h.
class ExtField {
 public:
  ExtField(BigInt p, UniPoly modulus);

  const BigInt& characteristic() const noexcept { return p_; }
  const UniPoly& modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept {
    return static_cast<std::size_t>(modulus_.degree());
  }
  BigInt order() const { return resfin::pow(p_, degree()); }

  ExtFieldElem zero() const;
  ExtFieldElem one() const;
  ExtFieldElem from_integer(const BigInt& c) const;
  ExtFieldElem from_poly(const UniPoly& f) const;  // f mod h
  UniPoly to_poly(const ExtFieldElem& a) const;

  ExtFieldElem add(const ExtFieldElem& a, const ExtFieldElem& b) const;
  ExtFieldElem sub(const ExtFieldElem& a, const ExtFieldElem& b) const;
  ExtFieldElem mul(const ExtFieldElem& a, const ExtFieldElem& b) const;
  ExtFieldElem pow(const ExtFieldElem& a, const BigInt& e) const;
  ExtFieldElem inverse(const ExtFieldElem& a) const;
  bool is_zero(const ExtFieldElem& a) const;

 private:
  void check(const ExtFieldElem& a) const;

  BigInt p_;
  UniPoly modulus_;
};

}  // namespace resfin

#endif  // RESFIN_FINITE_FIELD_HPP_
