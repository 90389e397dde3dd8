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

#ifndef RESFIN_MULTIPOLY_HPP_
#define RESFIN_MULTIPOLY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resfin/galois_field.hpp"
#include "resfin/number_theory.hpp"
#include "resfin/uni_poly.hpp"

namespace resfin {

using Monomial = std::vector<std::uint32_t>;

struct Term {
  Monomial exponents;
  BigInt coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Graded lexicographic order: total degree first, then x1 > x2 > ....
// Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

// Sparse polynomial in `nvars` variables over Z (characteristic 0) or F_p.
// Terms are kept in descending graded-lex order with no zero coefficients;
// in characteristic p coefficients lie in [0, p).
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(BigInt characteristic, std::size_t nvars)
      : characteristic_(std::move(characteristic)), nvars_(nvars) {}
  MultiPoly(BigInt characteristic, std::size_t nvars, std::vector<Term> terms);

  static MultiPoly constant(const BigInt& characteristic, std::size_t nvars,
                            const BigInt& c);
  static MultiPoly variable(const BigInt& characteristic, std::size_t nvars,
                            std::size_t index);
  static MultiPoly monomial(const BigInt& characteristic, Monomial exponents,
                            const BigInt& c);

  const BigInt& characteristic() const noexcept { return characteristic_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  BigInt constant_term() const;
  // -1 for the zero polynomial.
  long total_degree() const noexcept;
  long degree_in(std::size_t var) const noexcept;
  // Largest per-variable degree (the D of Kronecker substitution).
  long max_variable_degree() const noexcept;
  // Variables with nonzero exponent in some term.
  std::vector<std::size_t> support() const;
  const Term& leading_term() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scaled(const BigInt& c) const;
  MultiPoly pow(std::uint64_t e) const;

  // gcd of the integer coefficients (characteristic 0); 1 in characteristic p
  // for nonzero input.
  BigInt content() const;
  BigInt max_abs_coefficient() const;
  BigInt l1_norm() const;

  BigInt evaluate(std::span<const BigInt> point) const;
  GaloisField::Elem evaluate(const GaloisField& field,
                             std::span<const GaloisField::Elem> point) const;

  // Canonical text in descending graded-lex order; default names x1..xs.
  std::string to_string(std::span<const std::string> names = {}) const;

  std::size_t hash() const noexcept;

 private:
  void normalize();

  BigInt characteristic_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Greatest common divisor with the canonical sign (positive leading
// coefficient over Z, monic over F_p). Uses recursive primitive
// pseudo-remainder sequences.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Univariate image under x_i -> x^{n_i}. Throws BudgetExceeded when the
// image degree would exceed `max_degree`.
UniPoly substitute_powers(const MultiPoly& f,
                          std::span<const std::uint64_t> exponents,
                          std::uint64_t max_degree = std::uint64_t{1} << 24);

enum class ExponentMethod { kRecursion, kKroneckerFallback };

std::string to_string(ExponentMethod m);

struct ExponentChoice {
  std::vector<std::uint64_t> exponents;
  // Every exponent is <= d^{2s}, d the total degree of the input.
  bool bound_respected = false;
  ExponentMethod method = ExponentMethod::kRecursion;
  // The total-degree and per-variable-degree readings of the bound disagree
  // on `bound_respected` for this input.
  bool interpretations_disagree = false;
};

// Exponents n_1..n_s with f(x^{n_1}, ..., x^{n_s}) != 0. The result is
// verified before returning.
ExponentChoice lemma_z_exponents(const MultiPoly& f);

}  // namespace resfin

template <>
struct std::hash<resfin::MultiPoly> {
  std::size_t operator()(const resfin::MultiPoly& p) const noexcept {
    return p.hash();
  }
};

#endif  // RESFIN_MULTIPOLY_HPP_
