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

// Compact arithmetic in small finite fields F_q (q < 2^32) with elements
// encoded as integers: the code of a0 + a1 x + ... is a0 + a1 p + ....
// Used for reduced matrix groups, where speed matters more than generality.

#ifndef RESFIN_GALOIS_FIELD_HPP_
#define RESFIN_GALOIS_FIELD_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "resfin/finite_field.hpp"

namespace resfin {

class GaloisField {
 public:
  using Elem = std::uint32_t;

  // `modulus` is monic, lowest degree first, irreducible over F_p.
  GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus);
  explicit GaloisField(const ExtField& field);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  Elem from_integer(const BigInt& c) const;
  Elem from_digits(std::span<const std::uint64_t> digits) const;
  Elem from_ext(const ExtFieldElem& a) const;
  std::vector<std::uint64_t> digits(Elem a) const;
  // The class of x in F_p[x]/(h).
  Elem generator() const;

 private:
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint64_t p_;
  std::size_t k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

// Square matrix over a GaloisField, row-major.
struct GfMatrix {
  std::size_t size = 0;
  std::vector<GaloisField::Elem> entries;

  GaloisField::Elem at(std::size_t i, std::size_t j) const {
    return entries[i * size + j];
  }
  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;
};

GfMatrix gf_identity(std::size_t n);
GfMatrix gf_multiply(const GaloisField& f, const GfMatrix& a, const GfMatrix& b);
bool gf_is_identity(const GfMatrix& a);
GaloisField::Elem gf_determinant(const GaloisField& f, GfMatrix a);

}  // namespace resfin

#endif  // RESFIN_GALOIS_FIELD_HPP_
