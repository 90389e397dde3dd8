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

#ifndef RESFIN_WITNESS_HPP_
#define RESFIN_WITNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resfin/galois_field.hpp"
#include "resfin/group.hpp"

namespace resfin {

enum class HomPath { kCharZero, kCharP, kPrimeField };

std::string to_string(HomPath path);
HomPath hom_path_from_string(const std::string& s);

// How a hom was found. For the characteristic-zero path g = f(l^{n_1}, ...)
// is the integer whose residue certifies f != 0; for the characteristic-p
// path g is the univariate substitution and degree_bound the smallest l
// with I_l(p) > deg(g)/l.
struct HomProvenance {
  std::vector<std::uint64_t> exponents;
  std::string method;  // paper_recursion, kronecker_fallback or identity
  BigInt point;        // l; 0 when unused
  long substituted_degree = -1;  // r = deg g
  BigInt substituted_max_coefficient;  // A
  BigInt value;  // i = g(l); 0 when unused
  std::uint64_t degree_bound = 0;
};

// A ring map S -> F_p[x]/(h) given by the images of the variables. For the
// characteristic-zero path h = x, so the target is F_p.
struct FieldHom {
  HomPath path = HomPath::kCharZero;
  BigInt p;
  UniPoly modulus;
  std::vector<ExtFieldElem> images;
  HomProvenance provenance;

  std::size_t degree() const { return static_cast<std::size_t>(modulus.degree()); }
  BigInt field_size() const { return resfin::pow(p, degree()); }
  GaloisField field() const;
  std::vector<GaloisField::Elem> image_codes(const GaloisField& field) const;
};

std::optional<GaloisField::Elem> apply_hom(const GaloisField& field,
                                           std::span<const GaloisField::Elem> point,
                                           const RatFunc& r);
std::optional<GfMatrix> apply_hom(const GaloisField& field,
                                  std::span<const GaloisField::Elem> point,
                                  const FieldMatrix& m);

FieldHom lemma_a_witness(const MultiPoly& f, std::span<const BigInt> excluded_primes = {});
FieldHom lemma_b_witness(const MultiPoly& f);

struct ImageOrder {
  BigInt order;
  bool exact = false;
};

struct WitnessRecord {
  std::vector<std::string> word;
  std::size_t word_length = 0;
  std::size_t entry_row = 0;
  std::size_t entry_col = 0;
  MultiPoly target;  // Phi * A'
  FieldHom hom;
  BigInt field_size;
  BigInt gl_bound;
  std::optional<ImageOrder> image_order;
  bool verified = false;
};

struct SeparateOptions {
  bool compute_image_order = false;
  std::uint64_t closure_budget = std::uint64_t{1} << 20;
};

// Throws IdentityWord when the word is trivial.
WitnessRecord separate(const GroupSpec& spec, const Word& word,
                       const SeparateOptions& options = {});

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

VerifyResult verify_witness(const GroupSpec& spec, const WitnessRecord& record);

// Images of all generators (inverse-closed list); nullopt when the hom
// kills a denominator or a generator image is singular.
std::optional<std::vector<GfMatrix>> generator_images(const GroupSpec& spec,
                                                      const GaloisField& field,
                                                      std::span<const GaloisField::Elem> point);

// Order of the group generated by `images`. Closure stops after `budget`
// elements and then reports q^{M^2} with exact = false.
ImageOrder closure_order(const GaloisField& field, std::span<const GfMatrix> images,
                         std::uint64_t budget);

ImageOrder image_order(const GroupSpec& spec, const FieldHom& hom, std::uint64_t budget);

// Explicit per-word ceilings on gl_bound derived from the provenance.
// Characteristic 0: q <= q0 where q0 is the least prime such that the
// product of non-excluded primes below q0 exceeds (r+1) l^r A.
// Characteristic p: q <= p^{degree_bound}.
BigInt chain_gl_bound(const FieldHom& hom, std::span<const BigInt> excluded_primes,
                      std::size_t dimension);

}  // namespace resfin

#endif  // RESFIN_WITNESS_HPP_
