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

#ifndef RESFIN_GROUP_HPP_
#define RESFIN_GROUP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resfin/field_matrix.hpp"

namespace resfin {

struct Generator {
  std::string label;
  FieldMatrix matrix;
};

struct PhiData {
  MultiPoly phi;
  // Primes dividing the integer content of some denominator (characteristic 0).
  std::vector<BigInt> excluded_primes;
};

// Phi = lcm of denominator contents times lcm of their primitive parts.
PhiData compute_phi(const BigInt& characteristic, std::size_t nvars,
                    std::span<const FieldMatrix> matrices);

// A matrix group over Q(T) or F_p(T) with a finite generating set closed
// under inverses. Each user generator `a` is followed by its inverse,
// labelled "a^-1".
class GroupSpec {
 public:
  GroupSpec(BigInt characteristic, std::vector<std::string> variables,
            std::vector<Generator> generators);

  const BigInt& characteristic() const noexcept { return characteristic_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t user_generator_count() const noexcept { return generators_.size() / 2; }
  const MultiPoly& phi() const noexcept { return phi_.phi; }
  const std::vector<BigInt>& excluded_primes() const noexcept {
    return phi_.excluded_primes;
  }

  // Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;
  std::size_t inverse_of(std::size_t index) const noexcept { return index ^ 1u; }
  FieldMatrix identity() const;

 private:
  BigInt characteristic_;
  std::vector<std::string> variables_;
  std::size_t dimension_ = 0;
  std::vector<Generator> generators_;
  PhiData phi_;
};

// Letters index into GroupSpec::generators(); the empty word is the identity.
struct Word {
  std::vector<std::size_t> letters;

  std::size_t length() const noexcept { return letters.size(); }
  std::string to_string(const GroupSpec& spec) const;
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) {
      return a.letters.size() <=> b.letters.size();
    }
    return a.letters <=> b.letters;
  }
};

Word word_from_labels(const GroupSpec& spec, std::span<const std::string> labels);

FieldMatrix word_evaluate(const GroupSpec& spec, const Word& word);

// Phi^{|w|} (gamma - I), entrywise polynomial.
PolyMatrix scaled_difference(const GroupSpec& spec, const Word& word);

struct BallElement {
  FieldMatrix element;
  Word word;  // shortlex-least among shortest words
};

// Nontrivial elements of length <= radius, in shortlex order of their words.
// Throws BudgetExceeded once more than max_elements elements are found.
std::vector<BallElement> ball_enumerate(const GroupSpec& spec, std::size_t radius,
                                        std::uint64_t max_elements);

struct GrowthBounds {
  BigInt max_abs_coefficient;
  long max_entry_degree = -1;
};

GrowthBounds growth_degree_bounds(const GroupSpec& spec, const Word& word);

// Constants for the growth invariants: degree grows by at most
// degree_constant per letter, coefficients by at most a factor alpha.
struct GrowthConstants {
  long degree_constant = 0;
  BigInt alpha;
};

GrowthConstants growth_constants(const GroupSpec& spec);

}  // namespace resfin

#endif  // RESFIN_GROUP_HPP_
