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

#ifndef RESFIN_PROFILER_HPP_
#define RESFIN_PROFILER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resfin/witness.hpp"

namespace resfin {

// max_{1 <= i <= n} dz(i).
std::uint64_t farb_z(std::uint64_t n);
// Entry k is farb_z(k) for 1 <= k <= n_max; entry 0 is unused.
std::vector<std::uint64_t> farb_z_table(std::uint64_t n_max);

struct ReductionBudget {
  std::uint64_t prime_bound = 31;    // characteristic 0: primes p <= prime_bound
  std::uint64_t degree_bound = 3;    // characteristic p: moduli of degree <= this
  std::uint64_t closure_budget = std::uint64_t{1} << 20;
};

// All congruence quotients within a budget, up to isomorphism. In
// characteristic 0: every prime p <= P and every point of F_p^s. In
// characteristic p: for each degree k <= K one fixed modulus and every point
// of F_{p^k}^s generating the whole field, one per Frobenius orbit. Points at
// which Phi vanishes are dropped. Members are sorted by image order.
class ReductionFamily {
 public:
  struct Member {
    FieldHom hom;
    GaloisField field;
    std::vector<GfMatrix> images;
    ImageOrder order;
  };

  ReductionFamily(const GroupSpec& spec, const ReductionBudget& budget);

  const std::vector<Member>& members() const noexcept { return members_; }
  const ReductionBudget& budget() const noexcept { return budget_; }
  // Members whose closure hit the budget; their true order exceeds it.
  std::size_t truncated() const noexcept { return truncated_; }

 private:
  ReductionBudget budget_;
  std::vector<Member> members_;
  std::size_t truncated_ = 0;
};

struct DReduction {
  BigInt min_order;
  // Every quotient of the family with order below min_order was examined.
  bool exhaustive = false;
  FieldHom hom;
};

// Throws IdentityWord for a trivial word and NotFoundWithinBudget when no
// member of the family separates the word.
DReduction d_reduction(const GroupSpec& spec, const ReductionFamily& family,
                       const Word& word);
DReduction d_reduction(const GroupSpec& spec, const Word& word,
                       const ReductionBudget& budget);

struct ElementProfile {
  std::string word;
  std::size_t length = 0;
  BigInt gl_bound;
  std::optional<ImageOrder> image_order;
  std::optional<DReduction> d_reduction;
  bool verified = false;
  std::string error;
};

struct ProfileRow {
  std::size_t radius = 0;
  std::uint64_t ball_size = 0;  // |B(n)| without the identity
  BigInt max_gl_bound;
  std::optional<BigInt> max_image_order;
  std::optional<BigInt> max_d_reduction;
  bool exhaustive = false;
};

struct FarbProfile {
  std::vector<ProfileRow> rows;
  std::vector<ElementProfile> elements;
};

struct ProfileOptions {
  std::uint64_t max_elements = 200000;
  bool compute_image_order = true;
  bool compute_d_reduction = false;
  ReductionBudget reduction;
};

FarbProfile farb_profile(const GroupSpec& spec, std::size_t radius,
                         const ProfileOptions& options = {});

// |B(k)| including the identity for k = 0..radius.
std::vector<std::uint64_t> word_growth(const GroupSpec& spec, std::size_t radius,
                                       std::uint64_t max_elements);

// Number of subgroups of index <= n in Z ("Z") or Z^2 ("Z2").
BigInt subgroup_growth_catalog(const std::string& group_id, std::uint64_t n);
// Sublattices of Z^2 with index <= n, counted by listing Hermite normal forms
// and deduplicating the resulting point sets.
std::uint64_t count_sublattices_z2(std::uint64_t n);

struct AuditRow {
  std::uint64_t n = 0;
  std::uint64_t word_growth = 0;
  std::uint64_t farb = 0;
  std::uint64_t subgroup_growth = 0;
  double log_margin = 0;  // log(F^{s(F)}) - log(w)
  bool pass = false;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  bool all_pass = false;
};

// Checks w(n) <= F(n)^{s(F(n))} for the infinite cyclic group, n = 1..n_max.
AuditReport inequality_audit(const std::string& group_id, std::uint64_t n_max);

struct ThresholdRow {
  std::uint64_t n = 0;
  std::uint64_t farb = 0;
  double ratio = 0;  // (log F)^2 / log log n
};

struct ThresholdReport {
  std::vector<ThresholdRow> rows;
  double min_ratio = 0;
  bool asserted = false;
  bool pass = true;
};

// Samples need n >= 16. When `assert_floor` is set the report passes only
// if every ratio is at least the floor.
ThresholdReport threshold_check(std::span<const std::pair<std::uint64_t, std::uint64_t>> samples,
                                std::optional<double> assert_floor = std::nullopt);

struct GrowthTable {
  std::string group_id;
  std::vector<std::uint64_t> word_growth;
  std::vector<BigInt> subgroup_growth;
  std::vector<std::uint64_t> farb;
  bool audit_pass = false;
};

// Index k holds the value at n = k; only the infinite cyclic group "Z" has a
// closed-form word growth and exact F.
GrowthTable growth_table(const std::string& group_id, std::uint64_t n_max);

}  // namespace resfin

#endif  // RESFIN_PROFILER_HPP_
