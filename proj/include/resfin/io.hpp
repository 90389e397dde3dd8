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

#ifndef RESFIN_IO_HPP_
#define RESFIN_IO_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resfin/profiler.hpp"

namespace resfin {

// Entry grammar:
//   entry  := expr ('/' expr)?
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := base ('^' uint)?
//   base   := uint | name | '(' expr ')'
// Whitespace is ignored. Errors are ParseError with a byte offset.
RatFunc parse_entry(std::string_view text, const BigInt& characteristic,
                    std::span<const std::string> variables);

// Whitespace-separated labels, each optionally followed by "^k" or "^-k".
Word parse_word(const GroupSpec& spec, std::string_view text);

struct Budgets {
  std::optional<std::uint64_t> max_elements;
  std::optional<std::uint64_t> closure_budget;
  std::optional<std::uint64_t> prime_bound;
  std::optional<std::uint64_t> degree_bound;
};

struct ResolvedBudgets {
  std::uint64_t max_elements = 200000;
  std::uint64_t closure_budget = std::uint64_t{1} << 20;
  std::uint64_t prime_bound = 31;
  std::uint64_t degree_bound = 3;
};

// Precedence: command line, then spec file, then environment
// (RESFIN_MAX_ELEMENTS, RESFIN_CLOSURE_BUDGET, RESFIN_PRIME_BOUND,
// RESFIN_DEGREE_BOUND), then defaults.
ResolvedBudgets resolve_budgets(
    const Budgets& cli, const Budgets& spec,
    const std::function<std::optional<std::string>(const std::string&)>& env);
Budgets budgets_from_env(
    const std::function<std::optional<std::string>(const std::string&)>& env);

struct GeneratorEntry {
  std::string label;
  std::vector<std::vector<std::string>> matrix;
};

struct GroupSpecFile {
  BigInt characteristic;
  std::vector<std::string> variables;
  std::vector<GeneratorEntry> generators;
  Budgets budgets;
};

GroupSpecFile parse_spec_file(const std::string& json_text);
GroupSpecFile load_spec_file(const std::string& path);
GroupSpec to_group_spec(const GroupSpecFile& file);
// Key-ordered JSON of the group file with entries in canonical form, budgets left
// out.
std::string canonical_spec(const GroupSpecFile& file);
// Hex SHA-256 of canonical_spec.
std::string spec_fingerprint(const GroupSpecFile& file);

std::string sha256_hex(std::string_view data);

struct WitnessFile {
  std::string spec_fingerprint;
  WitnessRecord record;
};

std::string serialize_witness(const GroupSpec& spec, const WitnessFile& file);
WitnessFile parse_witness(const GroupSpec& spec, const std::string& json_text);

std::string profile_csv(const FarbProfile& profile);

// Reads (n, F) pairs from a CSV with an "n" column and one of the columns
// farb_z, max_d_reduction, max_image_order, max_gl_bound (first present
// wins). Rows with an empty value are skipped.
std::vector<std::pair<std::uint64_t, std::uint64_t>> read_threshold_csv(
    const std::string& csv_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace resfin

#endif  // RESFIN_IO_HPP_
