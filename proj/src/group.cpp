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

#include "resfin/group.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "resfin/error.hpp"

namespace resfin {

namespace {

BigInt integer_lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
  const MultiPoly g = gcd(a, b);
  auto q = divide_exact(b, g);
  if (!q) throw ArithmeticFault("gcd does not divide its argument");
  return a * *q;
}

bool valid_label(const std::string& label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

MultiPoly as_polynomial(const RatFunc& r) {
  if (r.is_polynomial()) return r.num();
  auto q = divide_exact(r.num(), r.den());
  if (!q) throw ArithmeticFault("scaled entry is not polynomial: " + r.to_string());
  return *q;
}

}  // namespace

PhiData compute_phi(const BigInt& characteristic, std::size_t nvars,
                    std::span<const FieldMatrix> matrices) {
  BigInt content_lcm = 1;
  MultiPoly part_lcm = MultiPoly::constant(characteristic, nvars, 1);
  std::vector<BigInt> excluded;
  for (const FieldMatrix& m : matrices) {
    for (const RatFunc& e : m.entries()) {
      if (e.is_polynomial()) continue;
      const MultiPoly& den = e.den();
      if (characteristic == 0) {
        const BigInt c = den.content();
        content_lcm = integer_lcm(content_lcm, c);
        for (const BigInt& p : prime_factors(c)) excluded.push_back(p);
        part_lcm = poly_lcm(part_lcm, *divide_exact(den, MultiPoly::constant(0, nvars, c)));
      } else {
        part_lcm = poly_lcm(part_lcm, den);
      }
    }
  }
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  PhiData out{part_lcm.scaled(content_lcm), std::move(excluded)};
  if (characteristic == 0 && out.phi.leading_term().coeff < 0) out.phi = -out.phi;
  const RatFunc phi(out.phi);
  for (const FieldMatrix& m : matrices) {
    for (const RatFunc& e : m.entries()) {
      if (!(phi * e).is_polynomial()) {
        throw ArithmeticFault("phi fails to clear denominator of " + e.to_string());
      }
    }
  }
  return out;
}

GroupSpec::GroupSpec(BigInt characteristic, std::vector<std::string> variables,
                     std::vector<Generator> generators)
    : characteristic_(std::move(characteristic)), variables_(std::move(variables)) {
  if (characteristic_ < 0 || (characteristic_ != 0 && !is_prime(characteristic_))) {
    throw InvalidArgument("characteristic must be 0 or a prime, got " +
                          resfin::to_string(characteristic_));
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!valid_label(variables_[i]) || std::isdigit(static_cast<unsigned char>(variables_[i][0]))) {
      throw InvalidArgument("bad variable name '" + variables_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[i] == variables_[j]) {
        throw InvalidArgument("duplicate variable '" + variables_[i] + "'");
      }
    }
  }
  if (generators.empty()) throw InvalidArgument("group needs at least one generator");
  dimension_ = generators.front().matrix.size();
  if (dimension_ == 0) throw InvalidArgument("generator matrices must be nonempty");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Generator& g = generators[i];
    if (!valid_label(g.label)) throw InvalidArgument("bad generator label '" + g.label + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[j].label == g.label) {
        throw InvalidArgument("duplicate generator label '" + g.label + "'");
      }
    }
    if (g.matrix.size() != dimension_) {
      throw InvalidArgument("generator '" + g.label + "' has the wrong size");
    }
    const RatFunc& e0 = g.matrix.at(0, 0);
    if (e0.characteristic() != characteristic_ || e0.nvars() != variables_.size()) {
      throw RingMismatch("generator '" + g.label + "' lives in a different ring");
    }
    if (g.matrix.determinant().is_zero()) {
      throw InvalidArgument("generator '" + g.label + "' is singular");
    }
    generators_.push_back(g);
    generators_.push_back({g.label + "^-1", g.matrix.inverse()});
  }
  std::vector<FieldMatrix> mats;
  for (const Generator& g : generators_) mats.push_back(g.matrix);
  phi_ = compute_phi(characteristic_, variables_.size(), mats);
}

std::size_t GroupSpec::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].label == label) return i;
  }
  throw UnknownLabel(label);
}

FieldMatrix GroupSpec::identity() const {
  return FieldMatrix::identity(characteristic_, variables_.size(), dimension_);
}

std::string Word::to_string(const GroupSpec& spec) const {
  std::string out;
  for (std::size_t l : letters) {
    if (!out.empty()) out += ' ';
    out += spec.generators().at(l).label;
  }
  return out;
}

Word word_from_labels(const GroupSpec& spec, std::span<const std::string> labels) {
  Word w;
  for (const std::string& l : labels) w.letters.push_back(spec.index_of(l));
  return w;
}

FieldMatrix word_evaluate(const GroupSpec& spec, const Word& word) {
  if (word.letters.empty()) return spec.identity();
  FieldMatrix acc = spec.generators().at(word.letters[0]).matrix;
  for (std::size_t i = 1; i < word.letters.size(); ++i) {
    acc = acc * spec.generators().at(word.letters[i]).matrix;
  }
  return acc;
}

PolyMatrix scaled_difference(const GroupSpec& spec, const Word& word) {
  const FieldMatrix gamma = word_evaluate(spec, word);
  const std::size_t m = spec.dimension();
  const MultiPoly scale = spec.phi().pow(word.length());
  const RatFunc scale_r(scale);
  PolyMatrix out{m, {}};
  out.entries.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      MultiPoly e = as_polynomial(scale_r * gamma.at(i, j));
      if (i == j) e = e - scale;
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<BallElement> ball_enumerate(const GroupSpec& spec, std::size_t radius,
                                        std::uint64_t max_elements) {
  std::vector<BallElement> out;
  std::unordered_set<FieldMatrix> seen;
  const FieldMatrix id = spec.identity();
  seen.insert(id);
  std::vector<BallElement> frontier{{id, Word{}}};
  const auto& gens = spec.generators();
  for (std::size_t r = 1; r <= radius && !frontier.empty(); ++r) {
    std::vector<BallElement> next;
    for (const BallElement& cur : frontier) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        FieldMatrix prod = r == 1 ? gens[g].matrix : cur.element * gens[g].matrix;
        if (!seen.insert(prod).second) continue;
        Word w = cur.word;
        w.letters.push_back(g);
        next.push_back({std::move(prod), std::move(w)});
        if (out.size() + next.size() > max_elements) {
          throw BudgetExceeded("ball enumeration exceeded the element budget",
                               out.size() + next.size(), max_elements);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

GrowthBounds growth_degree_bounds(const GroupSpec& spec, const Word& word) {
  const PolyMatrix a = scaled_difference(spec, word);
  GrowthBounds out{0, -1};
  for (const MultiPoly& e : a.entries) {
    if (e.is_zero()) continue;
    const BigInt c = e.max_abs_coefficient();
    if (c > out.max_abs_coefficient) out.max_abs_coefficient = c;
    out.max_entry_degree = std::max(out.max_entry_degree, e.total_degree());
  }
  return out;
}

// Every entry of Phi^L (gamma - I) is a sum of at most M^{L-1} products of L
// scaled generator entries, minus Phi^L on the diagonal; with N bounding the
// l1 norms of Phi and of all entries of Phi*g, the l1 norm is at most
// M^{L-1} N^L + N^L <= (1 + M N)^L.
GrowthConstants growth_constants(const GroupSpec& spec) {
  const RatFunc phi(spec.phi());
  BigInt norm = spec.phi().l1_norm();
  long max_num_degree = 0;
  for (const Generator& g : spec.generators()) {
    for (const RatFunc& e : g.matrix.entries()) {
      max_num_degree = std::max(max_num_degree, e.num().total_degree());
      const BigInt n = as_polynomial(phi * e).l1_norm();
      if (n > norm) norm = n;
    }
  }
  GrowthConstants out;
  out.degree_constant = max_num_degree + spec.phi().total_degree();
  out.alpha = 1 + BigInt(static_cast<unsigned long>(spec.dimension())) * norm;
  return out;
}

}  // namespace resfin
