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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "resfin/error.hpp"
#include "resfin/group.hpp"
#include "resfin/random_poly.hpp"
#include "test_groups.hpp"

namespace resfin {
namespace {

using testing::entry;

FieldMatrix mat(std::vector<std::string> flat, long ch = 0) {
  std::vector<RatFunc> e;
  for (const auto& s : flat) e.push_back(entry(s, ch));
  const std::size_t m = flat.size() == 4 ? 2 : 3;
  return FieldMatrix(m, std::move(e));
}

Word w(const GroupSpec& g, std::vector<std::string> labels) { return word_from_labels(g, labels); }

// All words of exactly `len` letters over the generators, reduced or not.
std::vector<Word> all_words(const GroupSpec& g, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const Word& u : out) {
      for (std::size_t l = 0; l < g.generators().size(); ++l) {
        Word v = u;
        v.letters.push_back(l);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

TEST(RatFunc, CanonicalForm) {
  const RatFunc r = entry("(2*t^2 - 2)/(4*t - 4)");
  EXPECT_EQ(r.num(), entry("t + 1").num());
  EXPECT_EQ(r.den(), entry("2").num());
  const RatFunc s = entry("1/(-t)");
  EXPECT_EQ(s.num(), entry("-1").num());
  EXPECT_EQ(s.den(), entry("t").num());
  const RatFunc z = entry("0/(t^2 + 1)");
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.den().is_one());
  const RatFunc f3 = entry("1/(2*t)", 3);
  EXPECT_EQ(f3.den(), entry("t", 3).num());
  EXPECT_EQ(f3.num(), entry("2", 3).num());
}

TEST(RatFunc, Rendering) {
  const std::vector<std::string> t{"t"};
  EXPECT_EQ(entry("(3*t^2 - 1)/(2*t)").to_string(t), "(3*t^2 - 1)/(2*t)");
  EXPECT_EQ(entry("1/t").to_string(t), "1/t");
  EXPECT_EQ(entry("t/2").to_string(t), "t/2");
}

TEST(RatFunc, CanonicalizationIdempotentAndExact) {
  std::mt19937_64 rng(3);
  RandomPolyShape shape;
  shape.max_vars = 2;
  shape.max_degree = 3;
  shape.max_coefficient = 9;
  for (int k = 0; k < 200; ++k) {
    const BigInt ch = k % 2 == 0 ? 0 : 5;
    const MultiPoly a = random_nonzero_poly(rng, ch, shape);
    MultiPoly b = random_nonzero_poly(rng, ch, shape);
    while (b.nvars() != a.nvars()) b = random_nonzero_poly(rng, ch, shape);
    const MultiPoly c = random_nonzero_poly(rng, ch, shape);
    if (c.nvars() != a.nvars()) continue;
    const RatFunc r(a * c, b * c);
    const RatFunc again(r.num(), r.den());
    EXPECT_EQ(r, again);
    EXPECT_TRUE(equal_exact(r, RatFunc(a, b)));
    EXPECT_EQ(r, RatFunc(a, b));  // full gcd at this degree
    EXPECT_TRUE(equal_exact(r * r.inverse(), RatFunc::constant(ch, a.nvars(), 1)));
    EXPECT_TRUE((r - r).is_zero());
  }
}

TEST(FieldMatrix, InverseDeterminant) {
  const FieldMatrix a = mat({"t", "1", "0", "1"});
  EXPECT_EQ(a.determinant(), entry("t"));
  const FieldMatrix ai = a.inverse();
  EXPECT_TRUE((a * ai).is_identity());
  EXPECT_EQ(ai.at(0, 0), entry("1/t"));
  EXPECT_EQ(ai.at(0, 1), entry("-1/t"));
  EXPECT_THROW(mat({"t", "t", "1", "1"}).inverse(), InvalidArgument);
  const FieldMatrix b = mat({"1", "t", "0", "2", "1/t", "t^2", "1", "0", "3"});
  EXPECT_TRUE((b * b.inverse()).is_identity());
  EXPECT_EQ((b * b).determinant(), b.determinant() * b.determinant());
}

TEST(ComputePhi, Examples) {
  const GroupSpec s = testing::sanov();
  EXPECT_TRUE(s.phi().is_one());
  EXPECT_TRUE(s.excluded_primes().empty());

  const GroupSpec d = testing::diagonal();
  EXPECT_EQ(d.phi(), entry("t").num());
  EXPECT_TRUE(d.excluded_primes().empty());

  const GroupSpec half = testing::make_group(0, {"t"}, {{"a", {"1", "t/2", "0", "1"}}});
  EXPECT_EQ(half.phi().content(), 2);
  EXPECT_EQ(half.excluded_primes(), std::vector<BigInt>{2});

  const GroupSpec c3 = testing::char3();
  EXPECT_EQ(c3.phi(), entry("t", 3).num());
}

TEST(ComputePhi, ClearsEveryGeneratorAndUsesLcm) {
  const GroupSpec g = testing::make_group(
      0, {"t"}, {{"a", {"1/(t^2 - 1)", "0", "0", "t^2 - 1"}}, {"b", {"1", "1/(6*t + 6)", "0", "1"}}});
  // lcm of t^2 - 1 and t + 1 is t^2 - 1, content lcm is 6.
  EXPECT_EQ(g.phi(), entry("6*t^2 - 6").num());
  EXPECT_EQ(g.excluded_primes(), (std::vector<BigInt>{2, 3}));
  const RatFunc phi(g.phi());
  for (const Generator& gen : g.generators()) {
    for (const RatFunc& e : gen.matrix.entries()) EXPECT_TRUE((phi * e).is_polynomial());
  }
}

TEST(GroupSpec, InverseClosureAndValidation) {
  const GroupSpec s = testing::sanov();
  ASSERT_EQ(s.generators().size(), 4u);
  EXPECT_EQ(s.generators()[1].label, "a^-1");
  EXPECT_EQ(s.generators()[1].matrix, mat({"1", "-t", "0", "1"}));
  EXPECT_EQ(s.inverse_of(2), 3u);
  EXPECT_THROW(s.index_of("c"), UnknownLabel);
  EXPECT_THROW(testing::make_group(0, {"t"}, {{"a", {"t", "t", "1", "1"}}}), InvalidArgument);
  EXPECT_THROW(testing::make_group(4, {"t"}, {{"a", {"1", "t", "0", "1"}}}), InvalidArgument);
  EXPECT_THROW(testing::make_group(0, {"t"}, {{"a", {"1", "0", "0", "1"}}, {"a", {"1", "0", "0", "1"}}}),
               InvalidArgument);
}

TEST(WordEvaluate, Examples) {
  const GroupSpec s = testing::sanov();
  EXPECT_TRUE(word_evaluate(s, w(s, {"a", "a^-1"})).is_identity());
  EXPECT_EQ(word_evaluate(s, w(s, {"a", "b"})), mat({"1 + t^2", "t", "t", "1"}));
  EXPECT_EQ(word_evaluate(s, w(s, {"a"})), s.generators()[0].matrix);
}

TEST(WordEvaluate, AppendingALetterMultipliesOnTheRight) {
  for (const GroupSpec& g : {testing::sanov(), testing::char3(), testing::diagonal()}) {
    for (const Word& u : all_words(g, 3)) {
      for (std::size_t l = 0; l < g.generators().size(); ++l) {
        Word v = u;
        v.letters.push_back(l);
        EXPECT_EQ(word_evaluate(g, v), word_evaluate(g, u) * g.generators()[l].matrix);
      }
    }
  }
}

TEST(ScaledDifference, Examples) {
  const GroupSpec s = testing::sanov();
  EXPECT_TRUE(scaled_difference(s, Word{}).is_zero());
  const PolyMatrix ab = scaled_difference(s, w(s, {"a", "b"}));
  EXPECT_EQ(ab.at(0, 0), entry("t^2").num());
  EXPECT_EQ(ab.at(0, 1), entry("t").num());
  EXPECT_EQ(ab.at(1, 1), entry("0").num());

  const GroupSpec d = testing::diagonal();
  const PolyMatrix a = scaled_difference(d, w(d, {"a"}));
  EXPECT_EQ(a.at(0, 0), entry("t^2 - t").num());
  EXPECT_EQ(a.at(1, 1), entry("1 - t").num());
  EXPECT_TRUE(a.at(0, 1).is_zero());
}

TEST(ScaledDifference, EntriesArePolynomialMatchingDefinition) {
  for (const GroupSpec& g : {testing::char3(), testing::diagonal()}) {
    for (const Word& u : all_words(g, 4)) {
      const PolyMatrix a = scaled_difference(g, u);
      const FieldMatrix gamma = word_evaluate(g, u);
      const RatFunc scale(g.phi().pow(u.length()));
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          RatFunc expect = scale * gamma.at(i, j);
          if (i == j) expect = expect - scale;
          EXPECT_TRUE(expect.is_polynomial());
          EXPECT_EQ(RatFunc(a.at(i, j)), expect);
        }
      }
    }
  }
}

TEST(BallEnumerate, SanovSizes) {
  const GroupSpec s = testing::sanov();
  EXPECT_EQ(ball_enumerate(s, 1, 1000).size(), 4u);
  const auto b2 = ball_enumerate(s, 2, 1000);
  EXPECT_EQ(b2.size(), 16u);
  // Free group of rank 2: |B(n)| - 1 = 2(3^n - 1).
  EXPECT_EQ(ball_enumerate(s, 5, 100000).size(), 2u * (243 - 1));
}

TEST(BallEnumerate, CyclicSizesAndWords) {
  const GroupSpec c = testing::cyclic();
  const auto b = ball_enumerate(c, 3, 100);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b[0].word.to_string(c), "a");
  EXPECT_EQ(b[1].word.to_string(c), "a^-1");
  EXPECT_EQ(b[5].word.to_string(c), "a^-1 a^-1 a^-1");
}

TEST(BallEnumerate, MatchesBruteForceDedup) {
  for (const GroupSpec& g : {testing::sanov(), testing::char3(), testing::diagonal()}) {
    // Oracle: evaluate every word of length <= 4 and keep the shortest.
    std::map<std::string, std::size_t> shortest;
    for (std::size_t len = 0; len <= 4; ++len) {
      for (const Word& u : all_words(g, len)) {
        shortest.emplace(word_evaluate(g, u).to_string(), len);
      }
    }
    const auto ball = ball_enumerate(g, 4, 100000);
    const std::string id = g.identity().to_string();
    EXPECT_EQ(ball.size() + 1, shortest.size());
    std::set<std::string> seen;
    for (const BallElement& el : ball) {
      const std::string key = el.element.to_string();
      EXPECT_NE(key, id);
      EXPECT_TRUE(seen.insert(key).second);
      EXPECT_EQ(shortest.at(key), el.word.length());
      EXPECT_EQ(word_evaluate(g, el.word), el.element);
    }
  }
}

TEST(BallEnumerate, SizesNondecreasingAndAtLeastRadius) {
  for (const GroupSpec& g : {testing::sanov(), testing::char3(), testing::cyclic(), testing::diagonal()}) {
    std::size_t prev = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      const std::size_t size = ball_enumerate(g, n, 100000).size() + 1;
      EXPECT_GE(size, prev);
      EXPECT_GE(size, n);
      prev = size;
    }
  }
}

TEST(BallEnumerate, Budget) {
  try {
    ball_enumerate(testing::sanov(), 4, 50);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 50u);
    EXPECT_GT(e.reached(), 50u);
  }
}

TEST(GrowthBounds, Examples) {
  const GroupSpec s = testing::sanov();
  const GrowthBounds id = growth_degree_bounds(s, Word{});
  EXPECT_EQ(id.max_abs_coefficient, 0);
  EXPECT_EQ(id.max_entry_degree, -1);
  EXPECT_LE(growth_degree_bounds(s, w(s, {"a", "b"})).max_entry_degree, 2);
}

TEST(GrowthBounds, LinearDegreeExponentialCoefficients) {
  for (const GroupSpec& g : {testing::sanov(), testing::diagonal(), testing::char3()}) {
    const GrowthConstants k = growth_constants(g);
    for (const BallElement& el : ball_enumerate(g, 5, 100000)) {
      const GrowthBounds b = growth_degree_bounds(g, el.word);
      const std::size_t len = el.word.length();
      EXPECT_LE(b.max_entry_degree, k.degree_constant * static_cast<long>(len));
      if (g.characteristic() == 0) EXPECT_LE(b.max_abs_coefficient, pow(k.alpha, len));
    }
  }
}

}  // namespace
}  // namespace resfin
