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

#include <cmath>
#include <random>
#include <set>

#include "resfin/error.hpp"
#include "resfin/number_theory.hpp"
#include "resfin/random_poly.hpp"
#include "resfin/witness.hpp"
#include "test_groups.hpp"

namespace resfin {
namespace {

using testing::polynomial;

MultiPoly px(const std::string& s, long ch = 0) { return polynomial(s, ch, {"x1", "x2"}); }
MultiPoly p1(const std::string& s, long ch = 0) { return polynomial(s, ch, {"x1"}); }

UniPoly uni(long ch, std::vector<long> coeffs) {
  std::vector<BigInt> c;
  for (long x : coeffs) c.emplace_back(x);
  return UniPoly(BigInt(ch), std::move(c));
}

// hom(f) computed straight from the residues, without GaloisField.
ExtFieldElem eval_ext(const FieldHom& hom, const MultiPoly& f) {
  const ExtField ext(hom.p, hom.modulus);
  ExtFieldElem acc = ext.zero();
  for (const Term& t : f.terms()) {
    ExtFieldElem m = ext.from_integer(t.coeff);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      m = ext.mul(m, ext.pow(hom.images[i], BigInt(t.exponents[i])));
    }
    acc = ext.add(acc, m);
  }
  return acc;
}

bool kills(const FieldHom& hom, const MultiPoly& f) { return ExtField(hom.p, hom.modulus).is_zero(eval_ext(hom, f)); }

// Brute-force order of the group generated by 2x2 matrices over F_p.
std::size_t brute_order(long p, std::vector<std::array<long, 4>> gens) {
  std::set<std::array<long, 4>> seen{{1, 0, 0, 1}};
  std::vector<std::array<long, 4>> frontier{{1, 0, 0, 1}};
  while (!frontier.empty()) {
    std::vector<std::array<long, 4>> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        const std::array<long, 4> c{(a[0] * g[0] + a[1] * g[2]) % p, (a[0] * g[1] + a[1] * g[3]) % p,
                                    (a[2] * g[0] + a[3] * g[2]) % p, (a[2] * g[1] + a[3] * g[3]) % p};
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

TEST(LemmaA, Examples) {
  const FieldHom h1 = lemma_a_witness(px("x1 - x2"));
  EXPECT_EQ(h1.p, 2);
  EXPECT_EQ(h1.provenance.exponents, (std::vector<std::uint64_t>{1, 0}));
  EXPECT_EQ(h1.provenance.point, 2);
  EXPECT_EQ(h1.provenance.value, 1);
  EXPECT_EQ(h1.images[0].coeffs[0], 0);
  EXPECT_EQ(h1.images[1].coeffs[0], 1);
  EXPECT_FALSE(kills(h1, px("x1 - x2")));

  const FieldHom h2 = lemma_a_witness(p1("7"));
  EXPECT_EQ(h2.provenance.point, 1);
  EXPECT_EQ(h2.provenance.value, 7);
  EXPECT_EQ(h2.p, 2);

  const BigInt two = 2;
  const FieldHom h3 = lemma_a_witness(p1("2*x1"), std::span(&two, 1));
  EXPECT_EQ(h3.p, 3);
  EXPECT_EQ(h3.provenance.value, 2);
  EXPECT_FALSE(kills(h3, p1("2*x1")));

  EXPECT_THROW(lemma_a_witness(p1("x1", 3)), InvalidArgument);
  EXPECT_THROW(lemma_a_witness(MultiPoly(0, 1)), InvalidArgument);
}

TEST(LemmaA, RandomNonvanishingAndIntegerBound) {
  std::mt19937_64 rng(41);
  RandomPolyShape shape;
  for (int k = 0; k < 300; ++k) {
    const MultiPoly f = random_nonzero_poly(rng, 0, shape);
    const FieldHom h = lemma_a_witness(f);
    EXPECT_FALSE(kills(h, f)) << f.to_string();
    const auto& pv = h.provenance;
    const long r = pv.substituted_degree;
    // |i| <= (r + 1) l^r A, and l <= r + 1.
    EXPECT_LE(pv.point, BigInt(r + 1));
    EXPECT_LE(abs(BigInt(pv.value)), BigInt(r + 1) * pow(pv.point, r) * pv.substituted_max_coefficient);
    EXPECT_NE(pv.value % h.p, 0);
  }
}

TEST(LemmaB, Examples) {
  // f = x1 over F_2: the exponent choice gives g = 1, so the first monic
  // irreducible x is a non-divisor; the quotient is F_2 with x1 -> 1.
  const FieldHom b1 = lemma_b_witness(p1("x1", 2));
  EXPECT_EQ(b1.field_size(), 2);
  EXPECT_EQ(b1.degree(), 1u);
  EXPECT_EQ(ExtField(2, b1.modulus).to_poly(b1.images[0]), uni(2, {1}));

  // x1^2 + x1 = x1 (x1 + 1) vanishes on all of F_2, forcing F_4.
  const FieldHom b2 = lemma_b_witness(p1("x1^2 + x1", 2));
  EXPECT_EQ(b2.modulus, uni(2, {1, 1, 1}));
  EXPECT_EQ(b2.field_size(), 4);
  const ExtField f4(2, b2.modulus);
  EXPECT_EQ(eval_ext(b2, p1("x1^2 + x1", 2)), f4.one());

  const FieldHom b3 = lemma_b_witness(p1("2", 3));
  EXPECT_EQ(b3.field_size(), 3);
  EXPECT_EQ(eval_ext(b3, p1("2", 3)).coeffs[0], 2);

  EXPECT_THROW(lemma_b_witness(p1("x1", 0)), InvalidArgument);
}

TEST(LemmaB, RandomNonvanishingAndDegreeBound) {
  std::mt19937_64 rng(43);
  RandomPolyShape shape;
  for (int k = 0; k < 300; ++k) {
    const BigInt ch = k % 2 == 0 ? 2 : 3;
    const MultiPoly f = random_nonzero_poly(rng, ch, shape);
    const FieldHom h = lemma_b_witness(f);
    EXPECT_TRUE(is_irreducible(h.modulus));
    EXPECT_FALSE(kills(h, f)) << f.to_string();
    const std::uint64_t bound = h.provenance.degree_bound;
    EXPECT_LE(h.degree(), bound);
    // The counting argument: bound * I_bound(p) exceeds deg g.
    EXPECT_GT(BigInt(bound) * gauss_irreducible_count(ch, bound), h.provenance.substituted_degree);
  }
}

TEST(Separate, SanovExample) {
  const GroupSpec s = testing::sanov();
  const WitnessRecord r = separate(s, word_from_labels(s, std::vector<std::string>{"a"}));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.entry_row, 0u);
  EXPECT_EQ(r.entry_col, 1u);
  EXPECT_EQ(r.target, polynomial("t", 0, {"t"}));
  EXPECT_EQ(r.hom.p, 2);
  EXPECT_EQ(r.field_size, 2);
  EXPECT_EQ(r.hom.images[0].coeffs[0], 1);
  EXPECT_EQ(r.gl_bound, 16);
  EXPECT_TRUE(verify_witness(s, r).ok);
}

TEST(Separate, IdentityWord) {
  const GroupSpec s = testing::sanov();
  EXPECT_THROW(separate(s, word_from_labels(s, std::vector<std::string>{"a", "a^-1"})), IdentityWord);
  EXPECT_THROW(separate(s, Word{}), IdentityWord);
}

TEST(Separate, DiagonalExample) {
  const GroupSpec d = testing::diagonal();
  const WitnessRecord r = separate(d, word_from_labels(d, std::vector<std::string>{"a"}));
  EXPECT_TRUE(r.verified);
  const BigInt t = r.hom.images[0].coeffs[0];
  EXPECT_NE(t, 0);
  EXPECT_NE(t, 1);
  EXPECT_FALSE(kills(r.hom, d.phi()));
  EXPECT_TRUE(verify_witness(d, r).ok);
}

TEST(Separate, SoundOnAllShortWords) {
  for (const GroupSpec& g : {testing::sanov(), testing::char3(), testing::diagonal(), testing::cyclic()}) {
    for (const BallElement& el : ball_enumerate(g, 5, 100000)) {
      const WitnessRecord r = separate(g, el.word);
      ASSERT_TRUE(r.verified) << el.word.to_string(g);
      const VerifyResult v = verify_witness(g, r);
      EXPECT_TRUE(v.ok) << el.word.to_string(g) << ": " << v.reason;
      EXPECT_EQ(r.gl_bound, pow(r.field_size, g.dimension() * g.dimension()));
      if (r.hom.path != HomPath::kPrimeField) EXPECT_FALSE(kills(r.hom, g.phi()));
      // The target is Phi times a nonzero entry of minimal total degree.
      const PolyMatrix a = scaled_difference(g, el.word);
      long best = -1;
      for (const MultiPoly& e : a.entries) {
        if (!e.is_zero() && (best < 0 || e.total_degree() < best)) best = e.total_degree();
      }
      EXPECT_EQ(a.at(r.entry_row, r.entry_col).total_degree(), best);
      EXPECT_EQ(r.target, g.phi() * a.at(r.entry_row, r.entry_col));
    }
  }
}

TEST(Separate, PrimeFieldShortCircuit) {
  const GroupSpec g = testing::make_group(5, {}, {{"a", {"1", "1", "0", "1"}}, {"b", {"2", "0", "0", "3"}}});
  const WitnessRecord r = separate(g, word_from_labels(g, std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r.hom.path, HomPath::kPrimeField);
  EXPECT_EQ(r.hom.provenance.method, "identity");
  EXPECT_EQ(r.field_size, 5);
  EXPECT_TRUE(verify_witness(g, r).ok);
}

TEST(Verify, TamperedRecordsFail) {
  const GroupSpec s = testing::sanov();
  const WitnessRecord good = separate(s, word_from_labels(s, std::vector<std::string>{"a", "b"}));
  ASSERT_TRUE(verify_witness(s, good).ok);

  WitnessRecord bad = good;
  bad.field_size += 1;
  EXPECT_FALSE(verify_witness(s, bad).ok);

  bad = good;
  bad.gl_bound += 1;
  EXPECT_FALSE(verify_witness(s, bad).ok);

  bad = good;
  bad.word = {"a", "c"};
  EXPECT_FALSE(verify_witness(s, bad).ok);

  bad = good;
  bad.word_length = 3;
  EXPECT_FALSE(verify_witness(s, bad).ok);

  bad = good;
  bad.hom.modulus = uni(2, {1, 0, 1});
  bad.hom.images = {{{1, 0}}};
  bad.field_size = 4;
  bad.gl_bound = 256;
  EXPECT_FALSE(verify_witness(s, bad).ok);

  // t -> 0 kills every entry of a b - I over F_2.
  bad = good;
  bad.hom.images[0].coeffs[0] = 0;
  const VerifyResult v = verify_witness(s, bad);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.reason, "word trivial in image");
}

TEST(Verify, DenominatorKilled) {
  const GroupSpec d = testing::diagonal();
  WitnessRecord r = separate(d, word_from_labels(d, std::vector<std::string>{"a"}));
  r.hom.images[0].coeffs[0] = 0;
  const VerifyResult v = verify_witness(d, r);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.reason, "denominator-killed");
}

TEST(ImageOrder, Examples) {
  const GroupSpec s = testing::sanov();
  const WitnessRecord r = separate(s, word_from_labels(s, std::vector<std::string>{"a"}));
  const ImageOrder o = image_order(s, r.hom, 1u << 20);
  EXPECT_TRUE(o.exact);
  EXPECT_EQ(o.order, 6);

  const GroupSpec c = testing::cyclic();
  FieldHom h5;
  h5.path = HomPath::kCharZero;
  h5.p = 5;
  h5.modulus = uni(5, {0, 1});
  EXPECT_EQ(image_order(c, h5, 1000).order, 5);

  // Sanov with t -> 0: both generators map to the identity.
  FieldHom h0 = r.hom;
  h0.images[0].coeffs[0] = 0;
  EXPECT_EQ(image_order(s, h0, 1000).order, 1);
}

TEST(ImageOrder, MatchesBruteForceClosure) {
  const GroupSpec s = testing::sanov();
  for (long p : {2, 3, 5, 7}) {
    for (long t = 0; t < p; ++t) {
      FieldHom h;
      h.path = HomPath::kCharZero;
      h.p = p;
      h.modulus = uni(p, {0, 1});
      h.images = {{{t}}};
      const ImageOrder o = image_order(s, h, 1u << 20);
      EXPECT_TRUE(o.exact);
      EXPECT_EQ(o.order, brute_order(p, {{1, t, 0, 1}, {1, 0, t, 1}})) << p << " " << t;
    }
  }
}

TEST(ImageOrder, OverBudgetReturnsBound) {
  const GroupSpec s = testing::sanov();
  FieldHom h;
  h.path = HomPath::kCharZero;
  h.p = 7;
  h.modulus = uni(7, {0, 1});
  h.images = {{{1}}};
  const ImageOrder o = image_order(s, h, 10);
  EXPECT_FALSE(o.exact);
  EXPECT_EQ(o.order, pow(BigInt(7), 4));
}

TEST(ChainBound, WitnessWithinExplicitBound) {
  for (const GroupSpec& g : {testing::sanov(), testing::char3(), testing::diagonal()}) {
    for (const BallElement& el : ball_enumerate(g, 5, 100000)) {
      const WitnessRecord r = separate(g, el.word);
      EXPECT_LE(r.gl_bound, chain_gl_bound(r.hom, g.excluded_primes(), g.dimension()))
          << el.word.to_string(g);
    }
  }
}

// Slope of log(max gl_bound) against log(radius) in characteristic p, with
// C = 1.0 frozen after fitting 0.44 (radius <= 6) and 0.50 (radius <= 8) on
// the characteristic-3 test group.
TEST(ChainBound, CharacteristicPSlope) {
  constexpr double kFrozenC = 1.0;
  const GroupSpec g = testing::char3();
  std::vector<BigInt> best(9, BigInt(0));
  for (const BallElement& el : ball_enumerate(g, 8, 100000)) {
    const WitnessRecord r = separate(g, el.word);
    for (std::size_t n = el.word.length(); n <= 8; ++n) best[n] = std::max(best[n], r.gl_bound);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const double x = std::log(static_cast<double>(n)), y = std::log(best[n].get_d());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (8 * sxy - sx * sy) / (8 * sxx - sx * sx);
  const double m2 = static_cast<double>(g.dimension() * g.dimension());
  EXPECT_LE(slope, kFrozenC * m2 * std::log(3.0) + 0.5);
}

TEST(HomPath, Names) {
  for (HomPath p : {HomPath::kCharZero, HomPath::kCharP, HomPath::kPrimeField}) {
    EXPECT_EQ(hom_path_from_string(to_string(p)), p);
  }
  EXPECT_THROW(hom_path_from_string("nope"), InvalidArgument);
}

}  // namespace
}  // namespace resfin
