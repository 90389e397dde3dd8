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

#include "resfin/witness.hpp"

#include <algorithm>
#include <unordered_set>

#include "resfin/error.hpp"

namespace resfin {

namespace {

struct GfMatrixHash {
  std::size_t operator()(const GfMatrix& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (GaloisField::Elem e : m.entries) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }
};

UniPoly linear_modulus(const BigInt& p) { return UniPoly(p, {BigInt(0), BigInt(1)}); }

GfMatrix image_of_word(const GaloisField& field, std::span<const GfMatrix> images,
                       const Word& word, std::size_t dimension) {
  GfMatrix acc = gf_identity(dimension);
  for (std::size_t l : word.letters) acc = gf_multiply(field, acc, images[l]);
  return acc;
}

void check_nonzero_image(const FieldHom& hom, const MultiPoly& f) {
  const GaloisField field = hom.field();
  const auto point = hom.image_codes(field);
  if (f.evaluate(field, point) == 0) {
    throw ArithmeticFault("constructed homomorphism kills its target polynomial");
  }
}

}  // namespace

std::string to_string(HomPath path) {
  switch (path) {
    case HomPath::kCharZero: return "char0";
    case HomPath::kCharP: return "charp";
    case HomPath::kPrimeField: return "prime_field";
  }
  return "?";
}

HomPath hom_path_from_string(const std::string& s) {
  if (s == "char0") return HomPath::kCharZero;
  if (s == "charp") return HomPath::kCharP;
  if (s == "prime_field") return HomPath::kPrimeField;
  throw InvalidArgument("unknown homomorphism path '" + s + "'");
}

GaloisField FieldHom::field() const { return GaloisField(ExtField(p, modulus)); }

std::vector<GaloisField::Elem> FieldHom::image_codes(const GaloisField& field) const {
  std::vector<GaloisField::Elem> out;
  out.reserve(images.size());
  for (const ExtFieldElem& e : images) out.push_back(field.from_ext(e));
  return out;
}

std::optional<GaloisField::Elem> apply_hom(const GaloisField& field,
                                           std::span<const GaloisField::Elem> point,
                                           const RatFunc& r) {
  const GaloisField::Elem den = r.den().evaluate(field, point);
  if (den == 0) return std::nullopt;
  const GaloisField::Elem num = r.num().evaluate(field, point);
  return den == 1 ? num : field.mul(num, field.inv(den));
}

std::optional<GfMatrix> apply_hom(const GaloisField& field,
                                  std::span<const GaloisField::Elem> point,
                                  const FieldMatrix& m) {
  GfMatrix out{m.size(), {}};
  out.entries.reserve(m.entries().size());
  for (const RatFunc& e : m.entries()) {
    auto v = apply_hom(field, point, e);
    if (!v) return std::nullopt;
    out.entries.push_back(*v);
  }
  return out;
}

FieldHom lemma_a_witness(const MultiPoly& f, std::span<const BigInt> excluded_primes) {
  if (f.characteristic() != 0) throw InvalidArgument("lemma_a_witness needs characteristic 0");
  if (f.is_zero()) throw InvalidArgument("lemma_a_witness needs a nonzero polynomial");
  const ExponentChoice choice = lemma_z_exponents(f);
  const UniPoly g = substitute_powers(f, choice.exponents);
  BigInt ell = 1;
  while (g.evaluate(ell) == 0) ++ell;
  const BigInt i = g.evaluate(ell);
  const BigInt p = smallest_prime_not_dividing(i, excluded_primes);

  FieldHom hom;
  hom.path = HomPath::kCharZero;
  hom.p = p;
  hom.modulus = linear_modulus(p);
  for (std::uint64_t n : choice.exponents) {
    BigInt v;
    const BigInt e(static_cast<unsigned long>(n));
    mpz_powm(v.get_mpz_t(), ell.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    hom.images.push_back({{v}});
  }
  hom.provenance.exponents = choice.exponents;
  hom.provenance.method = to_string(choice.method);
  hom.provenance.point = ell;
  hom.provenance.substituted_degree = g.degree();
  hom.provenance.substituted_max_coefficient = g.max_abs_coefficient();
  hom.provenance.value = i;
  check_nonzero_image(hom, f);
  return hom;
}

FieldHom lemma_b_witness(const MultiPoly& f) {
  const BigInt& p = f.characteristic();
  if (p == 0) throw InvalidArgument("lemma_b_witness needs positive characteristic");
  if (f.is_zero()) throw InvalidArgument("lemma_b_witness needs a nonzero polynomial");
  const ExponentChoice choice = lemma_z_exponents(f);
  const UniPoly g = substitute_powers(f, choice.exponents);
  const BigInt deg_g(g.degree());

  std::uint64_t bound = 1;
  while (bound * gauss_irreducible_count(p, bound) <= deg_g) ++bound;

  UniPoly h;
  for (std::uint64_t ell = 1; ell <= bound && h.is_zero(); ++ell) {
    const BigInt count = resfin::pow(p, ell);
    for (BigInt idx = 0; idx < count; ++idx) {
      UniPoly cand = monic_from_index(p, ell, idx);
      if (is_irreducible(cand) && !(g % cand).is_zero()) {
        h = std::move(cand);
        break;
      }
    }
  }
  if (h.is_zero()) throw ArithmeticFault("no irreducible non-divisor within the counting bound");

  FieldHom hom;
  hom.path = HomPath::kCharP;
  hom.p = p;
  hom.modulus = h;
  const ExtField ext(p, h);
  const UniPoly x = UniPoly::monomial(p, 1, 1);
  for (std::uint64_t n : choice.exponents) {
    hom.images.push_back(ext.from_poly(powmod(x, BigInt(static_cast<unsigned long>(n)), h)));
  }
  hom.provenance.exponents = choice.exponents;
  hom.provenance.method = to_string(choice.method);
  hom.provenance.point = 0;
  hom.provenance.substituted_degree = g.degree();
  hom.provenance.substituted_max_coefficient = g.max_abs_coefficient();
  hom.provenance.value = 0;
  hom.provenance.degree_bound = bound;
  check_nonzero_image(hom, f);
  return hom;
}

std::optional<std::vector<GfMatrix>> generator_images(
    const GroupSpec& spec, const GaloisField& field,
    std::span<const GaloisField::Elem> point) {
  std::vector<GfMatrix> out;
  for (const Generator& g : spec.generators()) {
    auto m = apply_hom(field, point, g.matrix);
    if (!m || gf_determinant(field, *m) == 0) return std::nullopt;
    out.push_back(std::move(*m));
  }
  return out;
}

ImageOrder closure_order(const GaloisField& field, std::span<const GfMatrix> images,
                         std::uint64_t budget) {
  const std::size_t m = images.empty() ? 0 : images.front().size;
  std::unordered_set<GfMatrix, GfMatrixHash> seen;
  std::vector<GfMatrix> queue{gf_identity(m)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const GfMatrix& g : images) {
      GfMatrix prod = gf_multiply(field, queue[head], g);
      if (seen.insert(prod).second) {
        if (seen.size() > budget) {
          return {resfin::pow(BigInt(static_cast<unsigned long>(field.order())), m * m), false};
        }
        queue.push_back(std::move(prod));
      }
    }
  }
  return {BigInt(static_cast<unsigned long>(seen.size())), true};
}

ImageOrder image_order(const GroupSpec& spec, const FieldHom& hom, std::uint64_t budget) {
  const GaloisField field = hom.field();
  const auto point = hom.image_codes(field);
  auto images = generator_images(spec, field, point);
  if (!images) throw InvalidArgument("homomorphism does not extend to the group");
  return closure_order(field, *images, budget);
}

WitnessRecord separate(const GroupSpec& spec, const Word& word,
                       const SeparateOptions& options) {
  const FieldMatrix gamma = word_evaluate(spec, word);
  if (gamma.is_identity()) throw IdentityWord(word.to_string(spec));
  const std::size_t m = spec.dimension();

  WitnessRecord rec;
  for (std::size_t l : word.letters) rec.word.push_back(spec.generators()[l].label);
  rec.word_length = word.length();

  if (spec.characteristic() != 0 && spec.nvars() == 0) {
    // Constant matrices over F_p: the group is already finite.
    for (std::size_t k = 0; k < m * m && rec.target.is_zero(); ++k) {
      RatFunc e = gamma.entries()[k];
      if (k / m == k % m) e = e - RatFunc::constant(spec.characteristic(), 0, 1);
      if (!e.is_zero()) {
        rec.entry_row = k / m;
        rec.entry_col = k % m;
        rec.target = e.num();
      }
    }
    rec.hom.path = HomPath::kPrimeField;
    rec.hom.p = spec.characteristic();
    rec.hom.modulus = linear_modulus(spec.characteristic());
    rec.hom.provenance.method = "identity";
  } else {
    const PolyMatrix a = scaled_difference(spec, word);
    long best = -1;
    for (std::size_t k = 0; k < m * m; ++k) {
      const MultiPoly& e = a.entries[k];
      if (e.is_zero()) continue;
      if (best < 0 || e.total_degree() < a.entries[best].total_degree()) {
        best = static_cast<long>(k);
      }
    }
    if (best < 0) throw ArithmeticFault("nonidentity word has zero scaled difference");
    rec.entry_row = static_cast<std::size_t>(best) / m;
    rec.entry_col = static_cast<std::size_t>(best) % m;
    rec.target = spec.phi() * a.entries[best];
    rec.hom = spec.characteristic() == 0
                  ? lemma_a_witness(rec.target, spec.excluded_primes())
                  : lemma_b_witness(rec.target);
  }

  const GaloisField field = rec.hom.field();
  const auto point = rec.hom.image_codes(field);
  rec.field_size = rec.hom.field_size();
  rec.gl_bound = resfin::pow(rec.field_size, m * m);
  auto images = generator_images(spec, field, point);
  if (!images) throw ArithmeticFault("witness homomorphism does not extend to the group");
  const bool phi_ok = spec.phi().evaluate(field, point) != 0;
  rec.verified = phi_ok && !gf_is_identity(image_of_word(field, *images, word, m));
  if (options.compute_image_order) {
    rec.image_order = closure_order(field, *images, options.closure_budget);
  }
  return rec;
}

VerifyResult verify_witness(const GroupSpec& spec, const WitnessRecord& rec) {
  auto fail = [](std::string reason) { return VerifyResult{false, std::move(reason)}; };
  const FieldHom& hom = rec.hom;
  if (!rec.verified) return fail("record not marked verified");
  if (hom.p <= 1 || !is_prime(hom.p)) return fail("target characteristic is not prime");
  if (spec.characteristic() == 0) {
    if (hom.path != HomPath::kCharZero) return fail("path does not match characteristic");
  } else if (hom.p != spec.characteristic() || hom.path == HomPath::kCharZero) {
    return fail("path does not match characteristic");
  }
  if (hom.modulus.characteristic() != hom.p || hom.modulus.degree() < 1 ||
      hom.modulus.leading() != 1 || !is_irreducible(hom.modulus)) {
    return fail("modulus is not monic irreducible");
  }
  if (hom.path != HomPath::kCharP && hom.modulus.degree() != 1) {
    return fail("prime-field path with extension modulus");
  }
  if (hom.images.size() != spec.nvars()) return fail("variable image count mismatch");
  for (const ExtFieldElem& e : hom.images) {
    if (e.coeffs.size() != hom.degree()) return fail("malformed variable image");
    for (const BigInt& c : e.coeffs) {
      if (c < 0 || c >= hom.p) return fail("malformed variable image");
    }
  }
  if (rec.field_size != hom.field_size()) return fail("field_size mismatch");
  const std::size_t m = spec.dimension();
  if (rec.gl_bound != resfin::pow(rec.field_size, m * m)) return fail("gl_bound mismatch");
  if (rec.field_size >= (BigInt(1) << 31)) return fail("field too large to check");

  Word word;
  try {
    word = word_from_labels(spec, rec.word);
  } catch (const UnknownLabel&) {
    return fail("unknown label");
  }
  if (word.length() != rec.word_length) return fail("word_length mismatch");

  const GaloisField field = hom.field();
  const auto point = hom.image_codes(field);
  if (spec.phi().evaluate(field, point) == 0) return fail("denominator-killed");
  std::vector<GfMatrix> images;
  for (const Generator& g : spec.generators()) {
    auto img = apply_hom(field, point, g.matrix);
    if (!img) return fail("denominator-killed");
    if (gf_determinant(field, *img) == 0) return fail("singular image");
    images.push_back(std::move(*img));
  }
  const GfMatrix rho = image_of_word(field, images, word, m);
  if (gf_is_identity(rho)) return fail("word trivial in image");

  // The image computed letter by letter must agree with reducing the exact
  // product, and with the product of the reductions of the two halves.
  const std::size_t half = word.length() / 2;
  const Word u{{word.letters.begin(), word.letters.begin() + static_cast<long>(half)}};
  const Word v{{word.letters.begin() + static_cast<long>(half), word.letters.end()}};
  const FieldMatrix eu = word_evaluate(spec, u), ev = word_evaluate(spec, v);
  auto ru = apply_hom(field, point, eu), rv = apply_hom(field, point, ev);
  auto ruv = apply_hom(field, point, eu * ev);
  if (!ru || !rv || !ruv) return fail("denominator-killed");
  if (!(gf_multiply(field, *ru, *rv) == *ruv) || !(*ruv == rho)) {
    return fail("non-multiplicative");
  }
  if (rec.image_order && rec.image_order->order > rec.gl_bound) {
    return fail("image_order exceeds gl_bound");
  }
  return {true, ""};
}

BigInt chain_gl_bound(const FieldHom& hom, std::span<const BigInt> excluded_primes,
                      std::size_t dimension) {
  const std::uint64_t m2 = dimension * dimension;
  switch (hom.path) {
    case HomPath::kPrimeField:
      return resfin::pow(hom.p, m2);
    case HomPath::kCharP:
      return resfin::pow(hom.p, hom.provenance.degree_bound * m2);
    case HomPath::kCharZero: {
      const HomProvenance& pv = hom.provenance;
      const long r = pv.substituted_degree;
      const BigInt bound = BigInt(r + 1) * resfin::pow(pv.point, static_cast<std::uint64_t>(r)) *
                           pv.substituted_max_coefficient;
      BigInt product = 1, q = 1;
      while (product <= bound) {
        q = next_prime(q);
        if (std::find(excluded_primes.begin(), excluded_primes.end(), q) !=
            excluded_primes.end()) {
          continue;
        }
        product *= q;
      }
      return resfin::pow(q, m2);
    }
  }
  return 0;
}

}  // namespace resfin
