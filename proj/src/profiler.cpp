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

#include "resfin/profiler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "resfin/error.hpp"

namespace resfin {

namespace {

GfMatrix image_of_word(const GaloisField& field, std::span<const GfMatrix> images,
                       const Word& word, std::size_t dimension) {
  GfMatrix acc = gf_identity(dimension);
  for (std::size_t l : word.letters) acc = gf_multiply(field, acc, images[l]);
  return acc;
}

// Calls `visit` on every point of F^s, coordinates in increasing code order
// with the last coordinate varying fastest.
template <typename Visit>
void for_each_point(std::uint64_t q, std::size_t s, Visit visit) {
  std::vector<GaloisField::Elem> point(s, 0);
  while (true) {
    visit(point);
    std::size_t i = s;
    while (i > 0) {
      --i;
      if (++point[i] < q) break;
      point[i] = 0;
      if (i == 0) return;
    }
    if (s == 0) return;
  }
}

bool in_subfield(const GaloisField& field, std::span<const GaloisField::Elem> point,
                 std::size_t d) {
  const std::uint64_t pd = to_u64(resfin::pow(BigInt(static_cast<unsigned long>(field.characteristic())), d));
  for (GaloisField::Elem a : point) {
    if (field.pow(a, pd) != a) return false;
  }
  return true;
}

bool is_orbit_representative(const GaloisField& field,
                             std::span<const GaloisField::Elem> point) {
  std::vector<GaloisField::Elem> img(point.begin(), point.end());
  for (std::size_t j = 1; j < field.degree(); ++j) {
    for (auto& a : img) a = field.pow(a, field.characteristic());
    if (std::lexicographical_compare(img.begin(), img.end(), point.begin(), point.end())) {
      return false;
    }
  }
  return true;
}

std::string hom_key(const FieldHom& hom) {
  std::string key = resfin::to_string(hom.p) + "|" + hom.modulus.to_string();
  for (const ExtFieldElem& e : hom.images) {
    key += "|";
    for (const BigInt& c : e.coeffs) key += resfin::to_string(c) + ",";
  }
  return key;
}

}  // namespace

std::uint64_t farb_z(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("farb_z needs n >= 1");
  std::uint64_t best = 0;
  for (std::uint64_t i = 1; i <= n; ++i) best = std::max(best, dz(static_cast<std::int64_t>(i)));
  return best;
}

std::vector<std::uint64_t> farb_z_table(std::uint64_t n_max) {
  std::vector<std::uint64_t> out(n_max + 1, 0);
  std::uint64_t best = 0;
  for (std::uint64_t i = 1; i <= n_max; ++i) {
    best = std::max(best, dz(static_cast<std::int64_t>(i)));
    out[i] = best;
  }
  return out;
}

ReductionFamily::ReductionFamily(const GroupSpec& spec, const ReductionBudget& budget)
    : budget_(budget) {
  const std::size_t s = spec.nvars();
  auto consider = [&](const GaloisField& field, const UniPoly& modulus, HomPath path,
                      std::span<const GaloisField::Elem> point) {
    if (spec.phi().evaluate(field, point) == 0) return;
    auto images = generator_images(spec, field, point);
    if (!images) return;
    FieldHom hom;
    hom.path = path;
    hom.p = BigInt(static_cast<unsigned long>(field.characteristic()));
    hom.modulus = modulus;
    for (GaloisField::Elem a : point) {
      ExtFieldElem e;
      for (std::uint64_t d : field.digits(a)) e.coeffs.emplace_back(static_cast<unsigned long>(d));
      hom.images.push_back(std::move(e));
    }
    hom.provenance.method = "reduction";
    ImageOrder order = closure_order(field, *images, budget_.closure_budget);
    if (!order.exact) ++truncated_;
    members_.push_back({std::move(hom), field, std::move(*images), std::move(order)});
  };

  if (spec.characteristic() == 0) {
    for (BigInt p = 2; p <= budget_.prime_bound; p = next_prime(p)) {
      const UniPoly modulus(p, {BigInt(0), BigInt(1)});
      const GaloisField field(ExtField(p, modulus));
      for_each_point(field.order(), s, [&](const std::vector<GaloisField::Elem>& point) {
        consider(field, modulus, HomPath::kCharZero, point);
      });
    }
  } else {
    const BigInt& p = spec.characteristic();
    for (std::uint64_t k = 1; k <= budget_.degree_bound; ++k) {
      const UniPoly modulus = enumerate_irreducibles(p, k).front();
      const GaloisField field(ExtField(p, modulus));
      const HomPath path = k == 1 && s == 0 ? HomPath::kPrimeField : HomPath::kCharP;
      const auto proper = divisors(k);
      for_each_point(field.order(), s, [&](const std::vector<GaloisField::Elem>& point) {
        for (std::uint64_t d : proper) {
          if (d < k && in_subfield(field, point, d)) return;
        }
        if (!is_orbit_representative(field, point)) return;
        consider(field, modulus, path, point);
      });
    }
  }
  std::stable_sort(members_.begin(), members_.end(),
                   [](const Member& a, const Member& b) { return a.order.order < b.order.order; });
}

DReduction d_reduction(const GroupSpec& spec, const ReductionFamily& family,
                       const Word& word) {
  if (word_evaluate(spec, word).is_identity()) throw IdentityWord(word.to_string(spec));
  for (const ReductionFamily::Member& m : family.members()) {
    if (gf_is_identity(image_of_word(m.field, m.images, word, spec.dimension()))) continue;
    DReduction out;
    out.min_order = m.order.order;
    out.exhaustive = m.order.exact &&
                     (family.truncated() == 0 ||
                      m.order.order <= family.budget().closure_budget);
    out.hom = m.hom;
    return out;
  }
  throw NotFoundWithinBudget("no congruence quotient within budget separates '" +
                             word.to_string(spec) + "'");
}

DReduction d_reduction(const GroupSpec& spec, const Word& word,
                       const ReductionBudget& budget) {
  return d_reduction(spec, ReductionFamily(spec, budget), word);
}

FarbProfile farb_profile(const GroupSpec& spec, std::size_t radius,
                         const ProfileOptions& options) {
  FarbProfile out;
  const auto ball = ball_enumerate(spec, radius, options.max_elements);
  std::optional<ReductionFamily> family;
  if (options.compute_d_reduction) family.emplace(spec, options.reduction);
  std::map<std::string, ImageOrder> order_cache;

  for (const BallElement& el : ball) {
    ElementProfile ep;
    ep.word = el.word.to_string(spec);
    ep.length = el.word.length();
    try {
      const WitnessRecord rec = separate(spec, el.word);
      ep.gl_bound = rec.gl_bound;
      ep.verified = rec.verified;
      if (options.compute_image_order) {
        const std::string key = hom_key(rec.hom);
        auto it = order_cache.find(key);
        if (it == order_cache.end()) {
          it = order_cache
                   .emplace(key, image_order(spec, rec.hom, options.reduction.closure_budget))
                   .first;
        }
        ep.image_order = it->second;
      }
      if (family) ep.d_reduction = d_reduction(spec, *family, el.word);
    } catch (const Error& e) {
      ep.error = e.code() + ": " + e.what();
    }
    out.elements.push_back(std::move(ep));
  }

  for (std::size_t r = 1; r <= radius; ++r) {
    ProfileRow row;
    row.radius = r;
    row.max_gl_bound = 0;
    row.exhaustive = true;
    for (const ElementProfile& ep : out.elements) {
      if (ep.length > r) break;
      ++row.ball_size;
      if (!ep.error.empty()) {
        row.exhaustive = false;
        continue;
      }
      if (ep.gl_bound > row.max_gl_bound) row.max_gl_bound = ep.gl_bound;
      if (ep.image_order) {
        if (!row.max_image_order || ep.image_order->order > *row.max_image_order) {
          row.max_image_order = ep.image_order->order;
        }
      }
      if (ep.d_reduction) {
        if (!row.max_d_reduction || ep.d_reduction->min_order > *row.max_d_reduction) {
          row.max_d_reduction = ep.d_reduction->min_order;
        }
        row.exhaustive = row.exhaustive && ep.d_reduction->exhaustive;
      } else {
        row.exhaustive = false;
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<std::uint64_t> word_growth(const GroupSpec& spec, std::size_t radius,
                                       std::uint64_t max_elements) {
  const auto ball = ball_enumerate(spec, radius, max_elements);
  std::vector<std::uint64_t> out(radius + 1, 1);
  for (const BallElement& el : ball) {
    for (std::size_t r = el.word.length(); r <= radius; ++r) ++out[r];
  }
  return out;
}

BigInt subgroup_growth_catalog(const std::string& group_id, std::uint64_t n) {
  if (group_id == "Z") return BigInt(static_cast<unsigned long>(n));
  if (group_id == "Z2") {
    BigInt total = 0;
    for (std::uint64_t m = 1; m <= n; ++m) {
      for (std::uint64_t d : divisors(m)) total += static_cast<unsigned long>(d);
    }
    return total;
  }
  throw InvalidArgument("unknown catalog group '" + group_id + "'");
}

std::uint64_t count_sublattices_z2(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    // Every index-m sublattice contains m Z^2, so it is determined by its
    // points in [0, m)^2.
    std::set<std::vector<std::pair<std::uint64_t, std::uint64_t>>> lattices;
    for (std::uint64_t a = 1; a <= m; ++a) {
      if (m % a != 0) continue;
      const std::uint64_t d = m / a;
      for (std::uint64_t b = 0; b < d; ++b) {
        std::set<std::pair<std::uint64_t, std::uint64_t>> pts;
        for (std::uint64_t i = 0; i < m; ++i) {
          for (std::uint64_t j = 0; j < m; ++j) {
            pts.insert({(i * a) % m, (i * b + j * d) % m});
          }
        }
        lattices.insert({pts.begin(), pts.end()});
      }
    }
    total += lattices.size();
  }
  return total;
}

AuditReport inequality_audit(const std::string& group_id, std::uint64_t n_max) {
  if (group_id != "Z") throw InvalidArgument("inequality audit supports only group 'Z'");
  if (n_max < 1) throw InvalidArgument("inequality audit needs n_max >= 1");
  const auto farb = farb_z_table(n_max);
  AuditReport rep;
  rep.all_pass = true;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    AuditRow row;
    row.n = n;
    row.word_growth = 2 * n + 1;
    row.farb = farb[n];
    row.subgroup_growth = to_u64(subgroup_growth_catalog(group_id, row.farb));
    const BigInt rhs = resfin::pow(BigInt(static_cast<unsigned long>(row.farb)), row.subgroup_growth);
    row.pass = BigInt(static_cast<unsigned long>(row.word_growth)) <= rhs;
    row.log_margin = static_cast<double>(row.subgroup_growth) * std::log(static_cast<double>(row.farb)) -
                     std::log(static_cast<double>(row.word_growth));
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

ThresholdReport threshold_check(std::span<const std::pair<std::uint64_t, std::uint64_t>> samples,
                                std::optional<double> assert_floor) {
  if (samples.empty()) throw InvalidArgument("threshold check needs samples");
  ThresholdReport rep;
  rep.min_ratio = INFINITY;
  for (const auto& [n, f] : samples) {
    if (n < 16) throw InvalidArgument("insufficient range: samples need n >= 16, got " + std::to_string(n));
    if (f < 1) throw InvalidArgument("F(n) must be positive");
    const double lf = std::log(static_cast<double>(f));
    const double ratio = lf * lf / std::log(std::log(static_cast<double>(n)));
    rep.rows.push_back({n, f, ratio});
    rep.min_ratio = std::min(rep.min_ratio, ratio);
  }
  if (assert_floor) {
    rep.asserted = true;
    rep.pass = rep.min_ratio >= *assert_floor;
  }
  return rep;
}

GrowthTable growth_table(const std::string& group_id, std::uint64_t n_max) {
  if (group_id != "Z") throw InvalidArgument("growth table supports only group 'Z'");
  GrowthTable t;
  t.group_id = group_id;
  const auto farb = farb_z_table(n_max);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    t.word_growth.push_back(2 * n + 1);
    t.subgroup_growth.push_back(subgroup_growth_catalog(group_id, n));
    t.farb.push_back(farb[n]);
  }
  t.audit_pass = n_max == 0 || inequality_audit(group_id, n_max).all_pass;
  return t;
}

}  // namespace resfin
