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

#include "resfin/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "resfin/error.hpp"

namespace resfin {

namespace {

std::uint64_t monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.characteristic() != b.characteristic()) {
    throw RingMismatch("polynomials over different characteristics (" +
                       a.characteristic().get_str() + " vs " +
                       b.characteristic().get_str() + ")");
  }
  if (a.nvars() != b.nvars()) {
    throw RingMismatch("polynomials in different numbers of variables (" +
                       std::to_string(a.nvars()) + " vs " +
                       std::to_string(b.nvars()) + ")");
  }
}

BigInt integer_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt inverse_mod(const BigInt& a, const BigInt& p) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw ArithmeticFault("non-invertible coefficient " + a.get_str());
  }
  return inv;
}

// Splits f by powers of `var`: degree -> coefficient (free of var).
std::map<std::uint32_t, MultiPoly> coefficients_in(const MultiPoly& f,
                                                   std::size_t var) {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const Term& t : f.terms()) {
    Term stripped = t;
    stripped.exponents[var] = 0;
    buckets[t.exponents[var]].push_back(std::move(stripped));
  }
  std::map<std::uint32_t, MultiPoly> out;
  for (auto& [deg, terms] : buckets) {
    out.emplace(deg, MultiPoly(f.characteristic(), f.nvars(), std::move(terms)));
  }
  return out;
}

MultiPoly var_power(const BigInt& ch, std::size_t nvars, std::size_t var,
                    std::uint32_t e) {
  Monomial m(nvars, 0);
  m[var] = e;
  return MultiPoly::monomial(ch, std::move(m), 1);
}

MultiPoly normalize_sign(const MultiPoly& g) {
  if (g.is_zero()) return g;
  const BigInt& lc = g.leading_term().coeff;
  if (g.characteristic() == 0) return lc < 0 ? -g : g;
  return g.scaled(inverse_mod(lc, g.characteristic()));
}

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  MultiPoly c(f.characteristic(), f.nvars());
  for (auto& [deg, coeff] : coefficients_in(f, var)) {
    c = gcd(c, coeff);
    if (c.is_constant() && !c.is_zero() &&
        (f.characteristic() != 0 || abs(c.constant_term()) == 1)) {
      break;
    }
  }
  return c;
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw ArithmeticFault("expected exact division failed");
  return *std::move(q);
}

// lc(b)^k * a reduced modulo b as polynomials in `var`.
MultiPoly pseudo_remainder_in(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const long db = b.degree_in(var);
  const MultiPoly lb = coefficients_in(b, var).rbegin()->second;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const long da = a.degree_in(var);
    const MultiPoly la = coefficients_in(a, var).rbegin()->second;
    a = a * lb - la * var_power(a.characteristic(), a.nvars(), var,
                                static_cast<std::uint32_t>(da - db)) * b;
  }
  return a;
}

}  // namespace

int grlex_compare(const Monomial& a, const Monomial& b) {
  const auto da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MultiPoly::MultiPoly(BigInt characteristic, std::size_t nvars,
                     std::vector<Term> terms)
    : characteristic_(std::move(characteristic)),
      nvars_(nvars),
      terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.exponents.size() != nvars_) {
      throw RingMismatch("term exponent vector has length " +
                         std::to_string(t.exponents.size()) + ", expected " +
                         std::to_string(nvars_));
    }
  }
  normalize();
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return grlex_compare(a.exponents, b.exponents) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (Term& t : merged) {
    if (characteristic_ != 0) t.coeff = mod_floor(t.coeff, characteristic_);
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }
}

MultiPoly MultiPoly::constant(const BigInt& characteristic, std::size_t nvars,
                              const BigInt& c) {
  return MultiPoly(characteristic, nvars, {Term{Monomial(nvars, 0), c}});
}

MultiPoly MultiPoly::variable(const BigInt& characteristic, std::size_t nvars,
                              std::size_t index) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return MultiPoly(characteristic, nvars, {Term{std::move(m), 1}});
}

MultiPoly MultiPoly::monomial(const BigInt& characteristic, Monomial exponents,
                              const BigInt& c) {
  const std::size_t n = exponents.size();
  return MultiPoly(characteristic, n, {Term{std::move(exponents), c}});
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && monomial_degree(terms_[0].exponents) == 0);
}

bool MultiPoly::is_one() const noexcept {
  return is_constant() && !terms_.empty() && terms_[0].coeff == 1;
}

BigInt MultiPoly::constant_term() const {
  if (!terms_.empty() && monomial_degree(terms_.back().exponents) == 0) {
    return terms_.back().coeff;
  }
  return 0;
}

long MultiPoly::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<long>(monomial_degree(terms_.front().exponents));
}

long MultiPoly::degree_in(std::size_t var) const noexcept {
  long d = -1;
  for (const Term& t : terms_) d = std::max<long>(d, t.exponents[var]);
  return d;
}

long MultiPoly::max_variable_degree() const noexcept {
  long d = terms_.empty() ? -1 : 0;
  for (std::size_t v = 0; v < nvars_; ++v) d = std::max(d, degree_in(v));
  return d;
}

std::vector<std::size_t> MultiPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (degree_in(v) > 0) out.push_back(v);
  }
  return out;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  return terms_.front();
}

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coeff = -x.coeff;
  return MultiPoly(characteristic_, nvars_, std::move(t));
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  std::vector<Term> t;
  t.reserve(a.terms_.size() + b.terms_.size());
  t.insert(t.end(), a.terms_.begin(), a.terms_.end());
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return MultiPoly(a.characteristic_, a.nvars_, std::move(t));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  std::vector<Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      Monomial m(a.nvars_);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = x.exponents[i] + y.exponents[i];
      t.push_back(Term{std::move(m), x.coeff * y.coeff});
    }
  }
  return MultiPoly(a.characteristic_, a.nvars_, std::move(t));
}

MultiPoly MultiPoly::scaled(const BigInt& c) const {
  std::vector<Term> t = terms_;
  for (Term& x : t) x.coeff *= c;
  return MultiPoly(characteristic_, nvars_, std::move(t));
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result = constant(characteristic_, nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BigInt MultiPoly::content() const {
  if (characteristic_ != 0) return terms_.empty() ? 0 : 1;
  BigInt g = 0;
  for (const Term& t : terms_) g = integer_gcd(g, t.coeff);
  return g;
}

BigInt MultiPoly::max_abs_coefficient() const {
  BigInt m = 0;
  for (const Term& t : terms_) {
    if (abs(t.coeff) > m) m = abs(t.coeff);
  }
  return m;
}

BigInt MultiPoly::l1_norm() const {
  BigInt s = 0;
  for (const Term& t : terms_) s += abs(t.coeff);
  return s;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> point) const {
  if (point.size() != nvars_) throw RingMismatch("evaluation point has wrong arity");
  BigInt acc = 0;
  for (const Term& t : terms_) {
    BigInt v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exponents[i] != 0) v *= resfin::pow(point[i], t.exponents[i]);
    }
    acc += v;
  }
  if (characteristic_ != 0) acc = mod_floor(acc, characteristic_);
  return acc;
}

GaloisField::Elem MultiPoly::evaluate(
    const GaloisField& field, std::span<const GaloisField::Elem> point) const {
  if (point.size() != nvars_) throw RingMismatch("evaluation point has wrong arity");
  if (characteristic_ != 0 &&
      characteristic_ != BigInt(static_cast<unsigned long>(field.characteristic()))) {
    throw RingMismatch("evaluating into a field of different characteristic");
  }
  GaloisField::Elem acc = 0;
  for (const Term& t : terms_) {
    GaloisField::Elem v = field.from_integer(t.coeff);
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
      if (t.exponents[i] != 0) v = field.mul(v, field.pow(point[i], t.exponents[i]));
    }
    acc = field.add(acc, v);
  }
  return acc;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const BigInt mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = monomial_degree(t.exponents) == 0;
    bool need_star = false;
    if (is_const || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exponents[i] == 0) continue;
      if (need_star) os << "*";
      os << name(i);
      if (t.exponents[i] > 1) os << "^" << t.exponents[i];
      need_star = true;
    }
  }
  return os.str();
}

std::size_t MultiPoly::hash() const noexcept {
  std::size_t h = hash_value(characteristic_) ^ (nvars_ * 0x100000001b3ULL);
  for (const Term& t : terms_) {
    std::size_t th = hash_value(t.coeff);
    for (std::uint32_t e : t.exponents) th = th * 31 + e;
    h ^= th + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  const BigInt& ch = a.characteristic();
  const Term& lb = b.leading_term();
  BigInt lb_inv;
  if (ch != 0) lb_inv = inverse_mod(lb.coeff, ch);
  std::vector<Term> quotient;
  MultiPoly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (lr.exponents[i] < lb.exponents[i]) return std::nullopt;
      m[i] = lr.exponents[i] - lb.exponents[i];
    }
    BigInt c;
    if (ch != 0) {
      c = lr.coeff * lb_inv;
    } else {
      if (lr.coeff % lb.coeff != 0) return std::nullopt;
      c = lr.coeff / lb.coeff;
    }
    const MultiPoly t = MultiPoly::monomial(ch, m, c);
    quotient.push_back(Term{std::move(m), c});
    r = r - t * b;
  }
  return MultiPoly(ch, a.nvars(), std::move(quotient));
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  const BigInt& ch = a.characteristic();
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() && b.is_constant()) {
    if (ch != 0) return MultiPoly::constant(ch, a.nvars(), 1);
    return MultiPoly::constant(ch, a.nvars(),
                               integer_gcd(a.constant_term(), b.constant_term()));
  }
  std::size_t var = a.nvars();
  for (std::size_t v = 0; v < a.nvars() && var == a.nvars(); ++v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) var = v;
  }
  if (a.degree_in(var) <= 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) <= 0) return gcd(content_in(a, var), b);

  const MultiPoly ca = content_in(a, var);
  const MultiPoly cb = content_in(b, var);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly pa = exact_quotient(a, ca);
  MultiPoly pb = exact_quotient(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    MultiPoly r = pseudo_remainder_in(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) <= 0) {
      pb = MultiPoly::constant(ch, a.nvars(), 1);
      break;
    }
    pa = std::move(pb);
    pb = exact_quotient(r, content_in(r, var));
  }
  return normalize_sign(c * pb);
}

UniPoly substitute_powers(const MultiPoly& f,
                          std::span<const std::uint64_t> exponents,
                          std::uint64_t max_degree) {
  if (exponents.size() != f.nvars()) {
    throw RingMismatch("substitute_powers: expected " + std::to_string(f.nvars()) +
                       " exponents, got " + std::to_string(exponents.size()));
  }
  std::vector<std::pair<std::uint64_t, const BigInt*>> placed;
  std::uint64_t top = 0;
  for (const Term& t : f.terms()) {
    unsigned __int128 deg = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      deg += static_cast<unsigned __int128>(t.exponents[i]) * exponents[i];
    }
    if (deg > max_degree) {
      throw BudgetExceeded("substitute_powers: image degree exceeds budget",
                           deg > UINT64_MAX ? UINT64_MAX
                                            : static_cast<std::uint64_t>(deg),
                           max_degree);
    }
    placed.emplace_back(static_cast<std::uint64_t>(deg), &t.coeff);
    top = std::max(top, static_cast<std::uint64_t>(deg));
  }
  std::vector<BigInt> coeffs(placed.empty() ? 0 : top + 1, BigInt(0));
  for (const auto& [deg, c] : placed) coeffs[deg] += *c;
  return UniPoly(f.characteristic(), std::move(coeffs));
}

std::string to_string(ExponentMethod m) {
  return m == ExponentMethod::kRecursion ? "paper_recursion" : "kronecker_fallback";
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t e) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= base;
    if (r > (std::uint64_t{1} << 40)) {
      throw BudgetExceeded("exponent bound d^{2s} is too large to substitute",
                           UINT64_MAX, std::uint64_t{1} << 40);
    }
  }
  return static_cast<std::uint64_t>(r);
}

// Exponents for variables first..nvars-1 of f, which only involves those
// variables. Mirrors the induction on (s, d): peel the minimal power of the
// first variable, split into the part free of it (h0) and the rest (x h1),
// solve h0 in one fewer variable, and push the first variable to d^{2s}.
std::vector<std::uint64_t> recursion_exponents(const MultiPoly& f,
                                               std::size_t first) {
  const std::size_t s = f.nvars() - first;
  const long d = f.total_degree();
  if (d == 0) return std::vector<std::uint64_t>(s, 0);
  if (s == 1) {
    BigInt at_one = 0;
    for (const Term& t : f.terms()) at_one += t.coeff;
    if (f.characteristic() != 0) at_one = mod_floor(at_one, f.characteristic());
    return {at_one != 0 ? 0u : 1u};
  }
  std::uint32_t k = UINT32_MAX;
  for (const Term& t : f.terms()) k = std::min(k, t.exponents[first]);
  if (k > 0) {
    std::vector<Term> shifted = f.terms();
    for (Term& t : shifted) t.exponents[first] -= k;
    return recursion_exponents(
        MultiPoly(f.characteristic(), f.nvars(), std::move(shifted)), first);
  }
  std::vector<Term> h0;
  for (const Term& t : f.terms()) {
    if (t.exponents[first] == 0) h0.push_back(t);
  }
  std::vector<std::uint64_t> rest = recursion_exponents(
      MultiPoly(f.characteristic(), f.nvars(), std::move(h0)), first + 1);
  std::vector<std::uint64_t> out{
      checked_power(static_cast<std::uint64_t>(d), 2 * s)};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

ExponentChoice lemma_z_exponents(const MultiPoly& f) {
  if (f.is_zero()) throw InvalidArgument("lemma_z_exponents: zero polynomial");
  const std::size_t s = f.nvars();
  const auto d = static_cast<std::uint64_t>(f.total_degree());
  const auto big_d = static_cast<std::uint64_t>(f.max_variable_degree());

  ExponentChoice choice;
  bool recursion_ok = false;
  try {
    choice.exponents = recursion_exponents(f, 0);
    recursion_ok = !substitute_powers(f, choice.exponents).is_zero();
  } catch (const BudgetExceeded&) {
    recursion_ok = false;
  }
  if (recursion_ok) {
    choice.method = ExponentMethod::kRecursion;
  } else {
    // x_i -> x^{(D+1)^{i-1}} is injective on monomials of per-variable
    // degree <= D, so no two terms collide.
    choice.method = ExponentMethod::kKroneckerFallback;
    choice.exponents.assign(s, 0);
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < s; ++i) {
      choice.exponents[i] = e;
      if (i + 1 < s) e = e * (big_d + 1);
    }
    if (substitute_powers(f, choice.exponents).is_zero()) {
      throw ArithmeticFault("Kronecker substitution produced zero for " +
                            f.to_string());
    }
  }
  auto within = [&](std::uint64_t base) {
    const BigInt bound = resfin::pow(BigInt(static_cast<unsigned long>(base)), 2 * s);
    return std::all_of(choice.exponents.begin(), choice.exponents.end(),
                       [&](std::uint64_t n) {
                         return BigInt(static_cast<unsigned long>(n)) <= bound;
                       });
  };
  choice.bound_respected = within(d);
  choice.interpretations_disagree = choice.bound_respected != within(big_d);
  return choice;
}

}  // namespace resfin
