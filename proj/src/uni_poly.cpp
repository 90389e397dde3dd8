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

#include "resfin/uni_poly.hpp"

#include <algorithm>
#include <sstream>

#include "resfin/error.hpp"

namespace resfin {

namespace {

void require_same_ring(const UniPoly& a, const UniPoly& b) {
  if (a.characteristic() != b.characteristic()) {
    throw RingMismatch("univariate polynomials over different characteristics");
  }
}

BigInt inverse_mod(const BigInt& a, const BigInt& p) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw ArithmeticFault("inverse of non-unit " + a.get_str() + " mod " +
                          p.get_str());
  }
  return inv;
}

// Pseudo-remainder lc(b)^k * a mod b over Z.
UniPoly pseudo_remainder(UniPoly a, const UniPoly& b) {
  const BigInt& lb = b.leading();
  const BigInt& c = a.characteristic();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    a = a.scaled(lb) - UniPoly::monomial(c, a.leading(), shift) * b;
  }
  return a;
}

}  // namespace

UniPoly::UniPoly(BigInt characteristic, std::vector<BigInt> coeffs)
    : characteristic_(std::move(characteristic)), coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::constant(const BigInt& characteristic, const BigInt& c) {
  return UniPoly(characteristic, {c});
}

UniPoly UniPoly::monomial(const BigInt& characteristic, const BigInt& c,
                          std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1, BigInt(0));
  coeffs[degree] = c;
  return UniPoly(characteristic, std::move(coeffs));
}

void UniPoly::normalize() {
  if (characteristic_ != 0) {
    for (auto& c : coeffs_) c = mod_floor(c, characteristic_);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& UniPoly::coeff(std::size_t i) const {
  static const BigInt kZero = 0;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& UniPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of zero");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return UniPoly(characteristic_, std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(a.characteristic_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(a.characteristic_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.characteristic_);
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(a.characteristic_, std::move(c));
}

UniPoly UniPoly::scaled(const BigInt& s) const {
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * s;
  return UniPoly(characteristic_, std::move(c));
}

BigInt UniPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
    if (characteristic_ != 0) acc = mod_floor(acc, characteristic_);
  }
  return acc;
}

BigInt UniPoly::max_abs_coefficient() const {
  BigInt m = 0;
  for (const auto& c : coeffs_) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

UniPoly UniPoly::monic() const {
  if (characteristic_ == 0) throw InvalidArgument("monic() needs characteristic p");
  if (is_zero()) return *this;
  return scaled(inverse_mod(leading(), characteristic_));
}

BigInt UniPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] / g;
  return UniPoly(characteristic_, std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  const BigInt& p = a.characteristic();
  if (a.degree() < b.degree()) return {UniPoly(p), a};
  const std::vector<BigInt>& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(r.size() - db, BigInt(0));
  BigInt lb_inv;
  if (p != 0) lb_inv = inverse_mod(b.leading(), p);
  BigInt factor;
  for (std::size_t top = r.size(); top-- > db;) {
    if (p != 0) r[top] = mod_floor(r[top], p);
    if (r[top] == 0) continue;
    if (p != 0) {
      factor = mod_floor(r[top] * lb_inv, p);
    } else {
      if (r[top] % b.leading() != 0) throw InvalidArgument("inexact division over Z");
      factor = r[top] / b.leading();
    }
    const std::size_t shift = top - db;
    q[shift] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) r[shift + j] -= factor * bc[j];
    }
  }
  r.resize(db);
  return {UniPoly(p, std::move(q)), UniPoly(p, std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  const BigInt& p = a.characteristic();
  if (p != 0) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
      UniPoly r = x % y;
      x = std::move(y);
      y = std::move(r);
    }
    return x.monic();
  }
  if (a.is_zero()) return b.primitive_part().scaled(b.is_zero() ? 1 : b.content());
  if (b.is_zero()) return a.primitive_part().scaled(a.content());
  const BigInt c = gcd(a.content(), b.content());
  UniPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UniPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
  }
  return x.primitive_part().scaled(c);
}

UniPoly powmod(const UniPoly& base, const BigInt& e, const UniPoly& m) {
  if (base.characteristic() == 0) throw InvalidArgument("powmod needs characteristic p");
  UniPoly result = UniPoly::constant(base.characteristic(), 1) % m;
  UniPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

bool is_irreducible(const UniPoly& f) {
  if (f.characteristic() == 0) {
    throw InvalidArgument("is_irreducible: characteristic-0 input");
  }
  if (f.is_zero()) throw InvalidArgument("is_irreducible: zero polynomial");
  const long n = f.degree();
  if (n == 0) return false;
  if (n == 1) return true;
  const BigInt& p = f.characteristic();
  const UniPoly g = f.monic();
  const UniPoly x = UniPoly::monomial(p, 1, 1);
  // frob[k] = x^(p^k) mod g.
  std::vector<UniPoly> frob{x % g};
  for (long k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, g));
  if (frob[static_cast<std::size_t>(n)] != x % g) return false;
  for (const BigInt& r : prime_factors(BigInt(n))) {
    const auto k = static_cast<std::size_t>(n / r.get_si());
    const UniPoly d = gcd(frob[k] - x, g);
    if (d.degree() != 0) return false;
  }
  return true;
}

UniPoly monic_from_index(const BigInt& p, std::size_t degree,
                         const BigInt& index) {
  std::vector<BigInt> coeffs(degree + 1);
  BigInt rest = index;
  for (std::size_t i = 0; i < degree; ++i) {
    coeffs[i] = rest % p;
    rest /= p;
  }
  coeffs[degree] = 1;
  return UniPoly(p, std::move(coeffs));
}

std::vector<UniPoly> enumerate_irreducibles(const BigInt& p, std::size_t degree,
                                            std::uint64_t budget) {
  if (!is_prime(p)) throw InvalidArgument("enumerate_irreducibles: p not prime");
  if (degree == 0) throw InvalidArgument("enumerate_irreducibles: degree 0");
  const BigInt total = pow(p, degree);
  if (total > budget) {
    throw BudgetExceeded("enumerate_irreducibles needs " + total.get_str() +
                             " candidates",
                         total.fits_ulong_p() ? total.get_ui() : UINT64_MAX,
                         budget);
  }
  std::vector<UniPoly> out;
  for (BigInt idx = 0; idx < total; ++idx) {
    UniPoly f = monic_from_index(p, degree, idx);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace resfin
