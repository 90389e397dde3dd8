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

#include "resfin/ratfunc.hpp"

#include <algorithm>

#include "resfin/error.hpp"

namespace resfin {

namespace {

BigInt integer_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Largest monomial dividing every term of f.
Monomial common_monomial(const MultiPoly& f) {
  Monomial m(f.nvars(), UINT32_MAX);
  for (const Term& t : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exponents[i]);
  }
  if (f.is_zero()) std::fill(m.begin(), m.end(), 0);
  return m;
}

bool single_factor(const MultiPoly& f) {
  if (f.terms().size() != 1) return false;
  const Term& t = f.terms().front();
  const bool has_var = std::any_of(t.exponents.begin(), t.exponents.end(),
                                   [](std::uint32_t e) { return e != 0; });
  return !has_var ? t.coeff > 0 : t.coeff == 1;
}

}  // namespace

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)),
      den_(MultiPoly::constant(num_.characteristic(), num_.nvars(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.characteristic() != den_.characteristic() ||
      num_.nvars() != den_.nvars()) {
    throw RingMismatch("numerator and denominator live in different rings");
  }
  if (den_.is_zero()) throw InvalidArgument("zero denominator");
  canonicalize();
}

RatFunc RatFunc::constant(const BigInt& characteristic, std::size_t nvars,
                          const BigInt& c) {
  return RatFunc(MultiPoly::constant(characteristic, nvars, c));
}

void RatFunc::canonicalize() {
  const BigInt& ch = num_.characteristic();
  const std::size_t n = num_.nvars();
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(ch, n, 1);
    return;
  }
  if (den_.is_constant()) {
    const BigInt d = den_.constant_term();
    if (ch != 0) {
      BigInt inv;
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), ch.get_mpz_t());
      num_ = num_.scaled(inv);
      den_ = MultiPoly::constant(ch, n, 1);
      return;
    }
    BigInt g = integer_gcd(num_.content(), d);
    if (d < 0) g = -g;
    num_ = *divide_exact(num_, MultiPoly::constant(ch, n, g));
    den_ = MultiPoly::constant(ch, n, d / g);
    return;
  }
  const bool full_gcd =
      n <= 1 || std::max(num_.total_degree(), den_.total_degree()) <= kGcdDegreeLimit;
  MultiPoly g(ch, n);
  if (full_gcd) {
    g = gcd(num_, den_);
  } else {
    Monomial mn = common_monomial(num_), md = common_monomial(den_);
    for (std::size_t i = 0; i < n; ++i) mn[i] = std::min(mn[i], md[i]);
    const BigInt c = ch == 0 ? integer_gcd(num_.content(), den_.content()) : BigInt(1);
    g = MultiPoly::monomial(ch, std::move(mn), c);
  }
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const BigInt lc = den_.leading_term().coeff;
  if (ch == 0) {
    if (lc < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  } else if (lc != 1) {
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), ch.get_mpz_t());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_);
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool equal_exact(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string(std::span<const std::string> names) const {
  const std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  const std::string d = den_.to_string(names);
  const std::string top = single_factor(num_) ? n : "(" + n + ")";
  const std::string bottom = single_factor(den_) ? d : "(" + d + ")";
  return top + "/" + bottom;
}

}  // namespace resfin
