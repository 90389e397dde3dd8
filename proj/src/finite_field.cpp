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

#include "resfin/finite_field.hpp"

#include "resfin/error.hpp"

namespace resfin {

PFieldElem::PFieldElem(BigInt p, const BigInt& value) : p_(std::move(p)) {
  if (!is_prime(p_)) throw InvalidArgument("PFieldElem: modulus is not prime");
  value_ = mod_floor(value, p_);
}

PFieldElem PFieldElem::operator-() const { return PFieldElem(p_, -value_); }

PFieldElem operator+(const PFieldElem& a, const PFieldElem& b) {
  if (a.p_ != b.p_) throw RingMismatch("prime field elements over different p");
  return PFieldElem(a.p_, a.value_ + b.value_);
}

PFieldElem operator-(const PFieldElem& a, const PFieldElem& b) {
  if (a.p_ != b.p_) throw RingMismatch("prime field elements over different p");
  return PFieldElem(a.p_, a.value_ - b.value_);
}

PFieldElem operator*(const PFieldElem& a, const PFieldElem& b) {
  if (a.p_ != b.p_) throw RingMismatch("prime field elements over different p");
  return PFieldElem(a.p_, a.value_ * b.value_);
}

PFieldElem PFieldElem::inverse() const {
  if (value_ == 0) throw InvalidArgument("inverse of zero in F_p");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), p_.get_mpz_t());
  return PFieldElem(p_, inv);
}

ExtField::ExtField(BigInt p, UniPoly modulus)
    : p_(std::move(p)), modulus_(std::move(modulus)) {
  if (modulus_.characteristic() != p_) {
    throw RingMismatch("ExtField: modulus characteristic differs from p");
  }
  if (modulus_.degree() < 1 || modulus_.leading() != 1) {
    throw InvalidArgument("ExtField: modulus must be monic of degree >= 1");
  }
  if (!is_irreducible(modulus_)) {
    throw InvalidArgument("ExtField: modulus " + modulus_.to_string() +
                          " is reducible");
  }
}

void ExtField::check(const ExtFieldElem& a) const {
  if (a.coeffs.size() != degree()) {
    throw InvalidArgument("ExtFieldElem has wrong length for this field");
  }
}

ExtFieldElem ExtField::from_poly(const UniPoly& f) const {
  UniPoly r = f % modulus_;
  ExtFieldElem out{std::vector<BigInt>(degree(), BigInt(0))};
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) out.coeffs[i] = r.coeffs()[i];
  return out;
}

UniPoly ExtField::to_poly(const ExtFieldElem& a) const {
  check(a);
  return UniPoly(p_, a.coeffs);
}

ExtFieldElem ExtField::zero() const { return from_integer(0); }
ExtFieldElem ExtField::one() const { return from_integer(1); }

ExtFieldElem ExtField::from_integer(const BigInt& c) const {
  return from_poly(UniPoly::constant(p_, c));
}

ExtFieldElem ExtField::add(const ExtFieldElem& a, const ExtFieldElem& b) const {
  return from_poly(to_poly(a) + to_poly(b));
}

ExtFieldElem ExtField::sub(const ExtFieldElem& a, const ExtFieldElem& b) const {
  return from_poly(to_poly(a) - to_poly(b));
}

ExtFieldElem ExtField::mul(const ExtFieldElem& a, const ExtFieldElem& b) const {
  return from_poly(to_poly(a) * to_poly(b));
}

ExtFieldElem ExtField::pow(const ExtFieldElem& a, const BigInt& e) const {
  if (e < 0) return pow(inverse(a), -e);
  return from_poly(powmod(to_poly(a), e, modulus_));
}

ExtFieldElem ExtField::inverse(const ExtFieldElem& a) const {
  if (is_zero(a)) throw InvalidArgument("inverse of zero in extension field");
  // a^(q-2) = a^-1 in F_q.
  return pow(a, order() - 2);
}

bool ExtField::is_zero(const ExtFieldElem& a) const {
  check(a);
  for (const auto& c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace resfin
