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

#include "resfin/galois_field.hpp"

#include "resfin/error.hpp"

namespace resfin {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

}  // namespace

GaloisField::GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw InvalidArgument("GaloisField: modulus must be monic of degree >= 1");
  }
  k_ = modulus_.size() - 1;
  q_ = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    if (q_ > kMaxOrder / p_) {
      throw BudgetExceeded("GaloisField: field order exceeds 2^31", 0, kMaxOrder);
    }
    q_ *= p_;
  }
  if (q_ <= kTableLimit) build_tables();
}

GaloisField::GaloisField(const ExtField& field)
    : GaloisField(to_u64(field.characteristic()), [&] {
        std::vector<std::uint64_t> m;
        for (long i = 0; i <= field.modulus().degree(); ++i) {
          m.push_back(to_u64(field.modulus().coeff(static_cast<std::size_t>(i))));
        }
        return m;
      }()) {}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
  std::uint64_t out = 0, scale = 1;
  std::uint64_t x = a, y = b;
  for (std::size_t i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  std::uint64_t out = 0, scale = 1, x = a;
  for (std::size_t i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_slow(a, b);
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  if (k_ == 1) {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint64_t>(
          (prod[i + j] + static_cast<unsigned __int128>(da[i]) * db[j]) % p_);
    }
  }
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      const std::uint64_t sub_v =
          static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) * modulus_[i]) % p_);
      prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub_v) % p_;
    }
  }
  return from_digits(std::span<const std::uint64_t>(prod.data(), k_));
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("GaloisField: inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

GaloisField::Elem GaloisField::from_integer(const BigInt& c) const {
  return static_cast<Elem>(to_u64(mod_floor(c, BigInt(static_cast<unsigned long>(p_)))));
}

GaloisField::Elem GaloisField::from_digits(std::span<const std::uint64_t> d) const {
  if (d.size() > k_) throw InvalidArgument("GaloisField: too many digits");
  std::uint64_t out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * p_ + d[i] % p_;
  return static_cast<Elem>(out);
}

GaloisField::Elem GaloisField::from_ext(const ExtFieldElem& a) const {
  std::vector<std::uint64_t> d;
  for (const auto& c : a.coeffs) d.push_back(to_u64(c));
  return from_digits(d);
}

std::vector<std::uint64_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint64_t> d(k_);
  std::uint64_t x = a;
  for (std::size_t i = 0; i < k_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

GaloisField::Elem GaloisField::generator() const {
  if (k_ == 1) return static_cast<Elem>((p_ - modulus_[0]) % p_);
  return static_cast<Elem>(p_);
}

void GaloisField::build_tables() {
  if (q_ == 2) {
    exp_ = {1};
    log_ = {0, 0};
    return;
  }
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(BigInt(static_cast<unsigned long>(n)));
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, a);
      e >>= 1;
      a = mul_slow(a, a);
    }
    return r;
  };
  Elem g = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool primitive = true;
    for (const auto& r : factors) {
      if (slow_pow(cand, n / r.get_ui()) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw ArithmeticFault("GaloisField: no primitive element found");
  exp_.resize(n);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
}

GfMatrix gf_identity(std::size_t n) {
  GfMatrix m{n, std::vector<GaloisField::Elem>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m.entries[i * n + i] = 1;
  return m;
}

GfMatrix gf_multiply(const GaloisField& f, const GfMatrix& a, const GfMatrix& b) {
  const std::size_t n = a.size;
  GfMatrix c{n, std::vector<GaloisField::Elem>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a.entries[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        auto& cij = c.entries[i * n + j];
        cij = f.add(cij, f.mul(aik, b.entries[k * n + j]));
      }
    }
  }
  return c;
}

bool gf_is_identity(const GfMatrix& a) {
  for (std::size_t i = 0; i < a.size; ++i) {
    for (std::size_t j = 0; j < a.size; ++j) {
      if (a.entries[i * a.size + j] != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

GaloisField::Elem gf_determinant(const GaloisField& f, GfMatrix a) {
  const std::size_t n = a.size;
  GaloisField::Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.entries[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.entries[pivot * n + j], a.entries[col * n + j]);
      }
      det = f.neg(det);
    }
    const auto pv = a.entries[col * n + col];
    det = f.mul(det, pv);
    const auto pinv = f.inv(pv);
    for (std::size_t r = col + 1; r < n; ++r) {
      const auto factor = f.mul(a.entries[r * n + col], pinv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        a.entries[r * n + j] =
            f.sub(a.entries[r * n + j], f.mul(factor, a.entries[col * n + j]));
      }
    }
  }
  return det;
}

}  // namespace resfin
