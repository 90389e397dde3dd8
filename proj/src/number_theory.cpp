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

#include "resfin/number_theory.hpp"

#include <algorithm>
#include <array>

#include "resfin/error.hpp"

namespace resfin {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = std::uint64_t{1} << 20;

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Strong pseudoprime test to base a; n odd, n > a.
bool strong_probable_prime(const BigInt& n, unsigned long a) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  BigInt x;
  BigInt base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::size_t hash_value(const BigInt& n) noexcept {
  const mpz_srcptr z = n.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

BigInt mod_floor(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t to_u64(const BigInt& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw InvalidArgument("integer " + n.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < kTrialDivisionLimit) return is_prime_trial(n.get_ui());
  if (mpz_even_p(n.get_mpz_t())) return false;
  // Bases 2..41 are a deterministic witness set below 3.317e24.
  static const BigInt kDeterministicBound("3317044064679887385961981");
  if (n >= kDeterministicBound) {
    throw InvalidArgument("primality of " + n.get_str() +
                          " is beyond the deterministic range");
  }
  static constexpr std::array<unsigned long, 13> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long a : kBases) {
    if (n % a == 0) return false;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

BigInt next_prime(const BigInt& n) {
  BigInt c = n < 2 ? BigInt(2) : BigInt(n + 1);
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<BigInt> prime_factors(const BigInt& n) {
  std::vector<BigInt> out;
  BigInt m = abs(n);
  if (m < 2) return out;
  for (BigInt d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::int64_t d) {
  if (d <= 0) throw InvalidArgument("mobius: argument must be positive");
  int sign = 1;
  std::int64_t m = d;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    m /= q;
    if (m % q == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

BigInt gauss_irreducible_count(const BigInt& p, std::uint64_t degree) {
  if (degree == 0) throw InvalidArgument("gauss_irreducible_count: degree 0");
  if (!is_prime(p)) {
    throw InvalidArgument("gauss_irreducible_count: " + p.get_str() +
                          " is not prime");
  }
  BigInt sum = 0;
  for (std::uint64_t d : divisors(degree)) {
    const int mu = mobius(static_cast<std::int64_t>(d));
    if (mu != 0) sum += mu * pow(p, degree / d);
  }
  return sum / degree;
}

BigInt smallest_prime_not_dividing(const BigInt& i,
                                   std::span<const BigInt> excluded) {
  if (i == 0) {
    throw InvalidArgument("smallest_prime_not_dividing: i must be nonzero");
  }
  for (BigInt p = 2;; p = next_prime(p)) {
    if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) {
      continue;
    }
    if (i % p != 0) return p;
  }
}

BigInt dz(const BigInt& i) {
  if (i == 0) throw InvalidArgument("dz: argument must be nonzero");
  BigInt m = 2;
  while (i % m == 0) ++m;
  return m;
}

std::uint64_t dz(std::int64_t i) {
  if (i == 0) throw InvalidArgument("dz: argument must be nonzero");
  std::uint64_t m = 2;
  while (i % static_cast<std::int64_t>(m) == 0) ++m;
  return m;
}

}  // namespace resfin
