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

// Integer number theory at desk scale: primality, Moebius function,
// counts of irreducible polynomials, and the divisibility function of Z.

#ifndef RESFIN_NUMBER_THEORY_HPP_
#define RESFIN_NUMBER_THEORY_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace resfin {

using BigInt = mpz_class;

std::string to_string(const BigInt& n);
BigInt pow(const BigInt& base, std::uint64_t exponent);
std::size_t hash_value(const BigInt& n) noexcept;
// Least nonnegative residue of n modulo m (m > 0).
BigInt mod_floor(const BigInt& n, const BigInt& m);
// Converts to uint64; throws InvalidArgument when out of range.
std::uint64_t to_u64(const BigInt& n);

// Deterministic primality. Trial division below 2^20, a fixed-base strong
// pseudoprime test up to 3.3e24; larger inputs are rejected rather than
// accepted on probabilistic evidence.
bool is_prime(const BigInt& n);
BigInt next_prime(const BigInt& n);  // least prime > n

// Distinct prime factors by trial division, ascending.
std::vector<BigInt> prime_factors(const BigInt& n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::int64_t d);

// Number of monic irreducible polynomials of degree `degree` over F_p.
BigInt gauss_irreducible_count(const BigInt& p, std::uint64_t degree);

// Least prime p with p not dividing i and p not in `excluded`.
BigInt smallest_prime_not_dividing(const BigInt& i,
                                   std::span<const BigInt> excluded = {});

// D_Z(i) = min{ m >= 2 : m does not divide i }.
BigInt dz(const BigInt& i);
std::uint64_t dz(std::int64_t i);

}  // namespace resfin

#endif  // RESFIN_NUMBER_THEORY_HPP_
