// Copyright 2026 The meo Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace meo {

using BigNat = boost::multiprecision::cpp_int;

BigNat pow_big(const BigNat &base, unsigned exp);
BigNat gcd_big(const BigNat &a, const BigNat &b);
BigNat lcm_big(const BigNat &a, const BigNat &b);
std::string to_string(const BigNat &x);

// p^ceil(log_p d); equals 1 for d <= 1.
std::uint64_t ceil_pow(std::uint64_t p, std::uint64_t d);

bool is_prime_u64(std::uint64_t n);
bool is_probable_prime(const BigNat &n);
bool is_prime_power(std::uint64_t q, std::uint32_t *p = nullptr,
                    std::uint32_t *f = nullptr);

struct Factorization {
  std::vector<std::pair<BigNat, unsigned>> factors;  // sorted by prime
  bool complete = true;
};

// Trial division up to 10^6, then Pollard rho with a bounded budget.
Factorization factor(BigNat n, std::uint64_t rho_budget = 2000000);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Inverse of a modulo m (gcd must be 1); m >= 1.
BigNat mod_inverse(const BigNat &a, const BigNat &m);

}  // namespace meo
