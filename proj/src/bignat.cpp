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

#include "meo/bignat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

namespace meo {

BigNat pow_big(const BigNat &base, unsigned exp)
{
  return boost::multiprecision::pow(base, exp);
}

BigNat gcd_big(const BigNat &a, const BigNat &b)
{
  return boost::multiprecision::gcd(a, b);
}

BigNat lcm_big(const BigNat &a, const BigNat &b)
{
  if (a == 0 || b == 0)
    return 0;
  return a / gcd_big(a, b) * b;
}

std::string to_string(const BigNat &x) { return x.str(); }

std::uint64_t ceil_pow(std::uint64_t p, std::uint64_t d)
{
  std::uint64_t r = 1;
  while (r < d)
    r *= p;
  return r;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

bool is_probable_prime(const BigNat &n)
{
  if (n < 2)
    return false;
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return is_prime_u64(static_cast<std::uint64_t>(n));
  static boost::random::mt19937 gen(12345);
  return boost::multiprecision::miller_rabin_test(n, 30, gen);
}

bool is_prime_power(std::uint64_t q, std::uint32_t *p, std::uint32_t *f)
{
  if (q < 2)
    return false;
  for (std::uint64_t r = 2; r * r <= q; ++r) {
    if (q % r == 0) {
      std::uint32_t e = 0;
      while (q % r == 0) {
        q /= r;
        ++e;
      }
      if (q != 1)
        return false;
      if (p)
        *p = static_cast<std::uint32_t>(r);
      if (f)
        *f = e;
      return true;
    }
  }
  if (p)
    *p = static_cast<std::uint32_t>(q);
  if (f)
    *f = 1;
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n)
{
  std::vector<std::uint32_t> out;
  if (n < 2)
    return out;
  std::vector<bool> sieve(n + 1, true);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (!sieve[i])
      continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
      sieve[j] = false;
  }
  return out;
}

BigNat mod_inverse(const BigNat &a, const BigNat &m)
{
  if (m == 1)
    return 0;
  BigNat old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    BigNat qt = old_r / r;
    BigNat t = old_r - qt * r;
    old_r = r;
    r = t;
    t = old_s - qt * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw std::invalid_argument("mod_inverse: not invertible");
  BigNat res = old_s % m;
  if (res < 0)
    res += m;
  return res;
}

namespace {

// Brent's variant; returns 0 when the budget runs out.
BigNat rho(const BigNat &n, std::uint64_t &budget)
{
  if (n % 2 == 0)
    return 2;
  for (unsigned c = 1; c < 64 && budget > 0; ++c) {
    BigNat y = 2, x, g = 1, q = 1, ys;
    std::uint64_t r = 1;
    auto f = [&](const BigNat &v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i)
        y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = (q * (x > y ? x - y : y - x)) % n;
        }
        g = gcd_big(q, n);
        k += lim;
        if (budget <= lim)
          return 0;
        budget -= lim;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_big(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
  return 0;
}

void factor_rec(const BigNat &n, std::map<BigNat, unsigned> &acc, bool &complete,
                std::uint64_t &budget)
{
  if (n == 1)
    return;
  if (is_probable_prime(n)) {
    ++acc[n];
    return;
  }
  BigNat d = rho(n, budget);
  if (d == 0) {
    complete = false;
    ++acc[n];
    return;
  }
  factor_rec(d, acc, complete, budget);
  factor_rec(n / d, acc, complete, budget);
}

}  // namespace

Factorization factor(BigNat n, std::uint64_t rho_budget)
{
  Factorization out;
  if (n < 1)
    throw std::invalid_argument("factor: n must be positive");
  std::map<BigNat, unsigned> acc;
  for (std::uint32_t p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    if (BigNat(p) * p > n)
      break;
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      acc[p] += e;
    }
  }
  factor_rec(n, acc, out.complete, rho_budget);
  for (auto &kv : acc)
    out.factors.emplace_back(kv.first, kv.second);
  return out;
}

}  // namespace meo
