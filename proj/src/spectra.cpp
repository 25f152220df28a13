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
#include "meo/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <type_traits>
#include <set>
#include <stdexcept>

namespace meo {

LandauTable landau_table(std::uint32_t upto)
{
  LandauTable t;
  t.upto = upto;
  t.values.assign(upto + 1, BigNat(1));
  // 0/1 knapsack over primes; each prime contributes one power or nothing.
  for (std::uint32_t p : primes_up_to(upto)) {
    for (std::uint32_t j = upto; j >= p; --j) {
      for (std::uint64_t pk = p; pk <= j; pk *= p) {
        BigNat cand = t.values[j - pk] * pk;
        if (cand > t.values[j])
          t.values[j] = cand;
      }
    }
  }
  return t;
}

BigNat landau(std::uint32_t m)
{
  if (m < 1)
    throw std::invalid_argument("landau: m >= 1");
  return landau_table(m)(m);
}

LandauBoundReport check_landau_bounds(std::uint32_t m, const BigNat &g)
{
  if (m < 3)
    throw std::invalid_argument("check_landau_bounds: m >= 3");
  LandauBoundReport r;
  r.m = m;
  // log of a big integer: scale down by a power of two first.
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(g)) + 1;
  const unsigned shift = bits > 60 ? bits - 60 : 0;
  const double top = static_cast<double>(BigNat(g >> shift));
  r.log_g = std::log(top) + shift * std::log(2.0);
  const double lm = std::log(static_cast<double>(m));
  r.lower = std::sqrt(m * lm / 4.0);
  r.upper = std::sqrt(m * lm) * (1.0 + (std::log(lm) - kLandauA) / (2.0 * lm));
  r.lower_ok = r.lower <= r.log_g + kBoundSlack;
  r.upper_ok = r.log_g <= r.upper + kBoundSlack;
  return r;
}

LandauBoundReport check_landau_bounds(std::uint32_t m)
{
  return check_landau_bounds(m, landau(m));
}

namespace {

// Drop values dividing another value: lcm(x, z) | lcm(y, z) whenever x | y.
void prune_divisors(std::set<BigNat> &s)
{
  std::set<BigNat> keep;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    bool dominated = false;
    for (const auto &y : keep)
      if (y % *it == 0) {
        dominated = true;
        break;
      }
    if (!dominated)
      keep.insert(*it);
  }
  s.swap(keep);
}

}  // namespace

Spectrum sym_spectrum(std::uint32_t m)
{
  if (m < 1)
    throw std::invalid_argument("sym_spectrum: m >= 1");
  // lcms[b][k]: lcms of partitions of b with all parts <= k, built part by part.
  std::vector<std::set<BigNat>> lcms(m + 1);
  lcms[0].insert(1);
  for (std::uint32_t part = 1; part <= m; ++part)
    for (std::uint32_t b = part; b <= m; ++b)
      for (const auto &x : std::set<BigNat>(lcms[b - part]))
        lcms[b].insert(lcm_big(x, part));
  BigNat order = 1;
  for (std::uint32_t i = 2; i <= m; ++i)
    order *= i;
  return make_spectrum(std::vector<BigNat>(lcms[m].begin(), lcms[m].end()), order,
                       SpectrumSource::Computed, "Sym(" + std::to_string(m) + ")");
}

Spectrum alt_spectrum(std::uint32_t m)
{
  if (m < 1)
    throw std::invalid_argument("alt_spectrum: m >= 1");
  // As above, split by the parity of the number of even parts.
  std::vector<std::array<std::set<BigNat>, 2>> lcms(m + 1);
  lcms[0][0].insert(1);
  for (std::uint32_t part = 1; part <= m; ++part)
    for (std::uint32_t b = part; b <= m; ++b)
      for (int par = 0; par < 2; ++par) {
        const int to = par ^ static_cast<int>(part % 2 == 0);
        for (const auto &x : std::set<BigNat>(lcms[b - part][par]))
          lcms[b][to].insert(lcm_big(x, part));
      }
  BigNat order = 1;
  for (std::uint32_t i = 3; i <= m; ++i)
    order *= i;
  return make_spectrum(std::vector<BigNat>(lcms[m][0].begin(), lcms[m][0].end()), order,
                       SpectrumSource::Computed, "Alt(" + std::to_string(m) + ")");
}

BigNat meo_direct_power(const Spectrum &S, std::uint32_t ell)
{
  if (ell < 1)
    throw std::invalid_argument("meo_direct_power: ell >= 1");
  std::set<BigNat> cur{1};
  for (std::uint32_t i = 0; i < ell; ++i) {
    std::set<BigNat> next;
    for (const auto &a : cur)
      for (const auto &o : S.orders)
        next.insert(lcm_big(a, o));
    prune_divisors(next);
    if (next == cur)
      break;
    cur.swap(next);
  }
  return *cur.rbegin();
}

namespace {

// Divisor-maximal elements of v, which is sorted ascending and duplicate free.
template <class N>
std::vector<N> maximal_elements(const std::vector<N> &v)
{
  std::vector<N> keep;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    bool dominated = false;
    for (const auto &y : keep)
      if (y % *it == 0) {
        dominated = true;
        break;
      }
    if (!dominated)
      keep.push_back(*it);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

template <class N>
N wreath_dp(const std::vector<N> &base, std::uint32_t ell)
{
  // states[b]: lcms of lcm(lambda_i * o_i) over cycle lengths summing to b.
  std::vector<std::vector<N>> states(ell + 1);
  states[0].push_back(1);
  for (std::uint32_t b = 1; b <= ell; ++b) {
    std::vector<N> next;
    for (std::uint32_t lambda = 1; lambda <= b; ++lambda)
      for (const auto &x : states[b - lambda])
        for (const auto &o : base) {
          N y = o * lambda;
          if constexpr (std::is_same_v<N, BigNat>)
            next.push_back(lcm_big(x, y));
          else
            next.push_back(std::lcm(x, y));
        }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    states[b] = maximal_elements(next);
  }
  return states[ell].back();
}

}  // namespace

BigNat meo_wreath(const Spectrum &S, std::uint32_t ell)
{
  if (ell < 1)
    throw std::invalid_argument("meo_wreath: ell >= 1");
  std::vector<BigNat> sorted(S.orders.begin(), S.orders.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty())
    sorted.push_back(1);
  const std::vector<BigNat> base = maximal_elements(sorted);
  // Every value is at most (ell * meo)^ell.
  if (pow_big(BigNat(ell) * base.back(), ell) < BigNat(std::numeric_limits<std::int64_t>::max())) {
    std::vector<std::uint64_t> small;
    for (const auto &x : base)
      small.push_back(static_cast<std::uint64_t>(x));
    return BigNat(wreath_dp(small, ell));
  }
  return wreath_dp(base, ell);
}

}  // namespace meo
