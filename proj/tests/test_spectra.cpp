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
#include <doctest.h>

#include <functional>
#include <set>

#include "meo/builders.hpp"
#include "meo/group.hpp"
#include "meo/spectra.hpp"

using namespace meo;

namespace {

// lcm of every partition of m.
std::set<BigNat> partition_lcms(std::uint32_t m)
{
  std::set<BigNat> out;
  std::function<void(std::uint32_t, std::uint32_t, BigNat)> rec = [&](std::uint32_t left,
                                                                      std::uint32_t maxp,
                                                                      BigNat l) {
    if (left == 0) {
      out.insert(l);
      return;
    }
    for (std::uint32_t p = std::min(left, maxp); p >= 1; --p)
      rec(left - p, p, lcm_big(l, p));
  };
  rec(m, m, 1);
  return out;
}

std::set<BigNat> as_set(const Spectrum &S) { return {S.orders.begin(), S.orders.end()}; }

// Orders in H wr Sym(ell): per cycle of length c of the top permutation, the
// element contributes c times an order of H.
BigNat brute_wreath(const std::vector<BigNat> &spec, std::uint32_t ell)
{
  BigNat best = 1;
  std::function<void(std::uint32_t, std::uint32_t, BigNat)> rec = [&](std::uint32_t left,
                                                                      std::uint32_t maxc,
                                                                      BigNat l) {
    if (left == 0) {
      best = std::max(best, l);
      return;
    }
    for (std::uint32_t c = std::min(left, maxc); c >= 1; --c)
      for (const auto &o : spec)
        rec(left - c, c, lcm_big(l, c * o));
  };
  rec(ell, ell, 1);
  return best;
}

BigNat brute_direct(const std::vector<BigNat> &spec, std::uint32_t ell)
{
  BigNat best = 1;
  std::function<void(std::uint32_t, BigNat)> rec = [&](std::uint32_t left, BigNat l) {
    if (left == 0) {
      best = std::max(best, l);
      return;
    }
    for (const auto &o : spec)
      rec(left - 1, lcm_big(l, o));
  };
  rec(ell, 1);
  return best;
}

Spectrum spec_of(std::vector<BigNat> v) { return make_spectrum(std::move(v), 0, SpectrumSource::Computed); }

}  // namespace

TEST_CASE("landau values")
{
  CHECK(landau(1) == 1);
  CHECK(landau(5) == 6);
  CHECK(landau(7) == 12);
  CHECK(landau(10) == 30);
  CHECK(landau(19) == 420);
  CHECK(landau(30) == 4620);
  auto t = landau_table(100);
  CHECK(t(0) == 1);
  CHECK(t(100) == 232792560);
  for (std::uint32_t m = 1; m <= 100; ++m)
    CHECK(t(m - 1) <= t(m));
}

TEST_CASE("landau matches exhaustive partitions")
{
  for (std::uint32_t m = 1; m <= 30; ++m) {
    CAPTURE(m);
    auto all = partition_lcms(m);
    CHECK(landau(m) == *all.rbegin());
    CHECK(as_set(sym_spectrum(m)) == all);
  }
}

TEST_CASE("sym spectrum matches the oracle")
{
  for (std::uint32_t m = 2; m <= 7; ++m) {
    auto G = enumerate(named_group("Sym(" + std::to_string(m) + ")"));
    CHECK(as_set(spectrum(G)) == as_set(sym_spectrum(m)));
  }
}

TEST_CASE("alt spectrum matches the oracle")
{
  for (std::uint32_t m = 3; m <= 8; ++m) {
    auto G = enumerate(named_group("Alt(" + std::to_string(m) + ")"));
    CHECK(as_set(spectrum(G)) == as_set(alt_spectrum(m)));
    CHECK(alt_spectrum(m).group_order == G.size());
  }
}

TEST_CASE("landau bounds")
{
  for (std::uint32_t m = 3; m <= 2000; ++m) {
    CAPTURE(m);
    auto r = check_landau_bounds(m);
    CHECK(r.lower_ok);
    if (m == 3)
      CHECK_FALSE(r.upper_ok);  // log 3 exceeds the upper expression at m = 3
    else
      CHECK(r.upper_ok);
  }
  CHECK_THROWS(check_landau_bounds(2));
}

TEST_CASE("direct powers")
{
  auto S = spec_of({1, 2, 3, 4, 5});
  CHECK(meo_direct_power(S, 1) == 5);
  CHECK(meo_direct_power(S, 2) == 20);
  CHECK(meo_direct_power(S, 3) == 60);
  CHECK(meo_direct_power(S, 4) == 60);
  for (std::uint32_t ell = 1; ell <= 4; ++ell)
    CHECK(meo_direct_power(sym_spectrum(7), ell) == brute_direct(sym_spectrum(7).orders, ell));
}

TEST_CASE("wreath products against brute force")
{
  const std::vector<Spectrum> specs = {sym_spectrum(5), sym_spectrum(7), spec_of({1, 2, 3, 7}),
                                       spec_of({1, 2, 3, 4, 6, 7, 8}), spec_of({1, 11})};
  for (const auto &S : specs)
    for (std::uint32_t ell = 1; ell <= 5; ++ell) {
      CAPTURE(ell);
      CHECK(meo_wreath(S, ell) == brute_wreath(S.orders, ell));
    }
  CHECK(meo_wreath(spec_of({1, 2, 3, 7}), 1) == 7);
  CHECK(meo_wreath(spec_of({1, 11}), 3) == 33);
}

TEST_CASE("wreath product against an enumerated group")
{
  for (std::uint32_t m = 3; m <= 4; ++m) {
    auto G = enumerate(GroupSource{"", ElementKind::Permutation,
                                   wreath_with_s2(symmetric_generators(m)), {}, nullptr});
    CHECK(G.size() == 2 * (m == 3 ? 36 : 576));
    CHECK(spectrum(G).meo() == meo_wreath(sym_spectrum(m), 2));
  }
}

TEST_CASE("wreath meo dominates the direct power")
{
  for (std::uint32_t m = 5; m <= 20; ++m)
    for (std::uint32_t ell = 1; ell <= 4; ++ell)
      CHECK(meo_wreath(sym_spectrum(m), ell) >= meo_direct_power(sym_spectrum(m), ell));
}
