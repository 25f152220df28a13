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

#include <algorithm>
#include <functional>
#include <numeric>

#include "meo/bounds.hpp"
#include "meo/config.hpp"
#include "meo/field.hpp"
#include "meo/grpdata.hpp"
#include "meo/matrix.hpp"

using namespace meo;

namespace {

// Exponent of Z_{k1} x ... x Z_{kt} modulo the diagonal copy of Z_k, found by
// taking the maximum order over all elements of the quotient.
std::uint64_t brute_quotient_exponent(std::uint64_t k, const std::vector<std::uint64_t> &ks)
{
  // The subgroup generated by (k1/k, ..., kt/k).
  std::vector<std::uint64_t> gen(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i)
    gen[i] = ks[i] / k;
  auto in_sub = [&](const std::vector<std::uint64_t> &x) {
    for (std::uint64_t j = 0; j < k; ++j) {
      bool eq = true;
      for (std::size_t i = 0; i < ks.size() && eq; ++i)
        eq = x[i] == (j * gen[i]) % ks[i];
      if (eq)
        return true;
    }
    return false;
  };
  std::uint64_t best = 1;
  std::vector<std::uint64_t> x(ks.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ks.size()) {
      std::vector<std::uint64_t> y(ks.size(), 0);
      for (std::uint64_t n = 1;; ++n) {
        for (std::size_t j = 0; j < ks.size(); ++j)
          y[j] = (y[j] + x[j]) % ks[j];
        if (in_sub(y)) {
          best = std::max(best, n);
          return;
        }
      }
    }
    for (x[i] = 0; x[i] < ks[i]; ++x[i])
      rec(i + 1);
  };
  rec(0);
  return best;
}

BigNat signed_value(const SignedPartition &w, std::uint64_t q)
{
  BigNat l = 1;
  for (const auto &s : w) {
    BigNat v = pow_big(BigNat(q), s.a);
    v = s.eps > 0 ? BigNat(v - 1) : BigNat(v + 1);
    l = lcm_big(l, v);
  }
  return l;
}

}  // namespace

TEST_CASE("max unipotent order")
{
  CHECK(max_unipotent_order(5, 2) == 8);
  CHECK(max_unipotent_order(1, 7) == 1);
  CHECK(max_unipotent_order(9, 3) == 9);
  CHECK(max_unipotent_order(10, 3) == 27);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto F = Field::make(p);
    for (std::uint32_t d = 1; d <= 16; ++d)
      CHECK(max_unipotent_order(d, p) == element_order(*F, jordan_block(d)));
  }
}

TEST_CASE("cyclic quotient exponent")
{
  CHECK(cyclic_quotient_exponent(3, {12}) == 4);
  CHECK(cyclic_quotient_exponent(2, {4, 6}) == 12);
  CHECK(cyclic_quotient_exponent(1, {17}) == 17);
  CHECK_THROWS_AS(cyclic_quotient_exponent(3, {4}), std::invalid_argument);
  for (std::uint64_t k = 1; k <= 4; ++k)
    for (std::uint64_t a = k; a <= 12; a += k) {
      CHECK(cyclic_quotient_exponent(k, {a}) == brute_quotient_exponent(k, {a}));
      for (std::uint64_t b = k; b <= 12; b += k)
        CHECK(cyclic_quotient_exponent(k, {a, b}) == brute_quotient_exponent(k, {a, b}));
    }
}

TEST_CASE("divisibility lemma examples")
{
  auto ii = check_divisibility_lemma(3, 1, 1, 2);
  CHECK(ii.applies[1]);
  CHECK_FALSE(ii.inequality[1]);
  CHECK(ii.exceptional[1]);
  CHECK(ii.ok());

  auto iii = check_divisibility_lemma(2, 1, 1, 3);
  CHECK(iii.applies[2]);
  CHECK_FALSE(iii.inequality[2]);
  CHECK(iii.exceptional[2]);
  CHECK(iii.ok());

  auto one = check_divisibility_lemma(1, 2, 1, 5);
  CHECK(one.ok());
  for (bool d : one.divides)
    CHECK(d);
}

TEST_CASE("divisibility lemma exceptions are exactly the stated tuples")
{
  std::vector<std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t m = 1; m <= 10; ++m)
      for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::uint32_t f = 1; f <= 4; ++f) {
          auto r = check_divisibility_lemma(m, k, f, p);
          CHECK(r.ok());
          for (int part = 0; part < 3; ++part) {
            CHECK(r.divides[part]);
            if (r.applies[part] && !r.inequality[part])
              seen.emplace_back(part, p, k, m, f);
          }
        }
  using T = std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>;
  const std::vector<T> expected = {T{1, 2, 1, 3, 1}, T{2, 2, 1, 2, 1}, T{2, 3, 1, 2, 1},
                                   T{2, 5, 1, 2, 1}};
  std::sort(seen.begin(), seen.end());
  auto exp = expected;
  std::sort(exp.begin(), exp.end());
  CHECK(seen == exp);
}

TEST_CASE("signed lcm maximum")
{
  auto r = signed_lcm_max(3, 2);
  CHECK(r.value == 15);
  CHECK(signed_value(r.witness, 2) == 15);
  auto one = signed_lcm_max(1, 7);
  CHECK(one.value == 8);
  REQUIRE(one.witness.size() == 1);
  CHECK(one.witness[0].eps == -1);
  CHECK(signed_lcm_max(6, 2).value <= 128);
  CHECK_THROWS(signed_lcm_max(17, 2));
  CHECK_THROWS(signed_lcm_max(0, 2));
  for (std::uint32_t d = 1; d <= 8; ++d)
    for (std::uint64_t q : {2u, 3u, 4u}) {
      auto s = signed_lcm_max(d, q);
      std::uint32_t sum = 0;
      for (auto &p : s.witness)
        sum += p.a;
      CHECK(sum == d);
      CHECK(signed_value(s.witness, q) == s.value);
      // A Singer cycle is one of the candidates.
      CHECK(s.value >= (pow_big(BigNat(q), d) - 1) / (q - 1));
    }
}

TEST_CASE("tori bound")
{
  for (std::uint32_t d = 1; d <= 12; ++d)
    for (std::uint64_t q : {2u, 3u}) {
      CAPTURE(d);
      CHECK(check_tori_bound(d, q).ok());
    }
}

TEST_CASE("unitary bounds")
{
  auto r = unitary_lcm_bound({1, 2}, 3);
  CHECK(r.lhs == 8);
  CHECK(r.rhs == 8);
  CHECK(r.ok);
  auto m = unitary_mixed_bound(0, 0, 3, 4);
  CHECK(m.ok);
  for (std::uint32_t d = 2; d <= 8; ++d)
    CHECK(unitary_lcm_bound({d}, 5).ok);
}

TEST_CASE("centralizer unipotent bound")
{
  SemisimpleShape s;
  s.parts = {{2, 3}, {1, 1}};
  CHECK(centralizer_unipotent_bound(s, 2) == 4);
  s.parts = {{1, 1}, {3, 1}};
  CHECK(centralizer_unipotent_bound(s, 3) == 1);
  auto rep = check_centralizer_oracle(3, 2);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}

TEST_CASE("partition count bound")
{
  auto r = check_partition_count_bound(2, 8);
  CHECK(r.count == 2027025);
  CHECK(r.ok);
  CHECK(check_partition_count_bound(4, 4).ok);
  CHECK_THROWS(check_partition_count_bound(2, 2));
}

TEST_CASE("out bound")
{
  auto r = check_out_bound(psl(2, 7));
  CHECK(r.lhs == 512);
  CHECK(r.rhs == 28224);
  CHECK(r.ok);
  CHECK(check_out_bound(alt(5)).ok);
}

TEST_CASE("default sweeps are clean")
{
  Config c;
  for (const auto &rep : {sweep_unipotent(c), sweep_quotient_exponent(c), sweep_divisibility(c),
                          sweep_tori(c), sweep_unitary(c), sweep_partition_count(c),
                          sweep_out_bound(c)}) {
    CAPTURE(rep.lemma);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
    auto j = to_json(rep);
    CHECK(j.contains("violations"));
  }
}
