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

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "meo/bignat.hpp"
#include "meo/builders.hpp"
#include "meo/errors.hpp"
#include "meo/field.hpp"
#include "meo/genfile.hpp"
#include "meo/group.hpp"
#include "meo/matrix.hpp"
#include "meo/perm.hpp"
#include "meo/poly.hpp"

using namespace meo;

namespace {

std::set<std::uint32_t> order_set(const GroupTable &G)
{
  const auto &o = G.element_orders();
  return {o.begin(), o.end()};
}

std::uint64_t to_u64(const BigNat &x) { return static_cast<std::uint64_t>(x); }

}  // namespace

TEST_CASE("bignat helpers")
{
  CHECK(ceil_pow(2, 1) == 1);
  CHECK(ceil_pow(2, 5) == 8);
  CHECK(ceil_pow(3, 3) == 3);
  CHECK(ceil_pow(3, 4) == 9);
  CHECK(lcm_big(4, 6) == 12);
  CHECK(gcd_big(84, 36) == 12);
  CHECK(pow_big(2, 70) == BigNat(1) << 70);
  std::uint32_t p = 0, f = 0;
  CHECK(is_prime_power(49, &p, &f));
  CHECK(p == 7);
  CHECK(f == 2);
  CHECK_FALSE(is_prime_power(12));
  CHECK_FALSE(is_prime_power(1));
  auto fac = factor(BigNat(785460));
  CHECK(fac.complete);
  BigNat back = 1;
  for (auto &[q, e] : fac.factors)
    back *= pow_big(q, e);
  CHECK(back == 785460);
  CHECK(fac.factors.size() == 6);  // 2^2 3 5 13 19 53
  CHECK(primes_up_to(30).size() == 10);
  CHECK(mod_inverse(3, 7) == 5);
}

TEST_CASE("finite field axioms by exhaustion")
{
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    CAPTURE(q);
    auto F = Field::make(q);
    REQUIRE(F->q() == q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(F->add(a, F->neg(a)) == 0);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->frob(a) == F->pow(a, F->p()));
      CHECK(F->frob_pow(a, F->f()) == a);
      if (a != 0)
        CHECK(F->mul(a, F->inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (std::uint32_t c = 0; c < q; c += (q > 9 ? 3 : 1))
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
    // The primitive element has multiplicative order q - 1.
    const auto g = F->primitive();
    std::uint32_t ord = 1;
    for (auto x = g; x != 1; x = F->mul(x, g))
      ++ord;
    CHECK(ord == q - 1);
    // Round trip through the polynomial basis.
    for (std::uint32_t a = 0; a < q; ++a)
      CHECK(F->encode(F->decode(a)) == a);
  }
}

TEST_CASE("field element orders in the polynomial basis")
{
  auto spec = make_field_spec(2, 4);
  auto F = Field::make(16);
  std::set<std::uint64_t> seen;
  for (std::uint32_t a = 1; a < 16; ++a)
    seen.insert(to_u64(mult_order(F->decode(a), spec)));
  CHECK(seen == std::set<std::uint64_t>{1, 3, 5, 15});
}

TEST_CASE("permutations")
{
  Perm a{{1, 2, 0, 4, 3}};
  CHECK(is_permutation(a.images));
  CHECK_FALSE(is_permutation({0, 0, 1}));
  CHECK(element_order(a) == 6);
  CHECK(cycle_type(a) == std::vector<std::uint32_t>{3, 2});
  CHECK(perm_mul(a, perm_inverse(a)) == identity_perm(5));
  Perm b{{1, 0, 2, 3, 4}};
  // a acts first: 0 -> 1 -> 0.
  CHECK(perm_mul(a, b).images[0] == 0);
}

TEST_CASE("matrix orders agree with iteration")
{
  auto F = Field::make(5);
  auto G = enumerate_group(gl_generators(*F, 2), F, false);
  REQUIRE(G.size() == 480);
  for (std::size_t i = 0; i < G.size(); ++i) {
    Matrix m = G.matrix_at(i);
    const BigNat o = element_order(*F, m);
    CHECK(o == G.element_orders()[i]);
    CHECK(o == order_by_iteration(*F, m, false, 1000));
    CHECK(is_identity(mat_pow(*F, m, o)));
    auto inv = inverse(*F, m);
    REQUIRE(inv);
    CHECK(is_identity(mat_mul(*F, m, *inv)));
  }
}

TEST_CASE("projective orders agree with iteration")
{
  auto F = Field::make(4);
  auto G = enumerate_group(gl_generators(*F, 3), F, true);
  REQUIRE(G.size() == 60480);  // |PGL_3(4)|
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    std::size_t i = rng() % G.size();
    Matrix m = G.matrix_at(i);
    CHECK(element_order(*F, m, true) == G.element_orders()[i]);
    CHECK(element_order(*F, m, true) == order_by_iteration(*F, m, true, 1000));
  }
}

TEST_CASE("jordan blocks have the prime power order")
{
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto F = Field::make(p);
    for (std::uint32_t b = 1; b <= 12; ++b)
      CHECK(element_order(*F, jordan_block(b)) == ceil_pow(p, b));
  }
}

TEST_CASE("jordan decomposition over every element of small groups")
{
  for (auto [d, q] : {std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{2u, 9u}}) {
    CAPTURE(q);
    auto F = Field::make(q);
    auto G = enumerate_group(gl_generators(*F, d), F, false);
    for (std::size_t i = 0; i < G.size(); ++i) {
      Matrix g = G.matrix_at(i);
      auto [s, u] = jordan_decompose(*F, g);
      CHECK(mat_mul(*F, s, u) == g);
      CHECK(mat_mul(*F, s, u) == mat_mul(*F, u, s));
      BigNat os = element_order(*F, s), ou = element_order(*F, u);
      CHECK(os % F->p() != 0);
      BigNat x = ou;
      while (x % F->p() == 0)
        x /= F->p();
      CHECK(x == 1);
      CHECK(lcm_big(os, ou) == element_order(*F, g));
      CHECK(semisimple_shape(*F, s).dimension() == d);
    }
  }
}

TEST_CASE("polynomial factorization reconstructs the input")
{
  auto F = Field::make(2);
  Poly x3p1{1, 0, 0, 1};
  auto fac = factor_poly(*F, x3p1);
  CHECK(fac.size() == 2);
  Poly prod{1};
  for (auto &[f, e] : fac)
    for (unsigned k = 0; k < e; ++k)
      prod = poly_mul(*F, prod, f);
  CHECK(prod == x3p1);

  auto F3 = Field::make(3);
  Poly sq = poly_mul(*F3, Poly{1, 1}, Poly{1, 1});  // (x + 1)^2
  auto f2 = factor_poly(*F3, poly_mul(*F3, sq, Poly{1, 0, 1}));
  std::multiset<std::pair<int, unsigned>> shape;
  for (auto &[f, e] : f2)
    shape.insert({poly_degree(f), e});
  CHECK(shape == std::multiset<std::pair<int, unsigned>>{{1, 2}, {2, 1}});
}

TEST_CASE("classical group orders")
{
  auto F2 = Field::make(2), F3 = Field::make(3), F4 = Field::make(4), F9 = Field::make(9);
  CHECK(enumerate_group(sl_generators(*F3, 2), F3, false).size() == 24);
  CHECK(enumerate_group(sl_generators(*F3, 2), F3, true).size() == 12);
  CHECK(enumerate_group(sl_generators(*F2, 3), F2, false).size() == 168);
  CHECK(enumerate_group(sl_generators(*F2, 4), F2, false).size() == 20160);
  CHECK(enumerate_group(sp_generators(*F2, 2), F2, false).size() == 720);
  CHECK(enumerate_group(sp_generators(*F3, 2), F3, true).size() == 25920);
  CHECK(enumerate_group(gu_generators(*F4, 2), F4, false).size() == 18);
  CHECK(enumerate_group(su_generators(*F9, 3), F9, true).size() == 6048);

  auto J = symplectic_form(2, *F3);
  for (auto &g : sp_generators(*F3, 2))
    CHECK(preserves_symplectic(*F3, g, J));
  auto U = unitary_form(3);
  for (auto &g : gu_generators(*F9, 3))
    CHECK(preserves_unitary(*F9, g, U));
}

TEST_CASE("named groups and their spectra")
{
  struct Case {
    const char *name;
    std::uint64_t order;
    std::set<std::uint32_t> orders;
  };
  const std::vector<Case> cases = {
      {"Alt(5)", 60, {1, 2, 3, 5}},
      {"Sym(6)", 720, {1, 2, 3, 4, 5, 6}},
      {"Aut(Alt(6))", 1440, {1, 2, 3, 4, 5, 6, 8, 10}},
      {"PSL(2,7)", 168, {1, 2, 3, 4, 7}},
      {"PGL(2,7)", 336, {1, 2, 3, 4, 6, 7, 8}},
      {"PGammaL(2,8)", 1512, {1, 2, 3, 6, 7, 9}},
      {"PSU(3,3)", 6048, {1, 2, 3, 4, 6, 7, 8, 12}},
      {"M11", 7920, {1, 2, 3, 4, 5, 6, 8, 11}},
  };
  for (const auto &c : cases) {
    CAPTURE(c.name);
    auto G = enumerate(named_group(c.name));
    CHECK(G.size() == c.order);
    CHECK(order_set(G) == c.orders);
    auto S = spectrum(G, c.name);
    CHECK(S.meo() == *c.orders.rbegin());
    CHECK(S.group_order == c.order);
  }
}

TEST_CASE("table lookup and products")
{
  auto G = enumerate(named_group("Sym(4)"));
  CHECK(G.identity_index() == 0);
  for (std::size_t a = 0; a < G.size(); ++a) {
    auto enc = G.encode(G.perm_at(a));
    CHECK(G.index_of(enc.data()) == a);
    CHECK(G.multiply_index(a, 0) == a);
  }
}

TEST_CASE("cap and malformed input")
{
  CHECK_THROWS_AS(enumerate(named_group("Sym(9)"), 1000), CapExceeded);
  CHECK_THROWS_AS(named_group("Foo(3)"), UnsupportedGroup);
  std::istringstream bad("1 0 0\n");
  CHECK_THROWS_AS(parse_generators(bad), ParseError);
  std::istringstream mixed("1 0\n0 1 2\n");
  CHECK_THROWS_AS(parse_generators(mixed), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_generators(empty), ParseError);
}

TEST_CASE("generator files round trip")
{
  auto src = named_group("Alt(6)");
  std::ostringstream out;
  write_generators(out, src);
  std::istringstream in(out.str());
  auto back = parse_generators(in, "Alt(6)");
  CHECK(enumerate(back).size() == 360);
}
