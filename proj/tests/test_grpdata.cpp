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

#include <set>

#include "meo/builders.hpp"
#include "meo/errors.hpp"
#include "meo/group.hpp"
#include "meo/grpdata.hpp"
#include "meo/spectra.hpp"

using namespace meo;

namespace {

GroupId id(const std::string &s) { return parse_group(s).id; }

}  // namespace

TEST_CASE("orders of simple groups")
{
  const std::vector<std::pair<const char *, const char *>> cases = {
      {"Alt(8)", "20160"},
      {"PSL(3,4)", "20160"},
      {"PSL(2,49)", "58800"},
      {"PSU(4,3)", "3265920"},
      {"PSp(6,2)", "1451520"},
      {"PSp(4,3)", "25920"},
      {"POmega(+,8,2)", "174182400"},
      {"POmega(-,8,2)", "197406720"},
      {"POmega(o,7,3)", "4585351680"},
      {"G2(3)", "4245696"},
      {"2B2(8)", "29120"},
      {"3D4(2)", "211341312"},
      {"2G2(27)", "10073444472"},
      {"M24", "244823040"},
  };
  for (auto [name, order] : cases) {
    CAPTURE(name);
    CHECK(to_string(group_order(id(name))) == order);
  }
}

TEST_CASE("outer automorphism orders")
{
  CHECK(out_order(id("PSL(2,9)")) == 4);
  CHECK(out_order(id("PSL(2,8)")) == 3);
  CHECK(out_order(id("PSL(3,4)")) == 12);
  CHECK(out_order(id("PSU(4,3)")) == 8);
  CHECK(out_order(id("PSp(4,3)")) == 2);
  CHECK(out_order(id("POmega(+,8,2)")) == 6);
  CHECK(out_order(id("POmega(+,8,3)")) == 24);
  CHECK(out_order(id("G2(3)")) == 2);
  CHECK(out_order(id("2B2(32)")) == 5);
  CHECK(out_order(id("Alt(7)")) == 2);
  CHECK(out_order(id("M12")) == 2);
}

TEST_CASE("minimal degrees")
{
  CHECK(min_degree(id("Alt(9)")) == 9);
  CHECK(min_degree(id("PSL(2,7)")) == 7);
  CHECK(min_degree(id("PSL(2,11)")) == 11);
  CHECK(min_degree(id("PSL(2,13)")) == 14);
  CHECK(min_degree(id("PSL(3,4)")) == 21);
  CHECK(min_degree(id("PSU(3,3)")) == 28);
  CHECK(min_degree(id("PSp(4,3)")) == 27);
  CHECK(min_degree(id("PSp(6,2)")) == 28);
  CHECK(min_degree(id("POmega(+,8,2)")) == 120);
  CHECK(min_degree(id("POmega(-,8,2)")) == 119);
  CHECK(min_degree(id("2B2(8)")) == 65);
  CHECK(min_degree(id("G2(3)")) == 351);
  CHECK(min_degree(id("HS")) == 100);
}

TEST_CASE("meo of automorphism groups, character table values")
{
  // Maximum element orders of Aut(T) read off character tables.
  const std::vector<std::pair<const char *, unsigned>> cases = {
      {"M12", 12},       {"M22", 14},         {"J2", 24},          {"HS", 30},
      {"J3", 34},        {"He", 42},          {"Suz", 40},         {"ON", 56},
      {"Fi22", 42},      {"HN", 60},          {"Fi24'", 84},       {"M", 119},
      {"G2(3)", 18},     {"G2(4)", 24},       {"G2(5)", 31},       {"2B2(32)", 41},
      {"2G2(27)", 37},   {"F4(2)", 40},       {"POmega(o,7,3)", 36}, {"3D4(2)", 28},
      {"PSL(3,4)", 21},  {"PSU(3,5)", 30},    {"PSL(2,16)", 17},   {"POmega(+,8,3)", 56},
      {"PSp(4,4)", 20},  {"POmega(+,8,2)", 30}, {"POmega(-,8,2)", 30},
  };
  for (auto [name, v] : cases) {
    CAPTURE(name);
    auto mv = meo_aut_refined(id(name));
    CHECK(mv.value == v);
    CHECK(mv.exactness == Exactness::Exact);
  }
}

TEST_CASE("closed formulas")
{
  CHECK(meo_pgl(2, 7) == 8);
  CHECK(meo_pgl(3, 2) == 7);
  CHECK(meo_pgl(4, 3) == 40);
  CHECK(meo_pgu(3, 5) == 30);
  CHECK(meo_aut(id("PSL(2,7)")).value == 8);
  CHECK(meo_aut(id("PSL(2,8)")).value == 9);
  CHECK(meo_aut(id("Alt(9)")).value == 20);
  CHECK(meo_aut(id("PSU(4,3)")).value == 28);
  CHECK(meo_pcsp_bound(18, 2) == 524288);
}

TEST_CASE("simple group meo and order against the oracle")
{
  const std::vector<std::string> with_meo = {
      "PSL(2,7)",  "PSL(2,8)",  "PSL(2,11)", "PSL(2,13)", "PSL(2,16)", "PSL(2,19)",
      "PSL(2,25)", "PSL(2,27)", "Alt(5)",    "Alt(6)",    "Alt(7)",    "Alt(8)", "M11"};
  for (const auto &text : with_meo) {
    CAPTURE(text);
    auto S = spectrum(enumerate(named_group(text)));
    CHECK(group_order(id(text)) == S.group_order);
    auto ms = meo_simple(id(text));
    REQUIRE(ms);
    CHECK(*ms == S.meo());
  }
  for (const std::string text : {"PSL(3,3)", "PSL(3,4)", "PSU(3,3)", "PSU(3,4)", "PSp(4,3)"}) {
    CAPTURE(text);
    CHECK(group_order(id(text)) == enumerate(named_group(text)).size());
  }
  CHECK(meo_simple(id("PSp(4,2)'")) == 5);
  CHECK(meo_simple(id("Alt(40)")) == alt_spectrum(40).meo());
  CHECK_FALSE(meo_simple(id("G2(3)")));
}

TEST_CASE("meo of Aut(T) dominates meo(T)")
{
  for (const auto &T : catalog_sweep(6, 4, 16, 20)) {
    CAPTURE(to_string(T));
    auto mv = meo_aut(T);
    if (auto ms = meo_simple(T))
      CHECK(mv.value >= *ms);
    CHECK(min_degree(T) <= group_order(T));
    CHECK(group_order(T) % 4 == 0);  // Feit-Thompson and Burnside
    CHECK(mv.value * mv.value < group_order(T) * out_order(T));
  }
}

TEST_CASE("parser accepts the documented forms")
{
  CHECK(parse_group("PSL(2,7)").id == psl(2, 7));
  CHECK(parse_group(" PSL ( 2 , 7 ) ").id == psl(2, 7));
  CHECK(canonical(parse_group("PSL(3,2)").id) == canonical(psl(2, 7)));
  CHECK(canonical(parse_group("PSL(2,9)").id) == alt(6));
  CHECK(parse_group("PSp(4,2)'").id.family == Family::PSp4_2Prime);
  CHECK(parse_group("Sym(10)").kind == GroupSpec::Kind::Sym);
  CHECK(parse_group("PGL(2,7)").kind == GroupSpec::Kind::PGL);
  CHECK(parse_group("PGU(3,5)").kind == GroupSpec::Kind::PGU);
  CHECK(parse_group("POmega(-,8,2)").id.family == Family::POmegaMinus);
  CHECK(parse_group("2B2(8)").id.family == Family::Suzuki2B2);
  CHECK(parse_group("Co1").id.family == Family::Sporadic);
  CHECK(sporadic_names().size() == 27);
}

TEST_CASE("parser rejects malformed and unsupported input")
{
  CHECK_THROWS_AS(parse_group("Foo(3)"), ParseError);
  CHECK_THROWS_AS(parse_group("PSL(2,7"), ParseError);
  CHECK_THROWS_AS(parse_group("PSL(2,7)x"), ParseError);
  CHECK_THROWS_AS(parse_group(""), ParseError);
  CHECK_THROWS_AS(parse_group("PSL(2,6)"), UnsupportedGroup);
  CHECK_THROWS_AS(parse_group("PSL(2,3)"), UnsupportedGroup);
  CHECK_THROWS_AS(parse_group("PSp(4,2)"), UnsupportedGroup);
  CHECK_THROWS_AS(parse_group("Alt(4)"), UnsupportedGroup);
  CHECK_THROWS_AS(parse_group("2B2(4)"), UnsupportedGroup);
  CHECK_THROWS_AS(parse_group("POmega(+,7,3)"), UnsupportedGroup);
  try {
    parse_group("PSL(2;7)");
    FAIL("no exception");
  } catch (const ParseError &e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("embedded spectra agree with the sporadic catalog")
{
  for (const auto &s : sporadic_catalog()) {
    auto e = embedded_spectrum(s.name);
    if (!e)
      continue;
    CAPTURE(s.name);
    CHECK(e->meo() == s.meo_simple);
    CHECK(e->group_order == s.order);
  }
  auto aut = embedded_spectrum("Aut(PSp(6,2))");
  REQUIRE(aut);
  CHECK(aut->meo() == 15);
}
