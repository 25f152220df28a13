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
#include <optional>
#include <string>
#include <vector>

#include "meo/bignat.hpp"
#include "meo/spectrum.hpp"

namespace meo {

enum class Family {
  Alt,
  PSL,
  PSU,
  PSp,
  PSp4_2Prime,  // PSp_4(2)' = Alt(6)
  POmegaOdd,
  POmegaPlus,
  POmegaMinus,
  G2,
  F4,
  E6,
  TwistedE6,
  E7,
  E8,
  Suzuki2B2,
  Ree2G2,
  Steinberg3D4,
  Ree2F4,
  Sporadic,
};

// rank is d for PSL/PSU, m for PSp_{2m}, POmega_{2m+1}, POmega^{+-}_{2m} and
// Alt(m); unused for exceptional types and sporadics.
struct GroupId {
  Family family = Family::Alt;
  std::uint32_t rank = 0;
  std::uint32_t p = 0, f = 0;
  std::string name;  // sporadic name

  std::uint64_t q() const;
  bool operator==(const GroupId &o) const = default;
};

GroupId alt(std::uint32_t m);
GroupId psl(std::uint32_t d, std::uint32_t q);
GroupId psu(std::uint32_t d, std::uint32_t q);
GroupId psp(std::uint32_t m, std::uint32_t q);  // PSp_{2m}(q)
GroupId sporadic(const std::string &name);
GroupId exceptional(Family fam, std::uint32_t q);
GroupId pomega(Family fam, std::uint32_t m, std::uint32_t q);

// Throws UnsupportedGroup unless the parameters give a simple group.
void validate(const GroupId &T);
bool is_valid(const GroupId &T);

std::string to_string(const GroupId &T);
const char *family_name(Family f);

// Resolves exceptional isomorphisms to one representative.
GroupId canonical(const GroupId &T);

// Parsed group specification. Sym/PGL/PGU are almost simple extensions
// named directly rather than simple groups.
struct GroupSpec {
  enum class Kind { Simple, Sym, PGL, PGU } kind = Kind::Simple;
  GroupId id;
  std::uint32_t d = 0, q = 0;  // PGL/PGU parameters, d = m for Sym
  std::string text;
};

// Grammar: Alt(m) Sym(m) PSL(d,q) PGL(d,q) PSU(d,q) PGU(d,q) PSp(2m,q)
// PSp(4,2)' POmega(+|-|o,n,q) 2B2(q) 2G2(q) 3D4(q) 2F4(q) G2(q) F4(q) E6(q)
// 2E6(q) E7(q) E8(q) and sporadic names. ParseError carries the offset.
GroupSpec parse_group(const std::string &text);

enum class Exactness { Exact, UpperBound };
const char *to_string(Exactness e);

struct MeoValue {
  BigNat value;
  Exactness exactness = Exactness::Exact;
  std::string source;  // "formula", "bound", "atlas", "landau"
};

BigNat group_order(const GroupId &T);
BigNat out_order(const GroupId &T);
BigNat min_degree(const GroupId &T);
MeoValue meo_aut(const GroupId &T);
// Exact value from the catalog when one is recorded, otherwise meo_aut.
MeoValue meo_aut_refined(const GroupId &T);
// meo(T) itself for sporadics, Alt(m) with m <= 60 and PSL_2(q).
std::optional<BigNat> meo_simple(const GroupId &T);

BigNat meo_pgl(std::uint32_t d, std::uint64_t q);
BigNat meo_pgu(std::uint32_t d, std::uint64_t q);
BigNat meo_pcsp_bound(std::uint32_t m, std::uint64_t q);

// Exceptional-type bound pieces: alpha bounds the semisimple part, u the
// unipotent part.
BigNat exceptional_alpha(const GroupId &T);
BigNat exceptional_unipotent(const GroupId &T);

struct SporadicInfo {
  std::string name;
  BigNat order, min_degree;
  std::uint32_t out = 1, meo_simple = 1, meo_aut = 1;
};
const std::vector<SporadicInfo> &sporadic_catalog();
std::vector<std::string> sporadic_names();

// Spectra shipped in the data directory for groups above the oracle cap.
std::optional<Spectrum> embedded_spectrum(const std::string &group);
std::vector<std::string> embedded_spectrum_names();

// Every valid GroupId in the box: Alt(5..alt_max), PSL/PSU with d <= d_max,
// PSp/POmega with m <= m_max, exceptional types, all with q <= q_max, plus all
// sporadic groups. Aliases are kept as separate entries.
std::vector<GroupId> catalog_sweep(std::uint32_t d_max, std::uint32_t m_max,
                                   std::uint32_t q_max, std::uint32_t alt_max);

// Reload catalog and spectra files (after changing MEO_ATLAS_DATA).
void reload_catalog();

}  // namespace meo
