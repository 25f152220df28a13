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

#include <json.hpp>

#include "meo/bignat.hpp"
#include "meo/grpdata.hpp"
#include "meo/spectrum.hpp"

namespace meo {

enum class Main2Verdict { Below, ExceptionListed, FamilyPSL, FamilyAlt, AboveUnlisted, Unknown };
const char *to_string(Main2Verdict v);

struct Main2Result {
  GroupId group;
  Main2Verdict verdict = Main2Verdict::Unknown;
  MeoValue meo;  // value the verdict rests on
  BigNat min_degree;
  bool listed = false;  // member of the exception table
};

// 4 meo(Aut T) < m(T), escalating from bounds to exact catalog values.
Main2Result main2_test(const GroupId &T);
bool main2_listed(const GroupId &T);
std::vector<std::string> main2_exception_names();

// Largest l with 4 meo(H wr Sym(l)) >= m^l, for H with spectrum S of degree m.
// Stops after three consecutive failures; 0 when even l = 1 fails.
std::uint32_t ell_max(const Spectrum &S, std::uint32_t m);

struct KSubsetDegree {
  std::uint32_t k = 0;
  BigNat degree;
  bool pass = false;
};
std::vector<KSubsetDegree> alt_ksubset_degrees(std::uint32_t m);

struct TableRow {
  std::string socle;      // as printed in the table
  std::uint32_t m = 0;    // component degree
  std::uint32_t ell = 0;  // stated maximum power
  std::string component;  // group acting on the m points
  std::string action;
};
const std::vector<TableRow> &pa_table();
std::vector<std::string> table_socles();

enum class SpectrumOrigin { Oracle, Embedded, Formula };
const char *to_string(SpectrumOrigin o);

struct ComponentSpectrum {
  Spectrum spectrum;
  SpectrumOrigin origin = SpectrumOrigin::Oracle;
};
// Sym(m) by formula, then embedded data, then enumeration. Cached.
ComponentSpectrum component_spectrum(const std::string &name, std::uint64_t cap = 5000000);

struct RowCheck {
  TableRow row;
  std::optional<std::uint32_t> computed;
  SpectrumOrigin origin = SpectrumOrigin::Oracle;
  std::string error;  // set when no spectrum could be obtained
  bool match() const { return computed && *computed == row.ell; }
};
std::vector<RowCheck> check_pa_table(std::uint64_t cap = 5000000);

enum class Action { KSubsets, ProjectivePoints, ProjectiveHyperplanes, ExceptionTable, SDdiag, Affine };
const char *to_string(Action a);

struct PrimitiveCandidate {
  std::string socle;
  std::string params;
  std::uint32_t power = 1;
  Action action = Action::KSubsets;
  BigNat degree;
  MeoValue meo;  // of the component wreath product; Affine marker carries 0
  std::string source_table;
};

struct ScanResult {
  std::vector<PrimitiveCandidate> candidates;  // sorted by (degree, socle, action)
  std::vector<std::string> notes;              // undecided powers and the affine marker
};
// Candidates of degree <= N. Powers l >= 2 are decided exactly when the
// component spectrum is available within cap, else listed in notes.
ScanResult scan_degrees(const BigNat &N, std::uint64_t cap = 1000000);
nlohmann::json to_json(const PrimitiveCandidate &c);

struct SdCheck {
  std::string socle;
  BigNat meo;     // of T^2.(Out(T) x Sym(2))
  BigNat omega;   // |T|
  bool attains_quarter = false;  // 4 meo >= |T|
};
// Socle one of Alt(5), Alt(6), PSL(2,7), PSL(2,8).
SdCheck sd_check(const std::string &socle);

struct Rational {
  std::int64_t num = 0, den = 1;
};

struct CrossoverReport {
  Rational eps;
  std::uint64_t A = 1;
  std::vector<std::uint64_t> qs;
  std::vector<bool> above;  // q^3+1 > A m(T)^(3/4-eps), per q
  std::optional<std::uint64_t> first_q;
  bool meo_formula_ok = true;  // meo_aut(PSU_4(q)) = q^3+1 for every q
  bool monotone = true;        // once above, stays above
};
CrossoverReport psu4_crossover(const std::vector<std::uint64_t> &qs, Rational eps,
                               std::uint64_t A);

struct ThreeQuarterSweep {
  std::uint64_t checked = 0;
  std::vector<std::string> exceptions;  // meo(Aut T)^4 > m(T)^3
};
// Non-PSL, non-Alt groups of the catalog box.
ThreeQuarterSweep three_quarter_sweep(std::uint32_t d_max, std::uint32_t m_max,
                                      std::uint32_t q_max);

struct FormulaCheck {
  std::string group;         // the group whose spectrum is enumerated
  std::string formula_name;  // meo_aut, meo_pgl or meo_pgu
  MeoValue formula;
  BigNat oracle;
  std::string error;  // enumeration failure
  bool ok() const { return error.empty() && formula.value == oracle; }
};
// Oracle spectrum maximum against the closed forms for the small classical groups.
std::vector<FormulaCheck> verify_formulas(std::uint64_t cap = 5000000);

}  // namespace meo
