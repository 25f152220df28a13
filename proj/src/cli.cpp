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
#include "meo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "meo/bounds.hpp"
#include "meo/builders.hpp"
#include "meo/classifier.hpp"
#include "meo/errors.hpp"
#include "meo/group.hpp"
#include "meo/grpdata.hpp"
#include "meo/spectra.hpp"

namespace meo {

namespace {

using nlohmann::json;

// Verdicts that disagree with the exception table for a documented reason.
const std::map<std::string, std::string> &explained_main2()
{
  static const std::map<std::string, std::string> m = {
      {"POmega(+,8,2)",
       "meo(Aut T) = 30 from the character table of O8+(2).S3 and m(T) = 120, so 4 meo = m(T)"},
      {"POmega(-,8,2)",
       "meo(Aut T) = 30 from the character table of O8-(2).2 and m(T) = 119, so 4 meo > m(T)"},
  };
  return m;
}

// (socle, m) rows of the PA table whose computed l differs for a documented reason.
const std::map<std::pair<std::string, std::uint32_t>, std::string> &explained_rows()
{
  static const std::map<std::pair<std::string, std::uint32_t>, std::string> m = {};
  return m;
}

json report_json(const SweepReport &r) { return to_json(r); }

json verify_lemmas(const Config &c, bool &ok)
{
  json arr = json::array();
  for (const auto &r : lemma_suite(c)) {
    ok = ok && r.ok();
    arr.push_back(report_json(r));
  }
  return arr;
}

json verify_landau(const Config &c, bool &ok)
{
  json out;
  // Table against exhaustive partitions.
  SweepReport brute;
  brute.lemma = "landau_brute_force";
  brute.box = "m<=" + std::to_string(c.landau_brute_max);
  const LandauTable t = landau_table(std::max(c.landau_brute_max, c.landau_bound_max));
  for (std::uint32_t m = 1; m <= c.landau_brute_max; ++m) {
    BigNat best = 1;
    std::vector<std::uint32_t> parts;
    std::function<void(std::uint32_t, std::uint32_t, BigNat)> rec = [&](std::uint32_t left,
                                                                        std::uint32_t mx,
                                                                        BigNat l) {
      if (l > best)
        best = l;
      for (std::uint32_t a = std::min(left, mx); a >= 1; --a)
        rec(left - a, a, lcm_big(l, BigNat(a)));
    };
    rec(m, m, 1);
    ++brute.checked;
    if (best != t(m))
      brute.violations.push_back("m=" + std::to_string(m));
  }
  SweepReport bound;
  bound.lemma = "landau_bounds";
  bound.box = "3<=m<=" + std::to_string(c.landau_bound_max);
  for (std::uint32_t m = 3; m <= c.landau_bound_max; ++m) {
    auto r = check_landau_bounds(m, t(m));
    ++bound.checked;
    if (!r.ok()) {
      std::ostringstream os;
      os << "m=" << m << " log g=" << r.log_g << " lower=" << r.lower << " upper=" << r.upper;
      bound.violations.push_back(os.str());
    }
  }
  ok = ok && brute.ok() && bound.ok();
  out.push_back(report_json(brute));
  out.push_back(report_json(bound));
  return out;
}

json verify_formulas_json(const Config &c, bool &ok)
{
  json arr = json::array();
  for (const auto &f : verify_formulas(c.cap)) {
    ok = ok && f.ok();
    json j = {{"group", f.group},
              {"formula", f.formula_name},
              {"formula_value", to_string(f.formula.value)},
              {"exactness", to_string(f.formula.exactness)},
              {"oracle", f.error.empty() ? to_string(f.oracle) : ""},
              {"ok", f.ok()}};
    if (!f.error.empty())
      j["error"] = f.error;
    arr.push_back(j);
  }
  return arr;
}

json verify_tables(const Config &c, bool &ok)
{
  json out;
  // Exceptions of the main2 threshold.
  json m2 = json::array();
  std::vector<std::string> listed_seen;
  for (const auto &T : catalog_sweep(c.catalog_dmax, c.catalog_mmax, c.catalog_qmax,
                                     c.catalog_altmax)) {
    Main2Result r = main2_test(T);
    if (r.listed)
      listed_seen.push_back(to_string(r.group));
    if (r.verdict == Main2Verdict::AboveUnlisted || r.verdict == Main2Verdict::Unknown) {
      auto it = explained_main2().find(to_string(r.group));
      json j = {{"group", to_string(r.group)},
                {"verdict", to_string(r.verdict)},
                {"meo", to_string(r.meo.value)},
                {"exactness", to_string(r.meo.exactness)},
                {"min_degree", to_string(r.min_degree)},
                {"explained", it != explained_main2().end()}};
      if (it != explained_main2().end())
        j["reason"] = it->second;
      else
        ok = false;
      m2.push_back(j);
    }
  }
  std::sort(listed_seen.begin(), listed_seen.end());
  listed_seen.erase(std::unique(listed_seen.begin(), listed_seen.end()), listed_seen.end());
  json missing = json::array();
  for (const auto &n : main2_exception_names())
    if (!std::binary_search(listed_seen.begin(), listed_seen.end(), n))
      missing.push_back(n);
  if (!missing.empty())
    ok = false;
  out["main2"] = {{"discrepancies", m2}, {"listed_not_in_box", missing}};

  json rows = json::array();
  for (const auto &rc : check_pa_table(c.cap)) {
    json j = {{"socle", rc.row.socle},
              {"m", rc.row.m},
              {"table_ell", rc.row.ell},
              {"component", rc.row.component},
              {"spectrum", to_string(rc.origin)}};
    if (rc.computed)
      j["computed_ell"] = *rc.computed;
    if (!rc.error.empty())
      j["error"] = rc.error;
    j["match"] = rc.match();
    if (!rc.match()) {
      auto it = explained_rows().find({rc.row.socle, rc.row.m});
      if (it != explained_rows().end())
        j["reason"] = it->second;
      else
        ok = false;
    }
    rows.push_back(j);
  }
  out["pa_table"] = rows;

  json sd = json::array();
  const std::map<std::string, int> expect = {
      {"Alt(5)", 15}, {"Alt(6)", 40}, {"PSL(2,7)", 28}, {"PSL(2,8)", 63}};
  for (const auto &[socle, want] : expect) {
    SdCheck s = sd_check(socle);
    bool good = s.meo == want && (socle == "Alt(5)") == s.attains_quarter;
    ok = ok && good;
    sd.push_back({{"socle", socle},
                  {"meo", to_string(s.meo)},
                  {"expected", want},
                  {"degree", to_string(s.omega)},
                  {"attains_quarter", s.attains_quarter},
                  {"ok", good}});
  }
  out["sd"] = sd;
  return out;
}

std::string csv_field(const std::string &s)
{
  if (s.find_first_of(",\"\n\r") == std::string::npos)
    return s;
  std::string o = "\"";
  for (char ch : s) {
    if (ch == '"')
      o += '"';
    o += ch;
  }
  return o + "\"";
}

Spectrum spectrum_for(const GroupSpec &g, std::uint64_t cap, std::string &name)
{
  switch (g.kind) {
  case GroupSpec::Kind::Sym:
    name = "Sym(" + std::to_string(g.d) + ")";
    return sym_spectrum(g.d);
  case GroupSpec::Kind::PGL:
    name = "PGL(" + std::to_string(g.d) + "," + std::to_string(g.q) + ")";
    break;
  case GroupSpec::Kind::PGU:
    name = "PGU(" + std::to_string(g.d) + "," + std::to_string(g.q) + ")";
    break;
  case GroupSpec::Kind::Simple:
    name = to_string(g.id);
    break;
  }
  if (auto e = embedded_spectrum(name))
    return *e;
  return spectrum(enumerate(named_group(name), cap), name);
}

}  // namespace

json verify_suite(const std::string &suite, const Config &c, bool &ok)
{
  json out;
  out["suite"] = suite;
  if (suite == "lemmas" || suite == "all")
    out["lemmas"] = verify_lemmas(c, ok);
  if (suite == "landau" || suite == "all")
    out["landau"] = verify_landau(c, ok);
  if (suite == "formulas" || suite == "all")
    out["formulas"] = verify_formulas_json(c, ok);
  if (suite == "tables" || suite == "all")
    out["tables"] = verify_tables(c, ok);
  if (out.size() == 1)
    throw std::invalid_argument("unknown suite: " + suite);
  out["ok"] = ok;
  return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Maximum element orders of almost simple and primitive groups"};
  app.require_subcommand(1);
  bool as_json = false, as_csv = false;
  std::uint64_t cap = kDefaultCap;
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--csv", as_csv, "CSV output (classify)");
  app.add_option("--cap", cap, "enumeration cap");

  std::string group_text;
  auto *c_meo = app.add_subcommand("meo", "maximum element order of Aut(T), Sym, PGL or PGU");
  c_meo->add_option("group", group_text)->required();
  auto *c_mindeg = app.add_subcommand("mindeg", "minimal permutation degree");
  c_mindeg->add_option("group", group_text)->required();
  auto *c_spec = app.add_subcommand("spectrum", "element orders");
  c_spec->add_option("group", group_text)->required();
  std::uint32_t lm = 0;
  auto *c_landau = app.add_subcommand("landau", "Landau's function g(m)");
  c_landau->add_option("m", lm)->required();
  std::uint64_t degree = 0, max_degree = 0;
  auto *c_class = app.add_subcommand("classify", "primitive groups with an element of order >= n/4");
  auto *o_deg = c_class->add_option("--degree", degree, "exact degree");
  auto *o_max = c_class->add_option("--max-degree", max_degree, "all degrees up to N");
  o_deg->excludes(o_max);
  std::string suite, box;
  auto *c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"lemmas", "landau", "formulas", "tables", "all"}));
  c_verify->add_option("--box", box, "sweep box config file");
  for (auto *sc : {c_meo, c_mindeg, c_spec, c_landau, c_class, c_verify}) {
    sc->add_flag("--json", as_json, "JSON output");
    sc->add_flag("--csv", as_csv, "CSV output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (c_meo->parsed()) {
      GroupSpec g = parse_group(group_text);
      MeoValue v;
      switch (g.kind) {
      case GroupSpec::Kind::Sym: v = {landau(g.d), Exactness::Exact, "landau"}; break;
      case GroupSpec::Kind::PGL: v = {meo_pgl(g.d, g.q), Exactness::Exact, "formula"}; break;
      case GroupSpec::Kind::PGU: v = {meo_pgu(g.d, g.q), Exactness::Exact, "formula"}; break;
      case GroupSpec::Kind::Simple: v = meo_aut_refined(g.id); break;
      }
      if (as_json)
        out << json{{"group", group_text},
                    {"meo", to_string(v.value)},
                    {"exactness", to_string(v.exactness)},
                    {"source", v.source}}
                   .dump()
            << "\n";
      else
        out << to_string(v.value) << " (" << to_string(v.exactness) << ")\n";
    } else if (c_mindeg->parsed()) {
      GroupSpec g = parse_group(group_text);
      if (g.kind == GroupSpec::Kind::PGL || g.kind == GroupSpec::Kind::PGU)
        throw UnsupportedGroup("mindeg takes a simple group or Sym(m), not " + group_text);
      BigNat m = g.kind == GroupSpec::Kind::Sym ? BigNat(g.d) : min_degree(g.id);
      if (as_json)
        out << json{{"group", group_text}, {"min_degree", to_string(m)}}.dump() << "\n";
      else
        out << to_string(m) << "\n";
    } else if (c_landau->parsed()) {
      BigNat g = landau(lm);
      if (as_json)
        out << json{{"m", lm}, {"g", to_string(g)}}.dump() << "\n";
      else
        out << to_string(g) << "\n";
    } else if (c_spec->parsed()) {
      std::string name;
      Spectrum s = spectrum_for(parse_group(group_text), cap, name);
      if (as_json) {
        json orders = json::array();
        for (const auto &o : s.orders)
          orders.push_back(to_string(o));
        out << json{{"group", name},
                    {"order", to_string(s.group_order)},
                    {"orders", orders},
                    {"meo", to_string(s.meo())},
                    {"source", to_string(s.source)}}
                   .dump()
            << "\n";
      } else {
        for (std::size_t i = 0; i < s.orders.size(); ++i)
          out << (i ? " " : "") << to_string(s.orders[i]);
        out << "\n";
      }
    } else if (c_class->parsed()) {
      if (!o_deg->count() && !o_max->count()) {
        err << "classify: one of --degree or --max-degree is required\n";
        return kExitParse;
      }
      const bool exact = o_deg->count() > 0;
      const std::uint64_t N = exact ? degree : max_degree;
      ScanResult sr = scan_degrees(BigNat(N), cap);
      std::vector<PrimitiveCandidate> sel;
      for (const auto &cnd : sr.candidates)
        if (cnd.action == Action::Affine || !exact || cnd.degree == N)
          sel.push_back(cnd);
      if (as_json) {
        json arr = json::array();
        for (const auto &cnd : sel)
          arr.push_back(to_json(cnd));
        out << json{{"candidates", arr}, {"notes", sr.notes}}.dump(2) << "\n";
      } else if (as_csv) {
        out << "degree,socle,params,action,ell,meo,exactness,source_table\n";
        for (const auto &cnd : sel) {
          json j = to_json(cnd);
          out << csv_field(j["degree"]) << "," << csv_field(j["socle"]) << ","
              << csv_field(j["params"]) << "," << csv_field(j["action"]) << "," << cnd.power
              << "," << csv_field(j["meo"]) << "," << csv_field(j["exactness"]) << ","
              << csv_field(j["source_table"]) << "\n";
        }
      } else {
        for (const auto &cnd : sel) {
          if (cnd.action == Action::Affine) {
            out << "affine: out of scope (elementary abelian socle)\n";
            continue;
          }
          out << to_string(cnd.degree) << "  " << cnd.socle;
          if (cnd.power > 1)
            out << "^" << cnd.power;
          out << "  " << to_string(cnd.action) << "  " << cnd.params << "  meo "
              << to_string(cnd.meo.value) << " (" << to_string(cnd.meo.exactness) << ")\n";
        }
        for (const auto &n : sr.notes)
          out << "note: " << n << "\n";
      }
    } else if (c_verify->parsed()) {
      Config cfg = box.empty() ? Config{} : load_config(box);
      if (app.get_option("--cap")->count())
        cfg.cap = cap;
      bool ok = true;
      json rep = verify_suite(suite, cfg, ok);
      out << rep.dump(2) << "\n";
      return ok ? kExitOk : kExitViolation;
    }
  } catch (const ParseError &e) {
    err << e.what() << " (expected " << e.expected() << ")\n";
    return kExitParse;
  } catch (const UnsupportedGroup &e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const CapExceeded &e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument &e) {
    err << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace meo
