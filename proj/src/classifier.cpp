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
#include "meo/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>
#include <tuple>

#include "meo/builders.hpp"
#include "meo/errors.hpp"
#include "meo/group.hpp"
#include "meo/spectra.hpp"

namespace meo {

const char *to_string(Main2Verdict v)
{
  switch (v) {
  case Main2Verdict::Below: return "below";
  case Main2Verdict::ExceptionListed: return "exception-listed";
  case Main2Verdict::FamilyPSL: return "family-psl";
  case Main2Verdict::FamilyAlt: return "family-alt";
  case Main2Verdict::AboveUnlisted: return "above-unlisted";
  case Main2Verdict::Unknown: return "unknown";
  }
  return "?";
}

const char *to_string(SpectrumOrigin o)
{
  switch (o) {
  case SpectrumOrigin::Oracle: return "oracle";
  case SpectrumOrigin::Embedded: return "embedded";
  case SpectrumOrigin::Formula: return "formula";
  }
  return "?";
}

const char *to_string(Action a)
{
  switch (a) {
  case Action::KSubsets: return "k-subsets";
  case Action::ProjectivePoints: return "points";
  case Action::ProjectiveHyperplanes: return "hyperplanes";
  case Action::ExceptionTable: return "exception-table";
  case Action::SDdiag: return "sd-diagonal";
  case Action::Affine: return "affine";
  }
  return "?";
}

// ------------------------------------------------------------------ main2

std::vector<std::string> main2_exception_names()
{
  return {"M11",      "M12",      "M22",      "M23",      "M24",      "HS",
          "PSU(3,3)", "PSU(3,5)", "PSU(4,3)", "PSp(6,2)", "PSp(8,2)", "PSp(4,3)"};
}

bool main2_listed(const GroupId &T)
{
  static const auto names = main2_exception_names();
  const std::string s = to_string(canonical(T));
  return std::find(names.begin(), names.end(), s) != names.end();
}

Main2Result main2_test(const GroupId &T0)
{
  Main2Result r;
  r.group = canonical(T0);
  const GroupId &T = r.group;
  r.listed = main2_listed(T);
  r.min_degree = min_degree(T);
  r.meo = meo_aut(T);
  if (T.family == Family::Alt || T.family == Family::PSp4_2Prime) {
    r.verdict = Main2Verdict::FamilyAlt;
    return r;
  }
  if (T.family == Family::PSL) {
    r.verdict = Main2Verdict::FamilyPSL;
    return r;
  }
  if (r.listed) {
    r.meo = meo_aut_refined(T);
    r.verdict = Main2Verdict::ExceptionListed;
    return r;
  }
  if (4 * r.meo.value < r.min_degree) {
    r.verdict = Main2Verdict::Below;
    return r;
  }
  r.meo = meo_aut_refined(T);
  if (4 * r.meo.value < r.min_degree)
    r.verdict = Main2Verdict::Below;
  else if (r.meo.exactness == Exactness::Exact)
    r.verdict = Main2Verdict::AboveUnlisted;
  else
    r.verdict = Main2Verdict::Unknown;
  return r;
}

// ---------------------------------------------------------------- ell_max

std::uint32_t ell_max(const Spectrum &S, std::uint32_t m)
{
  if (m < 2)
    throw std::invalid_argument("ell_max: degree must be at least 2");
  std::uint32_t best = 0, fails = 0;
  BigNat mp = 1;
  for (std::uint32_t ell = 1; fails < 3 && ell <= 64; ++ell) {
    mp *= m;
    if (4 * meo_wreath(S, ell) >= mp) {
      best = ell;
      fails = 0;
    } else {
      ++fails;
    }
  }
  return best;
}

std::vector<KSubsetDegree> alt_ksubset_degrees(std::uint32_t m)
{
  if (m < 5)
    throw std::invalid_argument("alt_ksubset_degrees: m >= 5");
  std::vector<KSubsetDegree> out;
  const BigNat g4 = 4 * landau(m);
  BigNat c = 1;
  for (std::uint32_t k = 1; 2 * k < m; ++k) {
    c = c * (m - k + 1) / k;
    out.push_back({k, c, g4 >= c});
  }
  return out;
}

// --------------------------------------------------------------- PA table

const std::vector<TableRow> &pa_table()
{
  static const std::vector<TableRow> rows = {
      {"Alt(5)", 5, 3, "Sym(5)", "points"},
      {"Alt(5)", 6, 3, "Sym(5)", "projective line over GF(5)"},
      {"Alt(5)", 10, 2, "Sym(5)", "2-subsets"},
      {"Alt(6)", 6, 3, "Sym(6)", "points"},
      {"Alt(6)", 10, 2, "Aut(Alt(6))", "projective line over GF(9)"},
      {"Alt(6)", 15, 1, "Sym(6)", "2-subsets"},
      {"Alt(7)", 7, 4, "Sym(7)", "points"},
      {"Alt(7)", 15, 1, "Alt(7)", "points of PG(3,2)"},
      {"Alt(7)", 21, 1, "Sym(7)", "2-subsets"},
      {"Alt(7)", 35, 1, "Sym(7)", "3-subsets"},
      {"Alt(8)", 8, 4, "Sym(8)", "points"},
      {"Alt(8)", 15, 2, "Alt(8)", "points of PG(3,2)"},
      {"Alt(8)", 28, 1, "Sym(8)", "2-subsets"},
      {"Alt(8)", 35, 1, "Sym(8)", "bisections / lines of PG(3,2)"},
      {"Alt(8)", 56, 1, "Sym(8)", "3-subsets"},
      {"Alt(9)", 9, 4, "Sym(9)", "points"},
      {"Alt(9)", 36, 1, "Sym(9)", "2-subsets"},
      {"M11", 11, 3, "M11", "points"},
      {"M11", 12, 3, "M11", "cosets of PSL(2,11)"},
      {"M12", 12, 3, "M12", "points"},
      {"M22", 22, 2, "M22.2", "points"},
      {"M23", 23, 3, "M23", "points"},
      {"M24", 24, 3, "M24", "points"},
      {"HS", 100, 1, "HS.2", "rank 3 graph"},
      {"PSL(2,7)", 7, 2, "PSL(3,2)", "points of PG(2,2)"},
      {"PSL(2,7)", 8, 3, "PGL(2,7)", "projective line"},
      {"PSL(2,7)", 21, 1, "PGL(2,7)", "cosets of D8"},
      {"PSL(2,7)", 28, 1, "PGL(2,7)", "cosets of Sym(3)"},
      {"PSL(2,8)", 9, 2, "PGammaL(2,8)", "projective line"},
      {"PSL(2,8)", 28, 1, "PGammaL(2,8)", "cosets of D18"},
      {"PSL(2,8)", 36, 1, "PGammaL(2,8)", "cosets of D14"},
      {"PSL(2,11)", 11, 2, "PSL(2,11)", "cosets of Alt(5)"},
      {"PSL(2,11)", 12, 3, "PGL(2,11)", "projective line"},
      {"PSL(2,16)", 17, 3, "PGammaL(2,16)", "projective line"},
      {"PSL(2,16)", 68, 1, "PGammaL(2,16)", "cosets of D30"},
      {"PSL(2,19)", 20, 3, "PGL(2,19)", "projective line"},
      {"PSL(2,19)", 57, 1, "PSL(2,19)", "cosets of Alt(5)"},
      {"PSL(2,25)", 26, 2, "PGammaL(2,25)", "projective line"},
      {"PSL(2,49)", 50, 2, "PGammaL(2,49)", "projective line"},
      {"PSL(3,3)", 13, 2, "PSL(3,3)", "points of PG(2,3)"},
      {"PSL(3,3)", 52, 1, "PSL(3,3).2", "flags"},
      {"PSL(3,4)", 21, 2, "PGammaL(3,4)", "points of PG(2,4)"},
      {"PSL(3,4)", 56, 1, "PSL(3,4).2^2", "cosets of Alt(6)"},
      {"PSL(4,3)", 40, 2, "PGL(4,3)", "points of PG(3,3)"},
      {"PSL(4,3)", 130, 1, "Aut(PSL(4,3))", "lines of PG(3,3)"},
      {"PSU(3,3)", 28, 1, "PSU(3,3).2", "isotropic points"},
      {"PSU(3,3)", 36, 1, "PSU(3,3).2", "cosets of PSL(2,7)"},
      {"PSU(3,5)", 50, 1, "PSU(3,5).2", "cosets of Alt(7)"},
      {"PSU(4,3)", 112, 1, "Aut(PSU(4,3))", "totally isotropic lines"},
      {"PSp(6,2)", 28, 1, "Aut(PSp(6,2))", "cosets of O6-(2)"},
      {"PSp(6,2)", 36, 1, "Aut(PSp(6,2))", "cosets of O6+(2)"},
      {"PSp(8,2)", 120, 1, "PSp(8,2)", "cosets of O8-(2)"},
      {"PSp(4,3)", 27, 1, "Aut(PSp(4,3))", "cosets of 2^4:Alt(5)"},
      {"PSp(4,3)", 36, 1, "Aut(PSp(4,3))", "cosets of Sym(6)"},
      {"PSp(4,3)", 40, 1, "Aut(PSp(4,3))", "points of PG(3,3)"},
      {"PSp(4,3)", 45, 1, "Aut(PSp(4,3))", "totally isotropic lines"},
  };
  return rows;
}

std::vector<std::string> table_socles()
{
  std::vector<std::string> out;
  for (const auto &r : pa_table())
    if (out.empty() || out.back() != r.socle)
      out.push_back(r.socle);
  return out;
}

ComponentSpectrum component_spectrum(const std::string &name, std::uint64_t cap)
{
  static std::mutex mu;
  static std::map<std::string, ComponentSpectrum> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end())
      return it->second;
  }
  ComponentSpectrum c;
  static const std::regex sym(R"(^Sym\((\d+)\)$)");
  std::smatch mt;
  if (std::regex_match(name, mt, sym)) {
    c.spectrum = sym_spectrum(static_cast<std::uint32_t>(std::stoul(mt[1])));
    c.origin = SpectrumOrigin::Formula;
  } else if (auto e = embedded_spectrum(name)) {
    c.spectrum = *e;
    c.origin = SpectrumOrigin::Embedded;
  } else {
    c.spectrum = spectrum(enumerate(named_group(name), cap), name);
    c.origin = SpectrumOrigin::Oracle;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(name, c);
  return c;
}

std::vector<RowCheck> check_pa_table(std::uint64_t cap)
{
  std::vector<RowCheck> out;
  std::map<std::string, ComponentSpectrum> checked;
  for (const auto &row : pa_table()) {
    RowCheck rc;
    rc.row = row;
    try {
      auto cs = component_spectrum(row.component, cap);
      if (auto it = checked.find(row.component); it != checked.end())
        cs = it->second;
      // Embedded data is replaced by the oracle whenever the group fits the cap.
      if (cs.origin == SpectrumOrigin::Embedded && cs.spectrum.group_order <= cap) {
        try {
          Spectrum o = spectrum(enumerate(named_group(row.component), cap), row.component);
          if (o.orders != cs.spectrum.orders || o.group_order != cs.spectrum.group_order)
            throw std::runtime_error("embedded spectrum of " + row.component +
                                     " disagrees with the oracle");
          cs = {o, SpectrumOrigin::Oracle};
        } catch (const UnsupportedGroup &) {
        }
      }
      checked[row.component] = cs;
      rc.origin = cs.origin;
      rc.computed = ell_max(cs.spectrum, row.m);
    } catch (const std::exception &e) {
      rc.error = e.what();
    }
    out.push_back(std::move(rc));
  }
  return out;
}

// ------------------------------------------------------------ scan_degrees

namespace {

constexpr std::uint64_t kScanMax = 5000;

std::string pgammal_name(std::uint32_t d, std::uint32_t q)
{
  std::uint32_t p = 0, f = 0;
  is_prime_power(q, &p, &f);
  const std::string args = "(" + std::to_string(d) + "," + std::to_string(q) + ")";
  return (f == 1 ? "PGL" : "PGammaL") + args;
}

BigNat pgammal_order(std::uint32_t d, std::uint32_t q)
{
  std::uint32_t p = 0, f = 0;
  is_prime_power(q, &p, &f);
  BigNat o = pow_big(BigNat(q), d * (d - 1) / 2);
  for (std::uint32_t i = 2; i <= d; ++i)
    o *= pow_big(BigNat(q), i) - 1;
  return o * f;
}

// Highest power l >= 2 with deg^l <= N and 4 meo(H wr Sym(l)) >= deg^l.
struct PowerScan {
  std::vector<std::pair<std::uint32_t, BigNat>> passing;  // (l, meo)
};

PowerScan powers(const Spectrum &S, const BigNat &deg, const BigNat &N)
{
  PowerScan ps;
  BigNat dp = deg;
  for (std::uint32_t ell = 2;; ++ell) {
    dp *= deg;
    if (dp > N)
      break;
    BigNat w = meo_wreath(S, ell);
    if (4 * w >= dp)
      ps.passing.push_back({ell, w});
  }
  return ps;
}

PrimitiveCandidate cand(std::string socle, std::string params, std::uint32_t power, Action a,
                        BigNat degree, MeoValue meo, std::string source)
{
  PrimitiveCandidate c;
  c.socle = std::move(socle);
  c.params = std::move(params);
  c.power = power;
  c.action = a;
  c.degree = std::move(degree);
  c.meo = std::move(meo);
  c.source_table = std::move(source);
  return c;
}

}  // namespace

ScanResult scan_degrees(const BigNat &N, std::uint64_t cap)
{
  if (N > kScanMax)
    throw std::invalid_argument("scan_degrees: degree limit is " + std::to_string(kScanMax));
  ScanResult res;
  res.notes.push_back("affine (HA) type not covered: elementary abelian socle, treated "
                      "separately");
  res.candidates.push_back(cand("C_p^l", "", 1, Action::Affine, 0,
                                {0, Exactness::UpperBound, "out of scope"}, "none"));
  if (N < 5) {
    res.notes.push_back("no primitive group of degree below 5 is covered");
    return res;
  }
  const std::uint64_t n = static_cast<std::uint64_t>(N);

  // Projective spaces.
  for (std::uint32_t d = 2; (std::uint64_t(1) << d) - 1 <= n; ++d) {
    for (std::uint32_t q = 2;; ++q) {
      if (!is_prime_power(q))
        continue;
      BigNat deg = (pow_big(BigNat(q), d) - 1) / (q - 1);
      if (deg > N)
        break;
      GroupId T = psl(d, q);
      if (!is_valid(T))
        continue;
      // The largest group acting on points is PGammaL_d(q); for d = 2 it is Aut(T).
      const std::string comp = pgammal_name(d, q);
      std::uint32_t f = 0;
      is_prime_power(q, nullptr, &f);
      std::optional<Spectrum> S;
      auto load = [&] {
        if (S)
          return;
        if (auto e = embedded_spectrum(comp))
          S = *e;
        else if (pgammal_order(d, q) <= cap)
          S = component_spectrum(comp, cap).spectrum;
      };
      MeoValue mv;
      if (d == 2) {
        mv = meo_aut(T);
      } else if (f == 1) {
        mv = {meo_pgl(d, q), Exactness::Exact, "formula"};
      } else {
        load();
        mv = S ? MeoValue{S->meo(), Exactness::Exact, "spectrum"} : meo_aut(T);
        if (!S)
          mv.exactness = Exactness::UpperBound;
      }
      const std::string params = "d=" + std::to_string(d) + ",q=" + std::to_string(q);
      res.candidates.push_back(
          cand(to_string(T), params, 1, Action::ProjectivePoints, deg, mv, "family"));
      if (d >= 3)
        res.candidates.push_back(
            cand(to_string(T), params, 1, Action::ProjectiveHyperplanes, deg, mv, "family"));
      if (deg * deg > N)
        continue;
      load();
      if (!S) {
        res.notes.push_back(to_string(T) + "^l on points, l >= 2: spectrum of " + comp +
                            " not enumerable within cap");
        continue;
      }
      for (const auto &[ell, w] : powers(*S, deg, N).passing) {
        BigNat dl = pow_big(deg, ell);
        MeoValue wm{w, Exactness::Exact, "wreath"};
        res.candidates.push_back(
            cand(to_string(T), params, ell, Action::ProjectivePoints, dl, wm, "family"));
        if (d >= 3)
          res.candidates.push_back(
              cand(to_string(T), params, ell, Action::ProjectiveHyperplanes, dl, wm, "family"));
      }
    }
  }

  // Alternating groups on k-subsets. For k = 1 the test always passes.
  const std::uint32_t mmax = static_cast<std::uint32_t>(n);
  const LandauTable g = landau_table(mmax);
  for (std::uint32_t m = 5; m <= mmax; ++m) {
    BigNat c = 1;
    for (std::uint32_t k = 1; 2 * k < m; ++k) {
      c = c * (m - k + 1) / k;
      if (c > N)
        break;
      const std::string params = "m=" + std::to_string(m) + ",k=" + std::to_string(k);
      if (4 * g(m) >= c)
        res.candidates.push_back(cand("Alt(" + std::to_string(m) + ")", params, 1,
                                      Action::KSubsets, c, {g(m), Exactness::Exact, "landau"},
                                      "family"));
      if (c * c > N)
        continue;
      Spectrum S = component_spectrum("Sym(" + std::to_string(m) + ")", cap).spectrum;
      for (const auto &[ell, w] : powers(S, c, N).passing)
        res.candidates.push_back(cand("Alt(" + std::to_string(m) + ")", params, ell,
                                      Action::KSubsets, pow_big(c, ell),
                                      {w, Exactness::Exact, "wreath"}, "family"));
    }
  }

  // Exception table rows that are not already present as family actions.
  auto socle_key = [](const std::string &name) {
    return to_string(canonical(parse_group(name).id));
  };
  std::set<std::tuple<std::string, BigNat, std::uint32_t>> seen;
  for (const auto &c : res.candidates)
    if (c.action != Action::Affine)
      seen.insert({socle_key(c.socle), c.degree, c.power});
  for (const auto &row : pa_table()) {
    BigNat deg = row.m;
    for (std::uint32_t ell = 1; ell <= row.ell; ++ell, deg *= row.m) {
      if (deg > N)
        break;
      if (seen.count({socle_key(row.socle), deg, ell}))
        continue;
      MeoValue mv{0, Exactness::UpperBound, "unavailable"};
      try {
        auto cs = component_spectrum(row.component, std::max<std::uint64_t>(cap, 5000000));
        mv = {meo_wreath(cs.spectrum, ell), Exactness::Exact, to_string(cs.origin)};
      } catch (const std::exception &e) {
        res.notes.push_back(row.component + ": " + e.what());
      }
      res.candidates.push_back(cand(row.socle, "m=" + std::to_string(row.m) + " " + row.action,
                                    ell, Action::ExceptionTable, deg, mv, "exceptions"));
    }
  }

  if (N >= 60)
    res.candidates.push_back(cand("Alt(5)", "diagonal", 2, Action::SDdiag, 60,
                                  {15, Exactness::Exact, "coset spectra"}, "sd"));

  std::stable_sort(res.candidates.begin(), res.candidates.end(),
                   [](const PrimitiveCandidate &a, const PrimitiveCandidate &b) {
                     return std::tie(a.degree, a.socle, a.action, a.power, a.params) <
                            std::tie(b.degree, b.socle, b.action, b.power, b.params);
                   });
  return res;
}

nlohmann::json to_json(const PrimitiveCandidate &c)
{
  return {{"degree", to_string(c.degree)},
          {"socle", c.socle},
          {"params", c.params},
          {"action", to_string(c.action)},
          {"ell", c.power},
          {"meo", to_string(c.meo.value)},
          {"exactness", to_string(c.meo.exactness)},
          {"source_table", c.source_table}};
}

// ---------------------------------------------------------------- SD case

SdCheck sd_check(const std::string &socle)
{
  GroupSource A, T;
  if (socle == "Alt(5)") {
    A = named_group("Sym(5)");
    T = named_group("Alt(5)");
  } else if (socle == "Alt(6)" || socle == "PSL(2,8)") {
    std::uint32_t q = socle == "Alt(6)" ? 9 : 8;
    A.perms = linear_action_perms(2, q, {true, true, false}, false);
    T.perms = linear_action_perms(2, q, {false, false, false}, false);
  } else if (socle == "PSL(2,7)") {
    A = named_group("PGL(2,7)");
    T = named_group("PSL(2,7)");
  } else {
    throw UnsupportedGroup("sd_check: no construction for " + socle);
  }
  GroupTable GA = enumerate(A), GT = enumerate(T);
  CosetSpectra cs = coset_spectra(GA, GT);
  std::uint64_t best = 1;
  for (std::size_t c = 0; c < cs.orders.size(); ++c) {
    const auto &o = cs.orders[c];
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i; j < o.size(); ++j)
        best = std::max<std::uint64_t>(best, std::lcm<std::uint64_t>(o[i], o[j]));
    best = std::max<std::uint64_t>(best, 2ull * cs.orders[cs.square_coset[c]].back());
  }
  SdCheck r;
  r.socle = socle;
  r.meo = best;
  r.omega = GT.order();
  r.attains_quarter = 4 * r.meo >= r.omega;
  return r;
}

// --------------------------------------------------------- three quarters

CrossoverReport psu4_crossover(const std::vector<std::uint64_t> &qs, Rational eps,
                               std::uint64_t A)
{
  if (eps.den <= 0 || eps.num < 0)
    throw std::invalid_argument("psu4_crossover: eps must be a nonnegative fraction");
  CrossoverReport r;
  r.eps = eps;
  r.A = A;
  r.qs = qs;
  // exponent 3/4 - eps = a/b
  const std::int64_t a = 3 * eps.den - 4 * eps.num, b = 4 * eps.den;
  bool seen_above = false;
  for (auto q : qs) {
    GroupId T = psu(4, static_cast<std::uint32_t>(q));
    BigNat meo = meo_aut(T).value;
    BigNat want = pow_big(BigNat(q), 3) + 1;
    if (meo != want)
      r.meo_formula_ok = false;
    BigNat m = min_degree(T);
    bool above;
    if (a <= 0)
      above = want > A;
    else
      above = pow_big(want, static_cast<unsigned>(b)) >
              pow_big(BigNat(A), static_cast<unsigned>(b)) * pow_big(m, static_cast<unsigned>(a));
    r.above.push_back(above);
    if (above && !r.first_q)
      r.first_q = q;
    if (seen_above && !above)
      r.monotone = false;
    seen_above = seen_above || above;
  }
  return r;
}

ThreeQuarterSweep three_quarter_sweep(std::uint32_t d_max, std::uint32_t m_max,
                                      std::uint32_t q_max)
{
  ThreeQuarterSweep s;
  for (const auto &T0 : catalog_sweep(d_max, m_max, q_max, 0)) {
    GroupId T = canonical(T0);
    if (T.family == Family::PSL || T.family == Family::Alt || T.family == Family::PSp4_2Prime)
      continue;
    BigNat m = min_degree(T);
    BigNat m3 = m * m * m;
    auto fits = [&](const BigNat &v) { return v * v * v * v <= m3; };
    ++s.checked;
    if (fits(meo_aut(T).value))
      continue;
    MeoValue v = meo_aut_refined(T);
    if (v.exactness == Exactness::Exact && fits(v.value))
      continue;
    s.exceptions.push_back(to_string(T) + " meo " + to_string(v.value) + " (" +
                           to_string(v.exactness) + ") m(T) " + to_string(m));
  }
  return s;
}

// ---------------------------------------------------------------- formulas

std::vector<FormulaCheck> verify_formulas(std::uint64_t cap)
{
  std::vector<FormulaCheck> out;
  auto run = [&](const std::string &name, const std::string &fname, MeoValue f) {
    FormulaCheck c;
    c.group = name;
    c.formula_name = fname;
    c.formula = std::move(f);
    try {
      c.oracle = spectrum(enumerate(named_group(name), cap), name).meo();
    } catch (const std::exception &e) {
      c.error = e.what();
    }
    out.push_back(std::move(c));
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> lin = {
      {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {2, 11}, {2, 13}, {2, 16}, {2, 19},
      {2, 25}, {2, 49}, {3, 2}, {3, 3}, {3, 4}, {4, 2}};
  for (auto [d, q] : lin) {
    const std::string args = "(" + std::to_string(d) + "," + std::to_string(q) + ")";
    run("Aut(PSL" + args + ")", "meo_aut", meo_aut(psl(d, q)));
    run("PGL" + args, "meo_pgl", {meo_pgl(d, q), Exactness::Exact, "formula"});
  }
  for (std::uint32_t q : {3u, 5u}) {
    const std::string args = "(3," + std::to_string(q) + ")";
    run("Aut(PSU" + args + ")", "meo_aut", meo_aut(psu(3, q)));
    run("PGU" + args, "meo_pgu", {meo_pgu(3, q), Exactness::Exact, "formula"});
  }
  run("Aut(PSp(4,3))", "meo_aut", meo_aut_refined(psp(2, 3)));
  run("Aut(PSp(6,2))", "meo_aut", meo_aut_refined(psp(3, 2)));
  return out;
}

}  // namespace meo
