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
// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "meo/bounds.hpp"
#include "meo/classifier.hpp"
#include "meo/cli.hpp"
#include "meo/config.hpp"
#include "meo/genfile.hpp"
#include "meo/grpdata.hpp"
#include "meo/spectra.hpp"

using namespace meo;

namespace {

struct Outcome {
  bool pass = true;
  bool known_failure = false;  // documented, does not affect the exit code
  std::vector<std::string> details;
  void note(const std::string &s) { details.push_back(s); }
  void fail(const std::string &s)
  {
    pass = false;
    details.push_back("violation: " + s);
  }
};

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

Outcome formulas(const Config &c)
{
  Outcome o;
  auto checks = verify_formulas(c.cap);
  for (const auto &f : checks) {
    std::ostringstream s;
    s << f.group << ": " << f.formula_name << " = " << to_string(f.formula.value)
      << ", oracle = " << (f.error.empty() ? to_string(f.oracle) : f.error);
    if (f.ok())
      o.note(s.str());
    else
      o.fail(s.str());
  }
  o.note(std::to_string(checks.size()) + " groups compared");
  return o;
}

Outcome landau_suite(const Config &c)
{
  Outcome o;
  for (std::uint32_t m = 1; m <= c.landau_brute_max; ++m)
    if (landau(m) != *partition_lcms(m).rbegin())
      o.fail("landau(" + std::to_string(m) + ") differs from brute force");
  o.note("landau(m) equals the partition brute force for m <= " +
         std::to_string(c.landau_brute_max));
  std::vector<std::uint32_t> bad_lower, bad_upper;
  for (std::uint32_t m = 3; m <= c.landau_bound_max; ++m) {
    auto r = check_landau_bounds(m);
    if (!r.lower_ok)
      bad_lower.push_back(m);
    if (!r.upper_ok)
      bad_upper.push_back(m);
  }
  if (!bad_lower.empty())
    o.fail(std::to_string(bad_lower.size()) + " lower bound failures");
  o.note("lower bound holds for 3 <= m <= " + std::to_string(c.landau_bound_max));
  if (bad_upper == std::vector<std::uint32_t>{3}) {
    auto r = check_landau_bounds(3);
    std::ostringstream s;
    s.precision(6);
    s << "upper bound fails only at m = 3: log g(3) = " << r.log_g << " > " << r.upper
      << "; holds for 4 <= m <= " << c.landau_bound_max;
    o.pass = false;
    o.known_failure = o.details.size() == 2;
    o.note(s.str());
  } else if (!bad_upper.empty()) {
    o.fail(std::to_string(bad_upper.size()) + " upper bound failures, first m = " +
           std::to_string(bad_upper.front()));
  } else {
    o.note("upper bound holds throughout");
  }
  return o;
}

Outcome lemma_sweeps(const Config &c)
{
  Outcome o;
  for (const auto &r : {sweep_unipotent(c), sweep_divisibility(c), sweep_quotient_exponent(c),
                        sweep_tori(c), sweep_unitary(c), sweep_partition_count(c),
                        sweep_out_bound(c)}) {
    std::ostringstream s;
    s << r.lemma << " [" << r.box << "]: " << r.checked << " checked, " << r.violations.size()
      << " violations";
    if (r.ok())
      o.note(s.str());
    else
      o.fail(s.str() + ", first: " + r.violations.front());
  }
  // The inequality exceptions of the divisibility lemma, exactly.
  std::set<std::string> seen;
  for (std::uint32_t p : c.divisibility_primes)
    for (std::uint32_t m = 1; m <= c.divisibility_mmax; ++m)
      for (std::uint32_t k = 1; k <= c.divisibility_kmax; ++k)
        for (std::uint32_t f = 1; f <= c.divisibility_fmax; ++f) {
          auto r = check_divisibility_lemma(m, k, f, p);
          const char *part[] = {"(i)", "(ii)", "(iii)"};
          for (int i = 0; i < 3; ++i)
            if (r.applies[i] && !r.inequality[i]) {
              std::ostringstream s;
              s << part[i] << " p=" << p << " k=" << k << " m=" << m << " f=" << f;
              seen.insert(s.str());
            }
        }
  const std::set<std::string> expected = {"(ii) p=2 k=1 m=3 f=1", "(iii) p=2 k=1 m=2 f=1",
                                          "(iii) p=3 k=1 m=2 f=1", "(iii) p=5 k=1 m=2 f=1"};
  std::string list;
  for (const auto &s : seen)
    list += (list.empty() ? "" : "; ") + s;
  if (seen == expected)
    o.note("divisibility inequality fails exactly at the stated exceptions: " + list);
  else
    o.fail("divisibility exceptions differ: " + list);
  return o;
}

Outcome centralizers(const Config &c)
{
  Outcome o;
  for (auto [d, q] : {std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{4u, 2u}}) {
    auto r = check_centralizer_oracle(d, q, c.cap);
    std::ostringstream s;
    s << "GL(" << d << "," << q << "): " << r.checked << " semisimple elements, "
      << r.violations.size() << " violations";
    if (r.ok())
      o.note(s.str());
    else
      o.fail(s.str() + ", first: " + r.violations.front());
  }
  return o;
}

Outcome remark_instance()
{
  Outcome o;
  // An element su of PSp_36(2): s acts with orders 2^(2^i)+1 on blocks of
  // dimension 2^(i+1), i = 0..3, and u is regular unipotent on a 6-space.
  BigNat s_order = 1;
  std::uint32_t dim = 0;
  for (std::uint32_t i = 0; i < 4; ++i) {
    s_order = lcm_big(s_order, pow_big(2, 1u << i) + 1);
    dim += 2u << i;
  }
  const BigNat u_order = max_unipotent_order(6, 2);
  dim += 6;
  const BigNat g = s_order * u_order;
  const BigNat stated = BigNat(8) * 3 * 5 * 17 * 257;
  const BigNat bound = meo_pcsp_bound(18, 2);
  o.note("|s| = 3*5*17*257 = " + to_string(s_order) + ", |u| = " + to_string(u_order) +
         ", dimension " + std::to_string(dim));
  o.note("2^3*3*5*17*257 = " + to_string(stated) + ", bound 2^19/(2-1) = " + to_string(bound));
  if (dim != 36)
    o.fail("construction does not fill dimension 36");
  if (g != stated)
    o.fail("constructed order differs from the stated product");
  if (!(stated <= bound))
    o.fail("stated product exceeds the bound");
  const BigNat quoted = 785460;
  o.note("the decimal value 785460 quoted alongside the product is not equal to it (" +
         to_string(quoted) + " = 2^2*3*5*13*19*53) and exceeds the bound; the product is used");
  return o;
}

Outcome tables(const Config &c)
{
  Outcome o;
  bool ok = true;
  nlohmann::json rep = verify_suite("tables", c, ok);
  const auto &t = rep["tables"];
  std::size_t rows = 0, matched = 0, embedded = 0;
  for (const auto &r : t["pa_table"]) {
    ++rows;
    matched += r["match"].get<bool>() ? 1 : 0;
    if (r["spectrum"] == "embedded") {
      ++embedded;
      o.note("row " + r["socle"].get<std::string>() + " m=" + std::to_string(r["m"].get<int>()) +
             " checked against embedded spectrum of " + r["component"].get<std::string>());
    }
  }
  o.note(std::to_string(matched) + "/" + std::to_string(rows) + " table rows reproduced, " +
         std::to_string(embedded) + " from embedded spectra");
  for (const auto &d : t["main2"]["discrepancies"]) {
    std::string s = d["group"].get<std::string>() + ": " + d["verdict"].get<std::string>();
    if (d["explained"].get<bool>())
      o.note("explained discrepancy " + s + " (" + d["reason"].get<std::string>() + ")");
    else
      o.fail("unexplained discrepancy " + s);
  }
  if (!t["main2"]["listed_not_in_box"].empty())
    o.fail("listed groups missing from the sweep box: " + t["main2"]["listed_not_in_box"].dump());
  if (!ok)
    o.pass = false;
  return o;
}

Outcome diagonal()
{
  Outcome o;
  const std::vector<std::pair<std::string, int>> expect = {
      {"Alt(5)", 15}, {"Alt(6)", 40}, {"PSL(2,7)", 28}, {"PSL(2,8)", 63}};
  for (const auto &[socle, v] : expect) {
    auto r = sd_check(socle);
    std::string s = socle + ": meo = " + to_string(r.meo) + ", |T| = " + to_string(r.omega);
    if (r.meo == v)
      o.note(s);
    else
      o.fail(s + ", expected " + std::to_string(v));
  }
  auto a5 = sd_check("Alt(5)");
  if (4 * a5.meo != a5.omega)
    o.fail("Alt(5) case does not attain n/4");
  else
    o.note("Alt(5) case: 15 = 60/4");
  return o;
}

Outcome crossover()
{
  Outcome o;
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 3; q <= 81; q += 2)
    if (is_prime_power(q))
      qs.push_back(q);
  for (auto [eps, A] : {std::pair{Rational{1, 10}, std::uint64_t(1)},
                        std::pair{Rational{1, 20}, std::uint64_t(2)}}) {
    auto r = psu4_crossover(qs, eps, A);
    std::ostringstream s;
    s << "eps = " << eps.num << "/" << eps.den << ", A = " << A << ": ";
    if (r.first_q)
      s << "q^3+1 exceeds A m(T)^(3/4-eps) from q = " << *r.first_q;
    else
      s << "no crossover in range";
    s << (r.monotone ? ", monotone" : ", not monotone");
    if (r.first_q && r.monotone && r.meo_formula_ok)
      o.note(s.str());
    else
      o.fail(s.str());
  }
  auto tq = three_quarter_sweep(6, 4, 9);
  o.note("meo(Aut T)^4 > m(T)^3 in the sweep box for " + std::to_string(tq.exceptions.size()) +
         " of " + std::to_string(tq.checked) + " groups");
  return o;
}

}  // namespace

int main()
{
  Config c = load_config(data_directory() + "/sweep_box.cfg");
  struct Crit {
    int n;
    const char *name;
    std::function<Outcome()> run;
  };
  const std::vector<Crit> crits = {
      {1, "formula-oracle equivalence", [&] { return formulas(c); }},
      {2, "Landau suite", [&] { return landau_suite(c); }},
      {3, "lemma sweeps", [&] { return lemma_sweeps(c); }},
      {4, "centralizer oracle", [&] { return centralizers(c); }},
      {5, "PSp_36(2) instance", [] { return remark_instance(); }},
      {6, "table reproduction", [&] { return tables(c); }},
      {7, "diagonal type values", [] { return diagonal(); }},
      {8, "PSU_4(q) crossover", [] { return crossover(); }},
  };
  int unexpected = 0;
  for (const auto &cr : crits) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << cr.n << ": " << cr.name;
    if (o.known_failure)
      std::cout << " (documented)";
    std::cout << " [" << static_cast<int>(secs * 10) / 10.0 << " s]\n";
    for (const auto &d : o.details)
      std::cout << "    " << d << "\n";
    if (!o.pass && !o.known_failure)
      ++unexpected;
  }
  std::cout << (unexpected ? "acceptance: unexpected failures\n"
                           : "acceptance: no unexpected failures\n");
  return unexpected ? 1 : 0;
}
