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
#include "meo/grpdata.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>

#include <json.hpp>

#include "meo/errors.hpp"
#include "meo/genfile.hpp"
#include "meo/spectra.hpp"

namespace meo {

namespace {

BigNat P(std::uint64_t q, unsigned e)
{
  return pow_big(BigNat(q), e);
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b)
{
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

BigNat gcd_b(std::uint64_t a, const BigNat &b)
{
  return gcd_big(BigNat(a), b);
}

struct Catalog {
  std::vector<SporadicInfo> sporadics;
  std::map<std::string, std::uint32_t> exact;
  std::map<std::string, std::string> aliases;
  std::map<std::string, Spectrum> spectra;
};

std::mutex catalog_mutex;
std::shared_ptr<const Catalog> catalog_ptr;

std::shared_ptr<const Catalog> load_catalog()
{
  auto cat = std::make_shared<Catalog>();
  const std::string dir = data_directory();
  using nlohmann::json;
  {
    std::ifstream in(dir + "/catalog.json");
    if (!in)
      throw std::runtime_error("cannot open " + dir + "/catalog.json");
    json j = json::parse(in);
    if (j.at("schema_version").get<int>() != 1)
      throw std::runtime_error("catalog.json: unsupported schema version");
    for (const auto &s : j.at("sporadics")) {
      SporadicInfo info;
      info.name = s.at("name").get<std::string>();
      info.order = BigNat(s.at("order").get<std::string>());
      info.min_degree = BigNat(s.at("min_degree").get<std::string>());
      info.out = s.at("out").get<std::uint32_t>();
      info.meo_simple = s.at("meo_simple").get<std::uint32_t>();
      info.meo_aut = s.at("meo_aut").get<std::uint32_t>();
      cat->sporadics.push_back(std::move(info));
    }
    for (const auto &e : j.at("exact_meo_aut"))
      cat->exact[e.at("group").get<std::string>()] = e.at("meo_aut").get<std::uint32_t>();
    for (const auto &a : j.at("aliases"))
      cat->aliases[a.at("name").get<std::string>()] = a.at("canonical").get<std::string>();
  }
  {
    std::ifstream in(dir + "/spectra.json");
    if (!in)
      throw std::runtime_error("cannot open " + dir + "/spectra.json");
    json j = json::parse(in);
    if (j.at("schema_version").get<int>() != 1)
      throw std::runtime_error("spectra.json: unsupported schema version");
    for (const auto &s : j.at("spectra")) {
      std::vector<BigNat> orders;
      for (const auto &o : s.at("orders"))
        orders.emplace_back(o.get<std::uint64_t>());
      const std::string name = s.at("group").get<std::string>();
      cat->spectra[name] = make_spectrum(std::move(orders),
                                         BigNat(s.at("order").get<std::string>()),
                                         SpectrumSource::Embedded, name);
    }
  }
  return cat;
}

std::shared_ptr<const Catalog> catalog()
{
  std::lock_guard<std::mutex> lock(catalog_mutex);
  if (!catalog_ptr)
    catalog_ptr = load_catalog();
  return catalog_ptr;
}

const SporadicInfo &sporadic_info(const std::string &name)
{
  for (const auto &s : sporadic_catalog())
    if (s.name == name)
      return s;
  throw UnsupportedGroup("unknown sporadic group " + name);
}

bool is_exceptional(Family f)
{
  switch (f) {
  case Family::G2:
  case Family::F4:
  case Family::E6:
  case Family::TwistedE6:
  case Family::E7:
  case Family::E8:
  case Family::Suzuki2B2:
  case Family::Ree2G2:
  case Family::Steinberg3D4:
  case Family::Ree2F4:
    return true;
  default:
    return false;
  }
}

GroupId with_q(Family fam, std::uint32_t rank, std::uint64_t q)
{
  std::uint32_t p = 0, f = 0;
  if (!is_prime_power(q, &p, &f))
    throw UnsupportedGroup("q = " + std::to_string(q) + " is not a prime power");
  GroupId T;
  T.family = fam;
  T.rank = rank;
  T.p = p;
  T.f = f;
  return T;
}

}  // namespace

std::uint64_t GroupId::q() const
{
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < f; ++i)
    r *= p;
  return r;
}

GroupId alt(std::uint32_t m)
{
  GroupId T;
  T.family = Family::Alt;
  T.rank = m;
  return T;
}

GroupId psl(std::uint32_t d, std::uint32_t q) { return with_q(Family::PSL, d, q); }
GroupId psu(std::uint32_t d, std::uint32_t q) { return with_q(Family::PSU, d, q); }

GroupId psp(std::uint32_t m, std::uint32_t q)
{
  if (m == 2 && q == 2) {
    GroupId T = with_q(Family::PSp4_2Prime, 2, 2);
    return T;
  }
  return with_q(Family::PSp, m, q);
}

GroupId sporadic(const std::string &name)
{
  GroupId T;
  T.family = Family::Sporadic;
  T.name = name;
  return T;
}

GroupId exceptional(Family fam, std::uint32_t q)
{
  if (!is_exceptional(fam))
    throw std::invalid_argument("exceptional: not an exceptional family");
  return with_q(fam, 0, q);
}

GroupId pomega(Family fam, std::uint32_t m, std::uint32_t q)
{
  if (fam != Family::POmegaOdd && fam != Family::POmegaPlus && fam != Family::POmegaMinus)
    throw std::invalid_argument("pomega: not an orthogonal family");
  return with_q(fam, m, q);
}

void validate(const GroupId &T)
{
  auto bad = [&](const std::string &why) {
    throw UnsupportedGroup(to_string(T) + ": " + why);
  };
  if (T.family == Family::Alt) {
    if (T.rank < 5)
      bad("Alt(m) needs m >= 5");
    return;
  }
  if (T.family == Family::Sporadic) {
    sporadic_info(T.name);
    return;
  }
  if (T.p == 0 || T.f == 0 || !is_prime_u64(T.p))
    bad("invalid field");
  if (T.f > 64 || static_cast<double>(T.f) * std::log2(static_cast<double>(T.p)) > 62)
    bad("field too large");
  const std::uint64_t q = T.q();
  switch (T.family) {
  case Family::PSL:
    if (T.rank < 2 || (T.rank == 2 && q <= 3))
      bad("PSL needs d >= 2 and (d,q) != (2,2), (2,3)");
    break;
  case Family::PSU:
    if (T.rank < 3 || (T.rank == 3 && q == 2))
      bad("PSU needs d >= 3 and (d,q) != (3,2)");
    break;
  case Family::PSp:
    if (T.rank < 2 || (T.rank == 2 && q == 2))
      bad("PSp needs m >= 2 and (m,q) != (2,2)");
    break;
  case Family::PSp4_2Prime:
    if (T.rank != 2 || q != 2)
      bad("malformed PSp(4,2)'");
    break;
  case Family::POmegaOdd:
    if (T.rank < 3 || T.p == 2)
      bad("POmega(o,2m+1,q) needs m >= 3 and q odd");
    break;
  case Family::POmegaPlus:
  case Family::POmegaMinus:
    if (T.rank < 4)
      bad("POmega(+-,2m,q) needs m >= 4");
    break;
  case Family::G2:
    if (q < 3)
      bad("G2 needs q >= 3");
    break;
  case Family::Suzuki2B2:
  case Family::Ree2F4:
    if (T.p != 2 || T.f % 2 == 0 || T.f < 3)
      bad("needs q = 2^f with f odd >= 3");
    break;
  case Family::Ree2G2:
    if (T.p != 3 || T.f % 2 == 0 || T.f < 3)
      bad("needs q = 3^f with f odd >= 3");
    break;
  default:
    break;
  }
}

bool is_valid(const GroupId &T)
{
  try {
    validate(T);
    return true;
  } catch (const UnsupportedGroup &) {
    return false;
  }
}

const char *family_name(Family f)
{
  switch (f) {
  case Family::Alt: return "Alt";
  case Family::PSL: return "PSL";
  case Family::PSU: return "PSU";
  case Family::PSp: return "PSp";
  case Family::PSp4_2Prime: return "PSp4(2)'";
  case Family::POmegaOdd: return "POmega";
  case Family::POmegaPlus: return "POmega+";
  case Family::POmegaMinus: return "POmega-";
  case Family::G2: return "G2";
  case Family::F4: return "F4";
  case Family::E6: return "E6";
  case Family::TwistedE6: return "2E6";
  case Family::E7: return "E7";
  case Family::E8: return "E8";
  case Family::Suzuki2B2: return "2B2";
  case Family::Ree2G2: return "2G2";
  case Family::Steinberg3D4: return "3D4";
  case Family::Ree2F4: return "2F4";
  case Family::Sporadic: return "Sporadic";
  }
  return "?";
}

std::string to_string(const GroupId &T)
{
  const std::string q = std::to_string(T.q());
  const std::string r = std::to_string(T.rank);
  switch (T.family) {
  case Family::Alt: return "Alt(" + r + ")";
  case Family::PSL: return "PSL(" + r + "," + q + ")";
  case Family::PSU: return "PSU(" + r + "," + q + ")";
  case Family::PSp: return "PSp(" + std::to_string(2 * T.rank) + "," + q + ")";
  case Family::PSp4_2Prime: return "PSp(4,2)'";
  case Family::POmegaOdd: return "POmega(o," + std::to_string(2 * T.rank + 1) + "," + q + ")";
  case Family::POmegaPlus: return "POmega(+," + std::to_string(2 * T.rank) + "," + q + ")";
  case Family::POmegaMinus: return "POmega(-," + std::to_string(2 * T.rank) + "," + q + ")";
  case Family::Sporadic: return T.name;
  default: return std::string(family_name(T.family)) + "(" + q + ")";
  }
}

GroupId canonical(const GroupId &T)
{
  const auto cat = catalog();
  auto it = cat->aliases.find(to_string(T));
  if (it == cat->aliases.end())
    return T;
  return parse_group(it->second).id;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
  const std::string &s;
  std::size_t i = 0;

  void skip()
  {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  [[noreturn]] void fail(const std::string &msg, const std::string &expected)
  {
    throw ParseError("parse error at offset " + std::to_string(i) + ": " + msg, i, expected);
  }
  void expect(char c)
  {
    skip();
    if (i >= s.size() || s[i] != c)
      fail(std::string("expected '") + c + "'", std::string(1, c));
    ++i;
  }
  bool accept(char c)
  {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string name()
  {
    skip();
    const std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '\''))
      ++i;
    if (i == start)
      fail("expected group name", "group name");
    return s.substr(start, i - start);
  }
  std::uint32_t number()
  {
    skip();
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (i == start)
      fail("expected integer", "integer");
    if (i - start > 9) {
      i = start;
      fail("integer too large", "integer below 10^9");
    }
    return static_cast<std::uint32_t>(std::stoul(s.substr(start, i - start)));
  }
  void end()
  {
    skip();
    if (i != s.size())
      fail("unexpected trailing input", "end of input");
  }
};

const std::map<std::string, Family> &exceptional_names()
{
  static const std::map<std::string, Family> m = {
      {"G2", Family::G2},           {"F4", Family::F4},
      {"E6", Family::E6},           {"2E6", Family::TwistedE6},
      {"E7", Family::E7},           {"E8", Family::E8},
      {"2B2", Family::Suzuki2B2},   {"2G2", Family::Ree2G2},
      {"3D4", Family::Steinberg3D4}, {"2F4", Family::Ree2F4},
  };
  return m;
}

}  // namespace

GroupSpec parse_group(const std::string &text)
{
  GroupSpec spec;
  spec.text = text;
  {
    std::string compact;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        compact += c;
    const auto cat = catalog();
    auto it = cat->aliases.find(compact);
    if (it != cat->aliases.end()) {
      for (const auto &sp : cat->sporadics)
        if (sp.name == it->second) {
          spec.id = sporadic(sp.name);
          return spec;
        }
    }
  }
  Parser ps{text};
  const std::string nm = ps.name();
  ps.skip();
  if (ps.i >= text.size()) {
    for (const auto &sp : sporadic_catalog())
      if (sp.name == nm) {
        spec.id = sporadic(nm);
        return spec;
      }
    ps.i = 0;
    ps.fail("unknown group name '" + nm + "'", "group name or '('");
  }
  ps.expect('(');
  if (nm == "Alt" || nm == "Sym") {
    const std::uint32_t m = ps.number();
    ps.expect(')');
    ps.end();
    if (nm == "Sym") {
      if (m < 1)
        throw UnsupportedGroup("Sym(m) needs m >= 1");
      spec.kind = GroupSpec::Kind::Sym;
      spec.d = m;
      return spec;
    }
    spec.id = alt(m);
    validate(spec.id);
    return spec;
  }
  if (nm == "PSL" || nm == "PGL" || nm == "PSU" || nm == "PGU" || nm == "PSp") {
    const std::uint32_t d = ps.number();
    ps.expect(',');
    const std::uint32_t q = ps.number();
    ps.expect(')');
    const bool prime = ps.accept('\'');
    ps.end();
    if (prime && !(nm == "PSp" && d == 4 && q == 2)) {
      ps.i = text.size();
      ps.fail("derived-group mark only valid for PSp(4,2)'", "end of input");
    }
    if (nm == "PGL" || nm == "PGU") {
      std::uint32_t p = 0;
      if (!is_prime_power(q, &p))
        throw UnsupportedGroup("q = " + std::to_string(q) + " is not a prime power");
      if (d < 2 || (nm == "PGU" && d < 3))
        throw UnsupportedGroup(nm + " dimension out of range");
      spec.kind = nm == "PGL" ? GroupSpec::Kind::PGL : GroupSpec::Kind::PGU;
      spec.d = d;
      spec.q = q;
      return spec;
    }
    if (nm == "PSL")
      spec.id = psl(d, q);
    else if (nm == "PSU")
      spec.id = psu(d, q);
    else {
      if (d % 2 != 0)
        throw UnsupportedGroup("PSp(n,q) needs n even");
      if (d == 4 && q == 2 && !prime)
        throw UnsupportedGroup("PSp(4,2) is not simple; use PSp(4,2)'");
      spec.id = psp(d / 2, q);
    }
    validate(spec.id);
    return spec;
  }
  if (nm == "POmega") {
    ps.skip();
    Family fam;
    if (ps.accept('+'))
      fam = Family::POmegaPlus;
    else if (ps.accept('-'))
      fam = Family::POmegaMinus;
    else if (ps.accept('o'))
      fam = Family::POmegaOdd;
    else
      ps.fail("expected orthogonal type", "+, - or o");
    ps.expect(',');
    const std::uint32_t n = ps.number();
    ps.expect(',');
    const std::uint32_t q = ps.number();
    ps.expect(')');
    ps.end();
    if ((fam == Family::POmegaOdd) != (n % 2 == 1))
      throw UnsupportedGroup("POmega dimension parity does not match type");
    spec.id = pomega(fam, n / 2, q);
    validate(spec.id);
    return spec;
  }
  auto ex = exceptional_names().find(nm);
  if (ex != exceptional_names().end()) {
    const std::uint32_t q = ps.number();
    ps.expect(')');
    ps.end();
    spec.id = exceptional(ex->second, q);
    validate(spec.id);
    return spec;
  }
  ps.i = 0;
  ps.fail("unknown family '" + nm + "'", "family name");
}

// ---------------------------------------------------------------- formulas

const char *to_string(Exactness e)
{
  return e == Exactness::Exact ? "exact" : "upper bound";
}

const std::vector<SporadicInfo> &sporadic_catalog()
{
  return catalog()->sporadics;
}

std::vector<std::string> sporadic_names()
{
  std::vector<std::string> out;
  for (const auto &s : sporadic_catalog())
    out.push_back(s.name);
  return out;
}

std::optional<Spectrum> embedded_spectrum(const std::string &group)
{
  const auto cat = catalog();
  auto it = cat->spectra.find(group);
  if (it == cat->spectra.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::string> embedded_spectrum_names()
{
  std::vector<std::string> out;
  for (const auto &[k, v] : catalog()->spectra)
    out.push_back(k);
  return out;
}

void reload_catalog()
{
  auto fresh = load_catalog();
  std::lock_guard<std::mutex> lock(catalog_mutex);
  catalog_ptr = fresh;
}

BigNat group_order(const GroupId &T)
{
  validate(T);
  const std::uint64_t q = T.q();
  const std::uint32_t r = T.rank;
  auto prod = [&](std::uint32_t from, std::uint32_t to, auto term) {
    BigNat x = 1;
    for (std::uint32_t i = from; i <= to; ++i)
      x *= term(i);
    return x;
  };
  switch (T.family) {
  case Family::Alt: {
    BigNat x = prod(3, r, [](std::uint32_t i) { return BigNat(i); });
    return x;
  }
  case Family::Sporadic:
    return sporadic_info(T.name).order;
  case Family::PSL: {
    BigNat x = P(q, r * (r - 1) / 2) * prod(2, r, [&](std::uint32_t i) { return P(q, i) - 1; });
    return x / gcd_u(r, q - 1);
  }
  case Family::PSU: {
    BigNat x = P(q, r * (r - 1) / 2) * prod(2, r, [&](std::uint32_t i) {
                 return i % 2 == 0 ? P(q, i) - 1 : P(q, i) + 1;
               });
    return x / gcd_u(r, q + 1);
  }
  case Family::PSp4_2Prime:
    return 360;
  case Family::PSp:
  case Family::POmegaOdd: {
    BigNat x = P(q, r * r) * prod(1, r, [&](std::uint32_t i) { return P(q, 2 * i) - 1; });
    return x / gcd_u(2, q - 1);
  }
  case Family::POmegaPlus:
  case Family::POmegaMinus: {
    const bool plus = T.family == Family::POmegaPlus;
    BigNat qm = plus ? P(q, r) - 1 : P(q, r) + 1;
    BigNat x = P(q, r * (r - 1)) * qm *
               prod(1, r - 1, [&](std::uint32_t i) { return P(q, 2 * i) - 1; });
    return x / gcd_b(4, qm);
  }
  case Family::G2:
    return P(q, 6) * (P(q, 6) - 1) * (P(q, 2) - 1);
  case Family::F4:
    return P(q, 24) * (P(q, 12) - 1) * (P(q, 8) - 1) * (P(q, 6) - 1) * (P(q, 2) - 1);
  case Family::E6:
    return P(q, 36) * (P(q, 12) - 1) * (P(q, 9) - 1) * (P(q, 8) - 1) * (P(q, 6) - 1) *
           (P(q, 5) - 1) * (P(q, 2) - 1) / gcd_u(3, q - 1);
  case Family::TwistedE6:
    return P(q, 36) * (P(q, 12) - 1) * (P(q, 9) + 1) * (P(q, 8) - 1) * (P(q, 6) - 1) *
           (P(q, 5) + 1) * (P(q, 2) - 1) / gcd_u(3, q + 1);
  case Family::E7:
    return P(q, 63) * (P(q, 18) - 1) * (P(q, 14) - 1) * (P(q, 12) - 1) * (P(q, 10) - 1) *
           (P(q, 8) - 1) * (P(q, 6) - 1) * (P(q, 2) - 1) / gcd_u(2, q - 1);
  case Family::E8:
    return P(q, 120) * (P(q, 30) - 1) * (P(q, 24) - 1) * (P(q, 20) - 1) * (P(q, 18) - 1) *
           (P(q, 14) - 1) * (P(q, 12) - 1) * (P(q, 8) - 1) * (P(q, 2) - 1);
  case Family::Steinberg3D4:
    return P(q, 12) * (P(q, 8) + P(q, 4) + 1) * (P(q, 6) - 1) * (P(q, 2) - 1);
  case Family::Suzuki2B2:
    return P(q, 2) * (P(q, 2) + 1) * (q - 1);
  case Family::Ree2G2:
    return P(q, 3) * (P(q, 3) + 1) * (q - 1);
  case Family::Ree2F4:
    return P(q, 12) * (P(q, 6) + 1) * (P(q, 4) - 1) * (P(q, 3) + 1) * (q - 1);
  }
  throw UnsupportedGroup("group_order: unsupported family");
}

BigNat out_order(const GroupId &T)
{
  validate(T);
  const std::uint64_t q = T.q();
  const std::uint32_t f = T.f, r = T.rank;
  switch (T.family) {
  case Family::Alt:
    return r == 6 ? 4 : 2;
  case Family::Sporadic:
    return sporadic_info(T.name).out;
  case Family::PSL:
    return BigNat(gcd_u(r, q - 1)) * f * (r >= 3 ? 2 : 1);
  case Family::PSU:
    return BigNat(gcd_u(r, q + 1)) * 2 * f;
  case Family::PSp:
    return BigNat(gcd_u(2, q - 1)) * f * (r == 2 && T.p == 2 ? 2 : 1);
  case Family::PSp4_2Prime:
    return 4;
  case Family::POmegaOdd:
    return BigNat(2) * f;
  case Family::POmegaPlus:
    return gcd_b(4, P(q, r) - 1) * f * (r == 4 ? 6 : 2);
  case Family::POmegaMinus:
    return gcd_b(4, P(q, r) + 1) * 2 * f;
  case Family::G2:
    return BigNat(f) * (T.p == 3 ? 2 : 1);
  case Family::F4:
    return BigNat(f) * (T.p == 2 ? 2 : 1);
  case Family::E6:
    return BigNat(2) * f * gcd_u(3, q - 1);
  case Family::TwistedE6:
    return BigNat(2) * f * gcd_u(3, q + 1);
  case Family::E7:
    return BigNat(f) * gcd_u(2, q - 1);
  case Family::E8:
  case Family::Suzuki2B2:
  case Family::Ree2G2:
  case Family::Ree2F4:
    return f;
  case Family::Steinberg3D4:
    return BigNat(3) * f;
  }
  throw UnsupportedGroup("out_order: unsupported family");
}

BigNat min_degree(const GroupId &T)
{
  validate(T);
  const std::uint64_t q = T.q();
  const std::uint32_t r = T.rank;
  switch (T.family) {
  case Family::Alt:
    return r;
  case Family::Sporadic:
    return sporadic_info(T.name).min_degree;
  case Family::PSL:
    if (r == 2 && (q == 5 || q == 7 || q == 11))
      return q;
    if (r == 2 && q == 9)
      return 6;
    if (r == 4 && q == 2)
      return 8;
    return (P(q, r) - 1) / (q - 1);
  case Family::PSp4_2Prime:
    return 6;
  case Family::PSp:
    if (r == 2 && q == 3)
      return 27;
    if (q == 2)
      return P(2, r - 1) * (P(2, r) - 1);
    return (P(q, 2 * r) - 1) / (q - 1);
  case Family::POmegaOdd:
    if (q == 3)
      return P(3, r) * (P(3, r) - 1) / 2;
    return (P(q, 2 * r) - 1) / (q - 1);
  case Family::POmegaPlus:
    if (q == 2)
      return P(2, r - 1) * (P(2, r) - 1);
    if (q == 3)
      return P(3, r - 1) * (P(3, r) - 1) / 2;
    return (P(q, r) - 1) * (P(q, r - 1) + 1) / (q - 1);
  case Family::POmegaMinus:
    return (P(q, r) + 1) * (P(q, r - 1) - 1) / (q - 1);
  case Family::PSU:
    if (r == 3)
      return q == 5 ? BigNat(50) : P(q, 3) + 1;
    if (r == 4)
      return BigNat(q + 1) * (P(q, 3) + 1);
    if (q == 2 && r % 2 == 0)
      return P(2, r - 1) * (P(2, r) - 1) / 3;
    {
      BigNat a = r % 2 == 0 ? P(q, r) - 1 : P(q, r) + 1;
      BigNat b = (r - 1) % 2 == 0 ? P(q, r - 1) - 1 : P(q, r - 1) + 1;
      return a * b / (P(q, 2) - 1);
    }
  case Family::G2:
    if (q == 3)
      return 351;
    if (q == 4)
      return 416;
    return (P(q, 6) - 1) / (q - 1);
  case Family::F4:
    return (P(q, 12) - 1) * (P(q, 4) + 1) / (q - 1);
  case Family::E6:
    return (P(q, 9) - 1) * (P(q, 8) + P(q, 4) + 1) / (q - 1);
  case Family::E7:
    return (P(q, 14) - 1) * (P(q, 9) + 1) * (P(q, 5) - 1) / (q - 1);
  case Family::E8:
    return (P(q, 30) - 1) * (P(q, 12) + 1) * (P(q, 10) + 1) * (P(q, 6) + 1) / (q - 1);
  case Family::Suzuki2B2:
    return P(q, 2) + 1;
  case Family::Ree2G2:
    return P(q, 3) + 1;
  case Family::Steinberg3D4:
    return (P(q, 8) + P(q, 4) + 1) * (q + 1);
  case Family::TwistedE6:
    return (P(q, 12) - 1) * (P(q, 6) - P(q, 3) + 1) * (P(q, 4) + 1) / (q - 1);
  case Family::Ree2F4:
    return (P(q, 6) + 1) * (P(q, 3) + 1) * (q + 1);
  }
  throw UnsupportedGroup("min_degree: unsupported family");
}

BigNat meo_pgl(std::uint32_t d, std::uint64_t q)
{
  if (d < 2 || q < 2)
    throw std::invalid_argument("meo_pgl: d >= 2");
  return (P(q, d) - 1) / (q - 1);
}

BigNat meo_pgu(std::uint32_t d, std::uint64_t q)
{
  if (d < 3 || q < 2)
    throw std::invalid_argument("meo_pgu: d >= 3");
  std::uint32_t p = 0;
  if (!is_prime_power(q, &p))
    throw std::invalid_argument("meo_pgu: q must be a prime power");
  if (d % 2 == 1) {
    if (q > p)
      return P(q, d - 1) - 1;
    return (P(p, d - 2) + 1) * p;
  }
  if (q > 2)
    return P(q, d - 1) + 1;
  return 4 * (P(2, d - 3) + 1);
}

BigNat meo_pcsp_bound(std::uint32_t m, std::uint64_t q)
{
  if (m < 1 || q < 2)
    throw std::invalid_argument("meo_pcsp_bound: m >= 1, q >= 2");
  return P(q, m + 1) / (q - 1);
}

BigNat exceptional_alpha(const GroupId &T)
{
  const std::uint64_t q = T.q();
  switch (T.family) {
  case Family::E6:
    return BigNat(q + 1) * (P(q, 5) - 1) / gcd_u(3, q - 1);
  case Family::E7:
    return BigNat(q + 1) * (P(q, 2) + 1) * (P(q, 4) + 1);
  case Family::E8:
    return BigNat(q + 1) * (P(q, 2) + q + 1) * (P(q, 5) - 1);
  case Family::F4:
    return BigNat(q + 1) * (P(q, 3) - 1);
  case Family::G2:
    return P(q, 2) + q + 1;
  case Family::Steinberg3D4:
    return P(q, 4) + P(q, 3) - q - 1;
  case Family::TwistedE6:
    return BigNat(q + 1) * (P(q, 2) + 1) * (P(q, 3) - 1) / gcd_u(3, q + 1);
  case Family::Ree2F4:
    // q^2 + sqrt(2q^3) + q + sqrt(2q) + 1 with q = 2^f, f odd
    return P(q, 2) + P(2, (3 * T.f + 1) / 2) + q + P(2, (T.f + 1) / 2) + 1;
  case Family::Ree2G2:
    // q + sqrt(3q) + 1 with q = 3^f, f odd
    return BigNat(q) + P(3, (T.f + 1) / 2) + 1;
  default:
    throw std::invalid_argument("exceptional_alpha: not an exceptional family");
  }
}

BigNat exceptional_unipotent(const GroupId &T)
{
  if (T.p == 2) {
    switch (T.family) {
    case Family::E6: case Family::TwistedE6: case Family::F4: case Family::Ree2F4:
      return 16;
    case Family::E7: case Family::E8:
      return 32;
    case Family::G2: case Family::Steinberg3D4:
      return 8;
    default:
      break;
    }
  }
  // Odd characteristic: Jordan blocks in the minimal module.
  std::uint64_t n = 0;
  switch (T.family) {
  case Family::G2: case Family::Ree2G2: n = 7; break;
  case Family::F4: n = 26; break;
  case Family::E6: case Family::TwistedE6: n = 27; break;
  case Family::E7: n = 56; break;
  case Family::E8: n = 248; break;
  case Family::Steinberg3D4: n = 8; break;
  default:
    throw std::invalid_argument("exceptional_unipotent: unsupported family");
  }
  return ceil_pow(T.p, n);
}

MeoValue meo_aut(const GroupId &T)
{
  validate(T);
  const std::uint64_t q = T.q();
  const std::uint32_t r = T.rank;
  switch (T.family) {
  case Family::Alt:
    if (r == 6)
      return {10, Exactness::Exact, "formula"};
    return {landau(r), Exactness::Exact, "landau"};
  case Family::Sporadic:
    return {sporadic_info(T.name).meo_aut, Exactness::Exact, "atlas"};
  case Family::PSL:
    if (r == 2 && q == 4)
      return {6, Exactness::Exact, "formula"};
    if (r == 3 && q == 2)
      return {8, Exactness::Exact, "formula"};
    return {meo_pgl(r, q), Exactness::Exact, "formula"};
  case Family::PSU:
    if (r == 3 && q == 4)
      return {16, Exactness::Exact, "formula"};
    if (r == 5 && q == 2)
      return {24, Exactness::Exact, "formula"};
    return {meo_pgu(r, q), Exactness::Exact, "formula"};
  case Family::PSp4_2Prime:
    return {10, Exactness::Exact, "formula"};
  case Family::PSp:
  case Family::POmegaOdd:
  case Family::POmegaPlus:
  case Family::POmegaMinus:
    return {meo_pcsp_bound(r, q), Exactness::UpperBound, "bound"};
  case Family::Suzuki2B2: {
    // |Out| * meo(T) = (2k+1)(q + 2^(k+1) + 1) with f = 2k+1
    const std::uint32_t k = (T.f - 1) / 2;
    return {BigNat(T.f) * (BigNat(q) + P(2, k + 1) + 1), Exactness::UpperBound, "bound"};
  }
  default:
    return {exceptional_alpha(T) * exceptional_unipotent(T) * out_order(T),
            Exactness::UpperBound, "bound"};
  }
}

MeoValue meo_aut_refined(const GroupId &T)
{
  MeoValue v = meo_aut(T);
  if (v.exactness == Exactness::Exact)
    return v;
  const auto cat = catalog();
  auto it = cat->exact.find(to_string(canonical(T)));
  if (it != cat->exact.end())
    return {it->second, Exactness::Exact, "atlas"};
  return v;
}

constexpr std::uint32_t kAltSpectrumMax = 60;

std::optional<BigNat> meo_simple(const GroupId &T)
{
  if (T.family == Family::Sporadic)
    return BigNat(sporadic_info(T.name).meo_simple);
  const GroupId C = canonical(T);
  if (C.family == Family::Alt && C.rank <= kAltSpectrumMax)
    return alt_spectrum(C.rank).meo();
  if (C.family == Family::PSL && C.rank == 2) {
    const std::uint64_t q = C.q();
    if (C.p == 2)
      return BigNat(q + 1);
    return BigNat(std::max<std::uint64_t>(C.p, (q + 1) / 2));
  }
  return std::nullopt;
}

std::vector<GroupId> catalog_sweep(std::uint32_t d_max, std::uint32_t m_max,
                                   std::uint32_t q_max, std::uint32_t alt_max)
{
  std::vector<GroupId> out;
  auto add = [&](const GroupId &T) {
    if (is_valid(T))
      out.push_back(T);
  };
  for (std::uint32_t m = 5; m <= alt_max; ++m)
    add(alt(m));
  std::vector<std::uint32_t> qs;
  for (std::uint32_t q = 2; q <= q_max; ++q)
    if (is_prime_power(q))
      qs.push_back(q);
  for (std::uint32_t q : qs) {
    for (std::uint32_t d = 2; d <= d_max; ++d)
      add(psl(d, q));
    for (std::uint32_t d = 3; d <= d_max; ++d)
      add(psu(d, q));
    for (std::uint32_t m = 2; m <= m_max; ++m) {
      add(psp(m, q));
      add(pomega(Family::POmegaOdd, m, q));
      add(pomega(Family::POmegaPlus, m, q));
      add(pomega(Family::POmegaMinus, m, q));
    }
    for (Family fam : {Family::G2, Family::F4, Family::E6, Family::TwistedE6, Family::E7,
                       Family::E8, Family::Suzuki2B2, Family::Ree2G2, Family::Steinberg3D4,
                       Family::Ree2F4})
      add(exceptional(fam, q));
  }
  for (const auto &s : sporadic_catalog())
    out.push_back(sporadic(s.name));
  return out;
}

}  // namespace meo
