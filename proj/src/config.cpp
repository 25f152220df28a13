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
#include "meo/config.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "meo/errors.hpp"

namespace meo {

namespace {

std::string trim(const std::string &s)
{
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::uint64_t to_u64(const std::string &v, std::size_t line)
{
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("config line " + std::to_string(line) + ": expected integer, got '" + v +
                         "'",
                     line, "integer");
  return std::stoull(v);
}

using Setter = std::function<void(Config &, const std::string &, std::size_t)>;

std::map<std::string, Setter> setters()
{
  std::map<std::string, Setter> m;
  auto u32 = [](std::uint32_t Config::*field) {
    return [field](Config &c, const std::string &v, std::size_t line) {
      c.*field = static_cast<std::uint32_t>(to_u64(v, line));
    };
  };
  auto list = [](std::vector<std::uint32_t> Config::*field) {
    return [field](Config &c, const std::string &v, std::size_t line) {
      std::vector<std::uint32_t> out;
      std::stringstream ss(v);
      std::string item;
      while (std::getline(ss, item, ','))
        out.push_back(static_cast<std::uint32_t>(to_u64(trim(item), line)));
      c.*field = out;
    };
  };
  m["cap"] = [](Config &c, const std::string &v, std::size_t line) { c.cap = to_u64(v, line); };
  m["landau_brute_max"] = u32(&Config::landau_brute_max);
  m["landau_bound_max"] = u32(&Config::landau_bound_max);
  m["unipotent_dmax"] = u32(&Config::unipotent_dmax);
  m["unipotent_primes"] = list(&Config::unipotent_primes);
  m["divisibility_mmax"] = u32(&Config::divisibility_mmax);
  m["divisibility_kmax"] = u32(&Config::divisibility_kmax);
  m["divisibility_fmax"] = u32(&Config::divisibility_fmax);
  m["divisibility_primes"] = list(&Config::divisibility_primes);
  m["tori_dmax"] = u32(&Config::tori_dmax);
  m["tori_q"] = list(&Config::tori_q);
  m["unitary_dmax"] = u32(&Config::unitary_dmax);
  m["unitary_qmax"] = u32(&Config::unitary_qmax);
  m["quotient_kmax"] = u32(&Config::quotient_kmax);
  m["quotient_tmax"] = u32(&Config::quotient_tmax);
  m["partition_mmin"] = u32(&Config::partition_mmin);
  m["partition_mmax"] = u32(&Config::partition_mmax);
  m["catalog_dmax"] = u32(&Config::catalog_dmax);
  m["catalog_mmax"] = u32(&Config::catalog_mmax);
  m["catalog_qmax"] = u32(&Config::catalog_qmax);
  m["catalog_altmax"] = u32(&Config::catalog_altmax);
  return m;
}

}  // namespace

Config parse_config(std::istream &in)
{
  Config c;
  const auto table = setters();
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos)
      text = text.substr(0, hash);
    text = trim(text);
    if (text.empty())
      continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(line) + ": expected key = value", line,
                       "key = value");
    const std::string key = trim(text.substr(0, eq));
    auto it = table.find(key);
    if (it == table.end())
      throw ParseError("config line " + std::to_string(line) + ": unknown key '" + key + "'",
                       line, "known key");
    it->second(c, trim(text.substr(eq + 1)), line);
  }
  if (c.cap < 1)
    throw ParseError("config: cap must be positive", 0, "cap >= 1");
  return c;
}

Config load_config(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open config file " + path);
  return parse_config(in);
}

void write_config(std::ostream &out, const Config &c)
{
  auto list = [](const std::vector<std::uint32_t> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  out << "cap = " << c.cap << '\n'
      << "landau_brute_max = " << c.landau_brute_max << '\n'
      << "landau_bound_max = " << c.landau_bound_max << '\n'
      << "unipotent_dmax = " << c.unipotent_dmax << '\n'
      << "unipotent_primes = " << list(c.unipotent_primes) << '\n'
      << "divisibility_mmax = " << c.divisibility_mmax << '\n'
      << "divisibility_kmax = " << c.divisibility_kmax << '\n'
      << "divisibility_fmax = " << c.divisibility_fmax << '\n'
      << "divisibility_primes = " << list(c.divisibility_primes) << '\n'
      << "tori_dmax = " << c.tori_dmax << '\n'
      << "tori_q = " << list(c.tori_q) << '\n'
      << "unitary_dmax = " << c.unitary_dmax << '\n'
      << "unitary_qmax = " << c.unitary_qmax << '\n'
      << "quotient_kmax = " << c.quotient_kmax << '\n'
      << "quotient_tmax = " << c.quotient_tmax << '\n'
      << "partition_mmin = " << c.partition_mmin << '\n'
      << "partition_mmax = " << c.partition_mmax << '\n'
      << "catalog_dmax = " << c.catalog_dmax << '\n'
      << "catalog_mmax = " << c.catalog_mmax << '\n'
      << "catalog_qmax = " << c.catalog_qmax << '\n'
      << "catalog_altmax = " << c.catalog_altmax << '\n';
}

}  // namespace meo
