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
#include "meo/genfile.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "meo/errors.hpp"

namespace meo {

namespace {

std::uint32_t parse_uint(const std::string &tok, std::size_t line, const char *what)
{
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected " + std::string(what) + ", got '" + tok + "'", line, what);
  return static_cast<std::uint32_t>(std::stoul(tok));
}

Matrix parse_matrix_line(const std::string &text, std::size_t line, GroupSource &src)
{
  const auto colon = text.find(':');
  std::istringstream head(text.substr(0, colon)), body(text.substr(colon + 1));
  std::string t;
  std::uint32_t v[4];
  const char *names[4] = {"dimension", "field order", "characteristic", "degree"};
  for (int i = 0; i < 4; ++i) {
    if (!(head >> t))
      throw ParseError("matrix header too short", line, names[i]);
    v[i] = parse_uint(t, line, names[i]);
  }
  const std::uint32_t d = v[0], q = v[1], p = v[2], f = v[3];
  std::uint32_t pp = 0, ff = 0;
  if (!is_prime_power(q, &pp, &ff) || pp != p || ff != f || q > 256)
    throw ParseError("inconsistent field parameters", line, "q = p^f <= 256");
  if (!src.field)
    src.field = Field::make(q);
  else if (src.field->q() != q)
    throw ParseError("generators over different fields", line, "same field");
  Matrix m(d);
  for (std::uint32_t k = 0; k < d * d; ++k) {
    if (!(body >> t))
      throw ParseError("too few matrix entries", line, "field element");
    FieldElem x;
    std::stringstream parts(t);
    std::string c;
    while (std::getline(parts, c, ',')) {
      std::uint32_t val = parse_uint(c, line, "coefficient");
      if (val >= p)
        throw ParseError("coefficient out of range", line, "residue mod p");
      x.coeffs.push_back(val);
    }
    if (x.coeffs.size() > f)
      throw ParseError("too many coefficients", line, "at most f coefficients");
    x.coeffs.resize(f, 0);
    m.e[k] = src.field->encode(x);
  }
  if (body >> t)
    throw ParseError("too many matrix entries", line, "end of line");
  return m;
}

}  // namespace

GroupSource parse_generators(std::istream &in, const std::string &name)
{
  GroupSource src;
  src.name = name;
  std::string text;
  std::size_t line = 0;
  bool have_kind = false;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#')
      continue;
    const bool is_matrix = text.find(':') != std::string::npos;
    if (have_kind && is_matrix != (src.kind != ElementKind::Permutation))
      throw ParseError("mixed element kinds", line, "same kind as previous lines");
    if (!have_kind) {
      src.kind = is_matrix ? ElementKind::Matrix : ElementKind::Permutation;
      have_kind = true;
    }
    if (is_matrix) {
      src.mats.push_back(parse_matrix_line(text, line, src));
      if (src.mats.back().dim != src.mats.front().dim)
        throw ParseError("generators of different dimension", line, "same dimension");
      continue;
    }
    std::istringstream ss(text);
    std::string t;
    Perm g;
    while (ss >> t)
      g.images.push_back(parse_uint(t, line, "point"));
    if (!is_permutation(g.images))
      throw ParseError("not a permutation", line, "bijective image list");
    if (!src.perms.empty() && g.degree() != src.perms.front().degree())
      throw ParseError("generators of different degree", line, "same degree");
    src.perms.push_back(std::move(g));
  }
  if (!have_kind)
    throw ParseError("no generators", line, "at least one generator");
  return src;
}

GroupSource read_generator_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open generator file " + path);
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (auto dot = name.rfind(".txt"); dot != std::string::npos)
    name = name.substr(0, dot);
  return parse_generators(in, name);
}

void write_generators(std::ostream &out, const GroupSource &src)
{
  if (src.kind == ElementKind::Permutation) {
    for (const auto &g : src.perms) {
      for (std::size_t i = 0; i < g.images.size(); ++i)
        out << (i ? " " : "") << g.images[i];
      out << '\n';
    }
    return;
  }
  const Field &F = *src.field;
  for (const auto &m : src.mats) {
    out << m.dim << ' ' << F.q() << ' ' << F.p() << ' ' << F.f() << " :";
    for (auto e : m.e) {
      const FieldElem x = F.decode(e);
      out << ' ';
      for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        out << (i ? "," : "") << x.coeffs[i];
    }
    out << '\n';
  }
}

std::string data_directory()
{
  if (const char *env = std::getenv("MEO_ATLAS_DATA"); env && *env)
    return env;
  return MEO_DEFAULT_DATA_DIR;
}

}  // namespace meo
