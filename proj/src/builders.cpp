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
#include "meo/builders.hpp"

#include <filesystem>
#include <functional>
#include <regex>
#include <stdexcept>
#include <unordered_map>

#include "meo/errors.hpp"
#include "meo/genfile.hpp"

namespace meo {

namespace {

using E = Field::E;

Matrix elementary(std::uint32_t d, std::uint32_t i, std::uint32_t j, E t)
{
  Matrix m = identity_matrix(d);
  m.at(i, j) = t;
  return m;
}

std::vector<E> additive_basis(const Field &F)
{
  std::vector<E> b;
  E w = 1;
  for (std::uint32_t k = 0; k < F.f(); ++k) {
    b.push_back(w);
    w = F.mul(w, F.primitive());
  }
  return b;
}

Matrix conj_transpose(const Field &F2, const Matrix &a)
{
  return transpose(frobenius(F2, a, F2.f() / 2));
}

// Unitriangular matrices (upper or lower) satisfying pred, reduced greedily
// to a generating set of the group they form.
std::vector<Matrix> unitriangular_generators(const Field &F, std::uint32_t n, bool upper,
                                             const std::function<bool(const Matrix &)> &pred)
{
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (upper ? i < j : i > j)
        pos.emplace_back(i, j);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    total *= F.q();
    if (total > 4000000)
      throw UnsupportedGroup("unitriangular search space too large");
  }
  auto field = Field::make(F.q());
  std::vector<Matrix> gens;
  std::optional<GroupTable> H;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Matrix m = identity_matrix(n);
    std::uint64_t r = idx;
    for (auto [i, j] : pos) {
      m.at(i, j) = static_cast<E>(r % F.q());
      r /= F.q();
    }
    if (!pred(m))
      continue;
    if (H && H->index_of(H->encode(m).data()))
      continue;
    gens.push_back(m);
    H = enumerate_group(gens, field, false);
  }
  return gens;
}

std::uint64_t vec_key(const std::vector<E> &v, std::uint32_t q)
{
  std::uint64_t k = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    k = k * q + *it;
  return k;
}

void normalize(const Field &F, std::vector<E> &v)
{
  for (E x : v) {
    if (x == 0)
      continue;
    E s = F.inv(x);
    for (E &y : v)
      y = F.mul(y, s);
    return;
  }
}

std::vector<E> row_times(const Field &F, const std::vector<E> &v, const Matrix &a)
{
  std::vector<E> w(a.dim, 0);
  for (std::uint32_t i = 0; i < a.dim; ++i) {
    if (v[i] == 0)
      continue;
    for (std::uint32_t j = 0; j < a.dim; ++j)
      w[j] = F.add(w[j], F.mul(v[i], a.at(i, j)));
  }
  return w;
}

// Normalized projective points of PG(d-1, q) satisfying keep.
struct PointSet {
  std::vector<std::vector<E>> pts;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
};

PointSet projective_points(const Field &F, std::uint32_t d,
                           const std::function<bool(const std::vector<E> &)> &keep)
{
  PointSet S;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i)
    total *= F.q();
  std::vector<E> v(d);
  for (std::uint64_t k = 1; k < total; ++k) {
    std::uint64_t r = k;
    for (std::uint32_t i = 0; i < d; ++i) {
      v[i] = static_cast<E>(r % F.q());
      r /= F.q();
    }
    std::uint32_t first = 0;
    while (v[first] == 0)
      ++first;
    if (v[first] != 1 || !keep(v))
      continue;
    S.index.emplace(k, static_cast<std::uint32_t>(S.pts.size()));
    S.pts.push_back(v);
  }
  return S;
}

// Image of each point under v -> frob^k(v) * a (a may be empty for identity).
std::vector<std::uint32_t> point_images(const Field &F, const PointSet &S, const Matrix *a,
                                        std::uint32_t k)
{
  std::vector<std::uint32_t> img(S.pts.size());
  for (std::size_t i = 0; i < S.pts.size(); ++i) {
    std::vector<E> v = S.pts[i];
    for (E &x : v)
      x = F.frob_pow(x, k);
    if (a)
      v = row_times(F, v, *a);
    normalize(F, v);
    auto it = S.index.find(vec_key(v, F.q()));
    if (it == S.index.end())
      throw std::logic_error("point_images: point set not invariant");
    img[i] = it->second;
  }
  return img;
}

std::vector<Perm> semilinear_perms(const Field &F, const PointSet &S,
                                   const std::vector<Matrix> &mats, bool field)
{
  std::vector<Perm> out;
  for (const auto &a : mats)
    out.push_back(Perm{point_images(F, S, &a, 0)});
  if (field && F.f() > 1)
    out.push_back(Perm{point_images(F, S, nullptr, 1)});
  return out;
}

std::uint32_t to_u32(const std::string &s)
{
  return static_cast<std::uint32_t>(std::stoul(s));
}

std::uint32_t checked_q(std::uint32_t q)
{
  if (!is_prime_power(q) || q > 256)
    throw UnsupportedGroup("field size " + std::to_string(q) + " not supported");
  return q;
}

std::uint32_t unitary_q(std::uint32_t q)
{
  checked_q(q);
  if (q > 16)
    throw UnsupportedGroup("unitary groups need q^2 <= 256");
  return q;
}

}  // namespace

std::vector<Matrix> sl_generators(const Field &F, std::uint32_t d)
{
  if (d < 1)
    throw std::invalid_argument("sl_generators: d >= 1");
  std::vector<Matrix> g;
  const auto basis = additive_basis(F);
  for (std::uint32_t i = 0; i + 1 < d; ++i)
    for (E t : basis) {
      g.push_back(elementary(d, i, i + 1, t));
      g.push_back(elementary(d, i + 1, i, t));
    }
  if (g.empty())
    g.push_back(identity_matrix(d));
  return g;
}

std::vector<Matrix> gl_generators(const Field &F, std::uint32_t d)
{
  auto g = sl_generators(F, d);
  std::vector<E> diag(d, 1);
  diag[0] = F.primitive();
  if (F.q() > 2)
    g.push_back(diagonal_matrix(diag));
  return g;
}

Matrix symplectic_form(std::uint32_t m, const Field &F)
{
  Matrix J(2 * m);
  for (std::uint32_t i = 0; i < 2 * m; ++i)
    J.at(i, 2 * m - 1 - i) = i < m ? F.one() : F.neg(F.one());
  return J;
}

Matrix unitary_form(std::uint32_t d)
{
  Matrix J(d);
  for (std::uint32_t i = 0; i < d; ++i)
    J.at(i, d - 1 - i) = 1;
  return J;
}

bool preserves_symplectic(const Field &F, const Matrix &a, const Matrix &J)
{
  return mat_mul(F, mat_mul(F, a, J), transpose(a)) == J;
}

bool preserves_unitary(const Field &F2, const Matrix &a, const Matrix &J)
{
  return mat_mul(F2, mat_mul(F2, a, J), conj_transpose(F2, a)) == J;
}

std::vector<Matrix> sp_generators(const Field &F, std::uint32_t m)
{
  const Matrix J = symplectic_form(m, F);
  auto pred = [&](const Matrix &a) { return preserves_symplectic(F, a, J); };
  auto g = unitriangular_generators(F, 2 * m, true, pred);
  auto lo = unitriangular_generators(F, 2 * m, false, pred);
  g.insert(g.end(), lo.begin(), lo.end());
  return g;
}

std::vector<Matrix> csp_generators(const Field &F, std::uint32_t m)
{
  auto g = sp_generators(F, m);
  std::vector<E> diag(2 * m, 1);
  for (std::uint32_t i = 0; i < m; ++i)
    diag[i] = F.primitive();
  if (F.q() > 2)
    g.push_back(diagonal_matrix(diag));
  return g;
}

std::vector<Matrix> su_generators(const Field &F2, std::uint32_t d)
{
  if (F2.f() % 2 != 0)
    throw std::invalid_argument("su_generators: field must have square order");
  const Matrix J = unitary_form(d);
  auto pred = [&](const Matrix &a) { return preserves_unitary(F2, a, J); };
  auto g = unitriangular_generators(F2, d, true, pred);
  auto lo = unitriangular_generators(F2, d, false, pred);
  g.insert(g.end(), lo.begin(), lo.end());
  return g;
}

std::vector<Matrix> gu_generators(const Field &F2, std::uint32_t d)
{
  auto g = su_generators(F2, d);
  const E w = F2.primitive();
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < F2.f() / 2; ++i)
    q *= F2.p();
  std::vector<E> diag(d, 1);
  diag[0] = w;
  diag[d - 1] = F2.inv(F2.pow(w, q));
  g.push_back(diagonal_matrix(diag));
  return g;
}

std::vector<Perm> symmetric_generators(std::uint32_t m)
{
  if (m <= 1)
    return {identity_perm(m == 0 ? 1 : m)};
  Perm t = identity_perm(m), c = identity_perm(m);
  std::swap(t.images[0], t.images[1]);
  for (std::uint32_t i = 0; i < m; ++i)
    c.images[i] = (i + 1) % m;
  return {t, c};
}

std::vector<Perm> alternating_generators(std::uint32_t m)
{
  if (m <= 2)
    return {identity_perm(m == 0 ? 1 : m)};
  Perm t = identity_perm(m);
  t.images[0] = 1;
  t.images[1] = 2;
  t.images[2] = 0;
  if (m == 3)
    return {t};
  // m odd: the m-cycle; m even: an (m-1)-cycle fixing 0.
  Perm c = identity_perm(m);
  const std::uint32_t start = m % 2 == 1 ? 0 : 1;
  for (std::uint32_t i = start; i < m; ++i)
    c.images[i] = i + 1 < m ? i + 1 : start;
  return {t, c};
}

std::vector<Perm> wreath_with_s2(const std::vector<Perm> &h)
{
  if (h.empty())
    throw std::invalid_argument("wreath_with_s2: no generators");
  const std::uint32_t n = h.front().degree();
  std::vector<Perm> out;
  for (const auto &g : h) {
    Perm x = identity_perm(2 * n);
    for (std::uint32_t i = 0; i < n; ++i)
      x.images[i] = g.images[i];
    out.push_back(std::move(x));
  }
  Perm s(identity_perm(2 * n));
  for (std::uint32_t i = 0; i < n; ++i) {
    s.images[i] = i + n;
    s.images[i + n] = i;
  }
  out.push_back(std::move(s));
  return out;
}

std::vector<Perm> linear_action_perms(std::uint32_t d, std::uint32_t q, SemilinearSpec s,
                                      bool with_hyperplanes)
{
  auto Fp = Field::make(checked_q(q));
  const Field &F = *Fp;
  if (s.graph)
    with_hyperplanes = true;
  const auto mats = s.diagonal ? gl_generators(F, d) : sl_generators(F, d);
  PointSet S = projective_points(F, d, [](const std::vector<E> &) { return true; });
  auto pts = semilinear_perms(F, S, mats, s.field);
  if (!with_hyperplanes)
    return pts;

  std::vector<Matrix> duals;
  for (const auto &a : mats)
    duals.push_back(transpose(*inverse(F, a)));
  auto hyp = semilinear_perms(F, S, duals, s.field);
  const std::uint32_t P = static_cast<std::uint32_t>(S.pts.size());
  std::vector<Perm> out;
  for (std::size_t g = 0; g < pts.size(); ++g) {
    Perm x;
    x.images.resize(2 * P);
    for (std::uint32_t i = 0; i < P; ++i) {
      x.images[i] = pts[g].images[i];
      x.images[P + i] = P + hyp[g].images[i];
    }
    out.push_back(std::move(x));
  }
  if (s.graph) {
    Perm x;
    x.images.resize(2 * P);
    for (std::uint32_t i = 0; i < P; ++i) {
      x.images[i] = P + i;
      x.images[P + i] = i;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Perm> unitary_action_perms(std::uint32_t d, std::uint32_t q, bool full, bool field)
{
  auto Fp = Field::make(unitary_q(q) * q);
  const Field &F = *Fp;
  const std::uint32_t half = F.f() / 2;
  PointSet S = projective_points(F, d, [&](const std::vector<E> &v) {
    E acc = 0;
    for (std::uint32_t i = 0; i < d; ++i)
      acc = F.add(acc, F.mul(v[i], F.frob_pow(v[d - 1 - i], half)));
    return acc == 0;
  });
  const auto mats = full ? gu_generators(F, d) : su_generators(F, d);
  return semilinear_perms(F, S, mats, field);
}

std::vector<Perm> symplectic_action_perms(std::uint32_t m, std::uint32_t q, bool full,
                                          bool field)
{
  auto Fp = Field::make(checked_q(q));
  const Field &F = *Fp;
  PointSet S = projective_points(F, 2 * m, [](const std::vector<E> &) { return true; });
  const auto mats = full ? csp_generators(F, m) : sp_generators(F, m);
  return semilinear_perms(F, S, mats, field);
}

GroupTable enumerate(const GroupSource &src, std::uint64_t cap)
{
  if (src.kind == ElementKind::Permutation)
    return enumerate_group(src.perms, cap);
  return enumerate_group(src.mats, src.field, src.kind == ElementKind::ProjectiveMatrix, cap);
}

namespace {

GroupSource perm_source(std::string name, std::vector<Perm> g)
{
  GroupSource s;
  s.name = std::move(name);
  s.kind = ElementKind::Permutation;
  s.perms = std::move(g);
  return s;
}

GroupSource matrix_source(std::string name, std::vector<Matrix> g,
                          std::shared_ptr<const Field> F, bool projective)
{
  GroupSource s;
  s.name = std::move(name);
  s.kind = projective ? ElementKind::ProjectiveMatrix : ElementKind::Matrix;
  s.mats = std::move(g);
  s.field = std::move(F);
  return s;
}

GroupSource linear_source(const std::string &name, const std::string &fam, std::uint32_t d,
                          std::uint32_t q)
{
  if (fam == "SL" || fam == "GL" || fam == "PSL" || fam == "PGL") {
    auto F = Field::make(checked_q(q));
    bool gl = fam == "GL" || fam == "PGL";
    return matrix_source(name, gl ? gl_generators(*F, d) : sl_generators(*F, d), F,
                         fam[0] == 'P');
  }
  if (fam == "SU" || fam == "GU" || fam == "PSU" || fam == "PGU") {
    auto F = Field::make(unitary_q(q) * q);
    bool gu = fam == "GU" || fam == "PGU";
    return matrix_source(name, gu ? gu_generators(*F, d) : su_generators(*F, d), F,
                         fam[0] == 'P');
  }
  if (fam == "Sp" || fam == "CSp" || fam == "PSp" || fam == "PCSp") {
    if (d % 2 != 0)
      throw UnsupportedGroup("symplectic dimension must be even");
    auto F = Field::make(checked_q(q));
    bool c = fam == "CSp" || fam == "PCSp";
    return matrix_source(name, c ? csp_generators(*F, d / 2) : sp_generators(*F, d / 2), F,
                         fam[0] == 'P');
  }
  if (fam == "PGammaL")
    return perm_source(name, linear_action_perms(d, q, {true, true, false}, false));
  if (fam == "PSigmaL")
    return perm_source(name, linear_action_perms(d, q, {false, true, false}, false));
  if (fam == "PGammaU")
    return perm_source(name, unitary_action_perms(d, q, true, true));
  throw UnsupportedGroup("unknown group: " + name);
}

}  // namespace

GroupSource named_group(const std::string &name)
{
  static const std::regex one(R"(^(Sym|Alt)\((\d+)\)$)");
  static const std::regex two(R"(^(SL|GL|PSL|PGL|SU|GU|PSU|PGU|Sp|CSp|PSp|PCSp|PGammaL|PSigmaL|PGammaU)\((\d+),(\d+)\)$)");
  static const std::regex aut(R"(^Aut\((.*)\)$)");
  std::string s;
  for (char c : name)
    if (c != ' ')
      s += c;
  std::smatch mt;
  if (std::regex_match(s, mt, one)) {
    const std::uint32_t m = to_u32(mt[2]);
    if (m < 1 || m > 256)
      throw UnsupportedGroup("degree out of range: " + name);
    return perm_source(s, mt[1] == "Sym" ? symmetric_generators(m) : alternating_generators(m));
  }
  if (std::regex_match(s, mt, two))
    return linear_source(s, mt[1], to_u32(mt[2]), to_u32(mt[3]));
  if (s == "PSL(3,4).2^2")
    return perm_source(s, linear_action_perms(3, 4, {false, true, true}, true));
  if (s == "PSL(3,3).2")
    return perm_source(s, linear_action_perms(3, 3, {false, false, true}, true));
  static const std::regex u32(R"(^PSU\(3,(\d+)\)\.2$)");
  if (std::regex_match(s, mt, u32))
    return perm_source(s, unitary_action_perms(3, to_u32(mt[1]), false, true));
  if (std::regex_match(s, mt, aut)) {
    const std::string inner = mt[1];
    std::smatch im;
    if (std::regex_match(inner, im, one) && im[1] == "Alt") {
      const std::uint32_t m = to_u32(im[2]);
      if (m == 6)
        return perm_source(s, linear_action_perms(2, 9, {true, true, false}, false));
      return perm_source(s, symmetric_generators(m));
    }
    if (std::regex_match(inner, im, two)) {
      const std::string fam = im[1];
      const std::uint32_t d = to_u32(im[2]), q = to_u32(im[3]);
      if (fam == "PSL")
        return perm_source(s, linear_action_perms(d, q, {true, true, d >= 3}, d >= 3));
      if (fam == "PSU")
        return perm_source(s, unitary_action_perms(d, q, true, true));
      if (fam == "PSp" && d == 4 && q == 3)
        return perm_source(s, symplectic_action_perms(2, 3, true, false));
      if (fam == "PSp" && q == 2)
        return perm_source(s, symplectic_action_perms(d / 2, 2, false, false));
    }
    throw UnsupportedGroup("no automorphism group construction for " + inner);
  }
  static const std::regex file_name(R"(^[A-Za-z][A-Za-z0-9_.']*$)");
  if (std::regex_match(s, file_name)) {
    const std::string path = data_directory() + "/generators/" + s + ".txt";
    if (!std::filesystem::exists(path))
      throw UnsupportedGroup("no generators for " + name);
    return read_generator_file(path);
  }
  throw UnsupportedGroup("unknown group: " + name);
}

}  // namespace meo
