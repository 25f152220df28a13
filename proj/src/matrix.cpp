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
#include "meo/matrix.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "meo/errors.hpp"

namespace meo {

Matrix identity_matrix(std::uint32_t d) { return scalar_matrix(d, 1); }

Matrix scalar_matrix(std::uint32_t d, Field::E s)
{
  Matrix m(d);
  for (std::uint32_t i = 0; i < d; ++i)
    m.at(i, i) = s;
  return m;
}

Matrix diagonal_matrix(const std::vector<Field::E> &diag)
{
  Matrix m(static_cast<std::uint32_t>(diag.size()));
  for (std::uint32_t i = 0; i < m.dim; ++i)
    m.at(i, i) = diag[i];
  return m;
}

Matrix jordan_block(std::uint32_t b, Field::E lambda)
{
  Matrix m = scalar_matrix(b, lambda);
  for (std::uint32_t i = 0; i + 1 < b; ++i)
    m.at(i, i + 1) = 1;
  return m;
}

Matrix direct_sum(const Matrix &a, const Matrix &b)
{
  Matrix m(a.dim + b.dim);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j)
      m.at(i, j) = a.at(i, j);
  for (std::uint32_t i = 0; i < b.dim; ++i)
    for (std::uint32_t j = 0; j < b.dim; ++j)
      m.at(a.dim + i, a.dim + j) = b.at(i, j);
  return m;
}

void mat_mul_raw(const Field &F, const Field::E *a, const Field::E *b, Field::E *c,
                 std::uint32_t d)
{
  for (std::uint32_t i = 0; i < d; ++i) {
    Field::E *row = c + i * d;
    for (std::uint32_t j = 0; j < d; ++j)
      row[j] = 0;
    for (std::uint32_t k = 0; k < d; ++k) {
      Field::E x = a[i * d + k];
      if (x == 0)
        continue;
      const Field::E *mr = F.mul_row(x);
      const Field::E *br = b + k * d;
      for (std::uint32_t j = 0; j < d; ++j)
        row[j] = F.add(row[j], mr[br[j]]);
    }
  }
}

Matrix mat_mul(const Field &F, const Matrix &a, const Matrix &b)
{
  if (a.dim != b.dim)
    throw std::invalid_argument("mat_mul: dimension mismatch");
  Matrix c(a.dim);
  mat_mul_raw(F, a.e.data(), b.e.data(), c.e.data(), a.dim);
  return c;
}

Matrix mat_pow(const Field &F, const Matrix &a, const BigNat &e)
{
  Matrix result = identity_matrix(a.dim), base = a;
  BigNat k = e;
  while (k > 0) {
    if (bit_test(k, 0))
      result = mat_mul(F, result, base);
    k >>= 1;
    if (k > 0)
      base = mat_mul(F, base, base);
  }
  return result;
}

Matrix transpose(const Matrix &a)
{
  Matrix t(a.dim);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j)
      t.at(j, i) = a.at(i, j);
  return t;
}

Matrix frobenius(const Field &F, const Matrix &a, std::uint32_t k)
{
  Matrix m = a;
  for (auto &x : m.e)
    x = F.frob_pow(x, k);
  return m;
}

Field::E determinant(const Field &F, Matrix a)
{
  const std::uint32_t d = a.dim;
  Field::E det = 1;
  for (std::uint32_t c = 0; c < d; ++c) {
    std::uint32_t piv = c;
    while (piv < d && a.at(piv, c) == 0)
      ++piv;
    if (piv == d)
      return 0;
    if (piv != c) {
      for (std::uint32_t j = 0; j < d; ++j)
        std::swap(a.at(piv, j), a.at(c, j));
      det = F.neg(det);
    }
    Field::E pv = a.at(c, c);
    det = F.mul(det, pv);
    Field::E pinv = F.inv(pv);
    for (std::uint32_t r = c + 1; r < d; ++r) {
      Field::E factor = F.mul(a.at(r, c), pinv);
      if (factor == 0)
        continue;
      for (std::uint32_t j = c; j < d; ++j)
        a.at(r, j) = F.sub(a.at(r, j), F.mul(factor, a.at(c, j)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Field &F, const Matrix &m)
{
  const std::uint32_t d = m.dim;
  Matrix a = m, inv = identity_matrix(d);
  for (std::uint32_t c = 0; c < d; ++c) {
    std::uint32_t piv = c;
    while (piv < d && a.at(piv, c) == 0)
      ++piv;
    if (piv == d)
      return std::nullopt;
    for (std::uint32_t j = 0; j < d; ++j) {
      std::swap(a.at(piv, j), a.at(c, j));
      std::swap(inv.at(piv, j), inv.at(c, j));
    }
    Field::E pinv = F.inv(a.at(c, c));
    for (std::uint32_t j = 0; j < d; ++j) {
      a.at(c, j) = F.mul(a.at(c, j), pinv);
      inv.at(c, j) = F.mul(inv.at(c, j), pinv);
    }
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == c || a.at(r, c) == 0)
        continue;
      Field::E factor = a.at(r, c);
      for (std::uint32_t j = 0; j < d; ++j) {
        a.at(r, j) = F.sub(a.at(r, j), F.mul(factor, a.at(c, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(factor, inv.at(c, j)));
      }
    }
  }
  return inv;
}

bool is_identity(const Matrix &a)
{
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j)
      if (a.at(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

bool is_scalar(const Matrix &a)
{
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j)
      if (i != j ? a.at(i, j) != 0 : a.at(i, i) != a.at(0, 0))
        return false;
  return a.dim == 0 || a.at(0, 0) != 0;
}

void projective_reduce_raw(const Field &F, Field::E *e, std::size_t n)
{
  std::size_t i = 0;
  while (i < n && e[i] == 0)
    ++i;
  if (i == n || e[i] == 1)
    return;
  const Field::E *row = F.mul_row(F.inv(e[i]));
  for (; i < n; ++i)
    e[i] = row[e[i]];
}

Matrix projective_reduce(const Field &F, const Matrix &a)
{
  Matrix m = a;
  projective_reduce_raw(F, m.e.data(), m.e.size());
  return m;
}

namespace {

bool trivial(const Matrix &a, bool projective)
{
  return projective ? is_scalar(a) : is_identity(a);
}

const Factorization &cached_factor(const BigNat &n)
{
  static std::mutex mu;
  static std::map<BigNat, Factorization> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, factor(n)).first;
  return it->second;
}

}  // namespace

BigNat order_by_iteration(const Field &F, const Matrix &a, bool projective,
                          std::uint64_t cap)
{
  Matrix x = a;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    if (trivial(x, projective))
      return e;
    x = mat_mul(F, x, a);
  }
  throw CapExceeded("element_order: iteration cap exceeded", cap);
}

BigNat element_order(const Field &F, const Matrix &a, bool projective, std::uint64_t cap)
{
  if (!projective && determinant(F, a) == 0)
    throw std::domain_error("element_order: singular matrix");
  if (projective && determinant(F, a) == 0)
    throw std::domain_error("element_order: singular matrix");
  const std::uint32_t d = a.dim;
  const std::uint64_t p = F.p();
  const std::uint64_t pc = ceil_pow(p, d);
  Matrix h = mat_pow(F, a, pc);

  BigNat s_order = 1;
  if (!trivial(h, projective)) {
    std::map<BigNat, unsigned> primes;
    bool complete = true;
    BigNat N = 1;
    for (std::uint32_t i = 1; i <= d; ++i) {
      BigNat qi = pow_big(BigNat(F.q()), i) - 1;
      N = lcm_big(N, qi);
      const Factorization &fa = cached_factor(qi);
      complete = complete && fa.complete;
      for (auto &[pr, e] : fa.factors)
        primes[pr] = std::max(primes[pr], e);
    }
    if (!complete)
      return order_by_iteration(F, a, projective, cap);
    s_order = N;
    for (auto &[pr, e] : primes) {
      for (unsigned k = 0; k < e; ++k) {
        BigNat cand = s_order / pr;
        if (!trivial(mat_pow(F, h, cand), projective))
          break;
        s_order = cand;
      }
    }
  }
  Matrix x = mat_pow(F, a, s_order);
  BigNat u_order = 1;
  while (!trivial(x, projective)) {
    x = mat_pow(F, x, p);
    u_order *= p;
  }
  return s_order * u_order;
}

JordanParts jordan_decompose(const Field &F, const Matrix &g)
{
  BigNat n = element_order(F, g);
  BigNat pa = 1;
  while (n % F.p() == 0) {
    n /= F.p();
    pa *= F.p();
  }
  const BigNat &m = n;
  // s = g^(p^a x) with p^a x = 1 mod m, u = g^(m y) with m y = 1 mod p^a.
  BigNat x = mod_inverse(pa % m, m);
  BigNat y = mod_inverse(m % pa, pa);
  return {mat_pow(F, g, pa * x), mat_pow(F, g, m * y)};
}

}  // namespace meo
