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
#include "meo/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace meo {

using E = Field::E;

void poly_trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

int poly_degree(const Poly &a)
{
  return static_cast<int>(a.size()) - 1;
}

Poly poly_add(const Field &F, const Poly &a, const Poly &b)
{
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(c);
  return c;
}

Poly poly_sub(const Field &F, const Poly &a, const Poly &b)
{
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(c);
  return c;
}

Poly poly_mul(const Field &F, const Poly &a, const Poly &b)
{
  if (a.empty() || b.empty())
    return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  poly_trim(c);
  return c;
}

std::pair<Poly, Poly> poly_divmod(const Field &F, const Poly &a, const Poly &b)
{
  if (b.empty())
    throw std::domain_error("poly_divmod: division by zero");
  Poly r = a;
  poly_trim(r);
  if (r.size() < b.size())
    return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const E lead_inv = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const E c = F.mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  poly_trim(q);
  poly_trim(r);
  return {q, r};
}

Poly poly_mod(const Field &F, const Poly &a, const Poly &m)
{
  return poly_divmod(F, a, m).second;
}

Poly poly_monic(const Field &F, Poly a)
{
  poly_trim(a);
  if (a.empty())
    return a;
  const E s = F.inv(a.back());
  for (E &x : a)
    x = F.mul(x, s);
  return a;
}

Poly poly_gcd(const Field &F, Poly a, Poly b)
{
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_derivative(const Field &F, const Poly &a)
{
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i)
    d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]));
  poly_trim(d);
  return d;
}

Poly poly_powmod(const Field &F, const Poly &a, const BigNat &e, const Poly &m)
{
  Poly result{1};
  result = poly_mod(F, result, m);
  Poly base = poly_mod(F, a, m);
  const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = poly_mod(F, poly_mul(F, result, result), m);
    if (boost::multiprecision::bit_test(e, i))
      result = poly_mod(F, poly_mul(F, result, base), m);
  }
  return result;
}

Poly char_poly(const Field &F, const Matrix &a)
{
  const std::uint32_t n = a.dim;
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::uint32_t j = 0; j + 2 < n; ++j) {
    std::uint32_t piv = j + 1;
    while (piv < n && h.at(piv, j) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != j + 1) {
      for (std::uint32_t c = 0; c < n; ++c)
        std::swap(h.at(piv, c), h.at(j + 1, c));
      for (std::uint32_t r = 0; r < n; ++r)
        std::swap(h.at(r, piv), h.at(r, j + 1));
    }
    const E inv = F.inv(h.at(j + 1, j));
    for (std::uint32_t k = j + 2; k < n; ++k) {
      const E t = F.mul(h.at(k, j), inv);
      if (t == 0)
        continue;
      for (std::uint32_t c = 0; c < n; ++c)
        h.at(k, c) = F.sub(h.at(k, c), F.mul(t, h.at(j + 1, c)));
      for (std::uint32_t r = 0; r < n; ++r)
        h.at(r, j + 1) = F.add(h.at(r, j + 1), F.mul(t, h.at(r, k)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::uint32_t k = 1; k <= n; ++k) {
    Poly lin{F.neg(h.at(k - 1, k - 1)), 1};
    poly_trim(lin);
    Poly acc = poly_mul(F, lin, p[k - 1]);
    E prod = 1;
    for (std::uint32_t i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, h.at(i, i - 1));
      if (prod == 0)
        break;
      const E c = F.mul(h.at(i - 1, k - 1), prod);
      acc = poly_sub(F, acc, poly_mul(F, Poly{c}, p[i - 1]));
    }
    p[k] = acc;
  }
  return p[n];
}

namespace {

Poly pth_root(const Field &F, const Poly &a)
{
  Poly r;
  for (std::size_t i = 0; i < a.size(); i += F.p())
    r.push_back(F.frob_pow(a[i], F.f() - 1));
  poly_trim(r);
  return r;
}

void squarefree(const Field &F, Poly f, unsigned mult,
                std::vector<std::pair<Poly, unsigned>> &out)
{
  if (poly_degree(f) <= 0)
    return;
  Poly c = poly_gcd(F, f, poly_derivative(F, f));
  Poly w = poly_divmod(F, f, c).first;
  unsigned i = 1;
  while (poly_degree(w) > 0) {
    Poly y = poly_gcd(F, w, c);
    Poly fac = poly_divmod(F, w, y).first;
    if (poly_degree(fac) > 0)
      out.emplace_back(poly_monic(F, fac), i * mult);
    w = y;
    c = poly_divmod(F, c, y).first;
    ++i;
  }
  if (poly_degree(c) > 0)
    squarefree(F, pth_root(F, poly_monic(F, c)), mult * F.p(), out);
}

void equal_degree(const Field &F, const Poly &g, unsigned d, std::mt19937_64 &rng,
                  std::vector<Poly> &out)
{
  const int n = poly_degree(g);
  if (n == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const BigNat qd = pow_big(BigNat(F.q()), d);
  for (;;) {
    Poly a(n);
    for (E &x : a)
      x = static_cast<E>(rng() % F.q());
    poly_trim(a);
    if (poly_degree(a) <= 0)
      continue;
    Poly b;
    if (F.p() == 2) {
      // Absolute trace to GF(2): a + a^2 + ... + a^(2^(fd-1)).
      Poly t = a, s = a;
      for (unsigned k = 1; k < F.f() * d; ++k) {
        t = poly_mod(F, poly_mul(F, t, t), g);
        s = poly_add(F, s, t);
      }
      b = s;
    } else {
      b = poly_sub(F, poly_powmod(F, a, (qd - 1) / 2, g), Poly{1});
    }
    Poly h = poly_gcd(F, g, b);
    const int dh = poly_degree(h);
    if (dh > 0 && dh < n) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, poly_monic(F, poly_divmod(F, g, h).first), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor_poly(const Field &F, const Poly &f0)
{
  Poly f = poly_monic(F, f0);
  if (f.empty())
    throw std::domain_error("factor_poly: zero polynomial");
  std::vector<std::pair<Poly, unsigned>> sqf, out;
  squarefree(F, f, 1, sqf);
  std::mt19937_64 rng(0x6d656fULL);
  for (const auto &[g0, mult] : sqf) {
    Poly g = g0;
    Poly h{0, 1};  // x
    const Poly x = h;
    for (unsigned d = 1; 2 * static_cast<int>(d) <= poly_degree(g); ++d) {
      h = poly_powmod(F, h, BigNat(F.q()), g);
      Poly fac = poly_gcd(F, g, poly_sub(F, h, x));
      if (poly_degree(fac) > 0) {
        std::vector<Poly> parts;
        equal_degree(F, fac, d, rng, parts);
        for (auto &p : parts)
          out.emplace_back(std::move(p), mult);
        g = poly_monic(F, poly_divmod(F, g, fac).first);
        h = poly_mod(F, h, g);
      }
    }
    if (poly_degree(g) > 0)
      out.emplace_back(g, mult);
  }
  // Squarefree parts of different multiplicity are coprime, but merge anyway.
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto &e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  return merged;
}

std::uint32_t SemisimpleShape::dimension() const
{
  std::uint32_t d = 0;
  for (auto [di, mi] : parts)
    d += di * mi;
  return d;
}

SemisimpleShape semisimple_shape(const Field &F, const Matrix &s)
{
  SemisimpleShape shape;
  for (const auto &[g, mult] : factor_poly(F, char_poly(F, s)))
    shape.parts.emplace_back(static_cast<std::uint32_t>(poly_degree(g)), mult);
  return shape;
}

}  // namespace meo
