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
#include "meo/field.hpp"

#include <stdexcept>

namespace meo {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly &b, std::uint32_t p)
{
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly from_index(std::uint64_t idx, std::uint32_t p, std::uint32_t len)
{
  Poly out(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = idx % p;
    idx /= p;
  }
  return out;
}

bool irreducible(const Poly &m, std::uint32_t p)
{
  const std::uint32_t f = static_cast<std::uint32_t>(m.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= f; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly cand = from_index(idx, p, d);
      cand.push_back(1);
      if (poly_mod(m, cand, p).empty())
        return false;
    }
  }
  return true;
}

}  // namespace

std::uint32_t FieldSpec::q() const
{
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < f; ++i)
    r *= p;
  return r;
}

FieldSpec make_field_spec(std::uint32_t p, std::uint32_t f)
{
  if (!is_prime_u64(p) || f < 1)
    throw std::invalid_argument("field: p must be prime and f >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < f; ++i)
    count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly m = from_index(idx, p, f);
    m.push_back(1);
    if (irreducible(m, p))
      return FieldSpec{p, f, m};
  }
  throw std::logic_error("field: no irreducible polynomial found");
}

Field::Field(const FieldSpec &spec) : spec_(spec), q_(spec.q())
{
  if (q_ > 256)
    throw std::invalid_argument("field: q > 256 is not supported by tables");
  const std::uint32_t p = spec_.p, f = spec_.f;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  std::vector<Poly> el(q_);
  for (std::uint32_t i = 0; i < q_; ++i)
    el[i] = from_index(i, p, f);
  auto index = [&](const Poly &a) {
    std::uint32_t r = 0, w = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
      r += (i < a.size() ? a[i] : 0) * w;
      w *= p;
    }
    return static_cast<E>(r);
  };
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly n(f);
    for (std::uint32_t i = 0; i < f; ++i)
      n[i] = (p - el[a][i]) % p;
    neg_[a] = index(n);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly s(f), prod(2 * f, 0);
      for (std::uint32_t i = 0; i < f; ++i)
        s[i] = (el[a][i] + el[b][i]) % p;
      add_[a * q_ + b] = index(s);
      for (std::uint32_t i = 0; i < f; ++i)
        for (std::uint32_t j = 0; j < f; ++j)
          prod[i + j] = (prod[i + j] + el[a][i] * el[b][j]) % p;
      mul_[a * q_ + b] = index(poly_mod(prod, spec_.modulus, p));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1)
        inv_[a] = static_cast<E>(b);
  for (std::uint32_t a = 0; a < q_; ++a) {
    E r = 1;
    for (std::uint32_t i = 0; i < p; ++i)
      r = mul_[r * q_ + a];
    frob_[a] = r;
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    std::uint32_t ord = 1;
    E x = static_cast<E>(a);
    while (x != 1) {
      x = mul_[x * q_ + a];
      ++ord;
    }
    if (ord == q_ - 1) {
      prim_ = static_cast<E>(a);
      break;
    }
  }
}

std::shared_ptr<const Field> Field::make(std::uint32_t q)
{
  std::uint32_t p = 0, f = 0;
  if (!is_prime_power(q, &p, &f))
    throw std::invalid_argument("field: q is not a prime power");
  return std::make_shared<const Field>(make_field_spec(p, f));
}

Field::E Field::inv(E a) const
{
  if (a == 0)
    throw std::domain_error("field: inverse of zero");
  return inv_[a];
}

Field::E Field::pow(E a, std::uint64_t e) const
{
  E r = 1;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::E Field::frob_pow(E a, std::uint32_t k) const
{
  for (std::uint32_t i = 0; i < k; ++i)
    a = frob_[a];
  return a;
}

Field::E Field::from_int(std::int64_t k) const
{
  std::int64_t r = k % static_cast<std::int64_t>(spec_.p);
  if (r < 0)
    r += spec_.p;
  return static_cast<E>(r);
}

Field::E Field::encode(const FieldElem &x) const
{
  if (x.coeffs.size() != spec_.f)
    throw std::invalid_argument("field: element length does not match f");
  std::uint32_t r = 0, w = 1;
  for (std::uint32_t c : x.coeffs) {
    if (c >= spec_.p)
      throw std::invalid_argument("field: coefficient not reduced");
    r += c * w;
    w *= spec_.p;
  }
  return static_cast<E>(r);
}

FieldElem Field::decode(E a) const { return FieldElem{from_index(a, spec_.p, spec_.f)}; }

namespace {

const Field &cached(const FieldSpec &F)
{
  thread_local std::vector<std::unique_ptr<Field>> cache;
  for (auto &c : cache)
    if (c->spec() == F)
      return *c;
  if (F.modulus.size() != F.f + 1 || !irreducible(F.modulus, F.p))
    throw std::invalid_argument("field: modulus is not irreducible of degree f");
  cache.push_back(std::make_unique<Field>(F));
  return *cache.back();
}

}  // namespace

FieldElem field_mul(const FieldElem &a, const FieldElem &b, const FieldSpec &F)
{
  const Field &K = cached(F);
  return K.decode(K.mul(K.encode(a), K.encode(b)));
}

FieldElem field_add(const FieldElem &a, const FieldElem &b, const FieldSpec &F)
{
  const Field &K = cached(F);
  return K.decode(K.add(K.encode(a), K.encode(b)));
}

BigNat mult_order(const FieldElem &a, const FieldSpec &F)
{
  const Field &K = cached(F);
  Field::E x = K.encode(a);
  if (x == 0)
    throw std::domain_error("mult_order: zero element");
  std::uint64_t e = 1;
  for (Field::E y = x; y != 1; y = K.mul(y, x))
    ++e;
  return e;
}

}  // namespace meo
