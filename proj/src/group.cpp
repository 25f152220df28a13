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
#include "meo/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string_view>

#include "meo/errors.hpp"

namespace meo {

bool Spectrum::contains(const BigNat &x) const
{
  return std::binary_search(orders.begin(), orders.end(), x);
}

Spectrum make_spectrum(std::vector<BigNat> orders, BigNat group_order,
                       SpectrumSource source, std::string name)
{
  orders.push_back(1);
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return Spectrum{std::move(orders), std::move(group_order), source, std::move(name)};
}

const char *to_string(SpectrumSource s)
{
  switch (s) {
  case SpectrumSource::Oracle:
    return "oracle";
  case SpectrumSource::Embedded:
    return "embedded";
  case SpectrumSource::Computed:
    return "computed";
  }
  return "?";
}

namespace {

std::uint64_t hash_bytes(const std::uint8_t *x, std::size_t n)
{
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char *>(x), n));
}

std::uint32_t read_point(const std::uint8_t *x, std::size_t i, bool wide)
{
  return wide ? static_cast<std::uint32_t>(x[2 * i] | (x[2 * i + 1] << 8)) : x[i];
}

void write_point(std::uint8_t *x, std::size_t i, std::uint32_t v, bool wide)
{
  if (wide) {
    x[2 * i] = static_cast<std::uint8_t>(v & 0xff);
    x[2 * i + 1] = static_cast<std::uint8_t>(v >> 8);
  } else {
    x[i] = static_cast<std::uint8_t>(v);
  }
}

}  // namespace

std::size_t GroupTable::slot_of(const std::uint8_t *x) const
{
  const std::size_t mask = slots_.size() - 1;
  std::size_t h = hash_bytes(x, width_) & mask;
  while (slots_[h] != 0) {
    if (std::memcmp(at(slots_[h] - 1), x, width_) == 0)
      return h;
    h = (h + 1) & mask;
  }
  return h;
}

std::optional<std::size_t> GroupTable::index_of(const std::uint8_t *x) const
{
  std::size_t s = slot_of(x);
  if (slots_[s] == 0)
    return std::nullopt;
  return slots_[s] - 1;
}

void GroupTable::rehash(std::size_t cap)
{
  std::size_t n = 16;
  while (n < cap)
    n <<= 1;
  slots_.assign(n, 0);
  for (std::size_t i = 0; i < count_; ++i)
    slots_[slot_of(at(i))] = static_cast<std::uint32_t>(i + 1);
}

bool GroupTable::insert(const std::uint8_t *x)
{
  if (2 * (count_ + 1) > slots_.size())
    rehash(4 * (count_ + 1));
  std::size_t s = slot_of(x);
  if (slots_[s] != 0)
    return false;
  data_.insert(data_.end(), x, x + width_);
  ++count_;
  slots_[s] = static_cast<std::uint32_t>(count_);
  return true;
}

void GroupTable::canonicalize(std::uint8_t *x) const
{
  if (kind_ == ElementKind::ProjectiveMatrix)
    projective_reduce_raw(*field_, x, width_);
}

void GroupTable::multiply(const std::uint8_t *a, const std::uint8_t *b,
                          std::uint8_t *out) const
{
  if (kind_ == ElementKind::Permutation) {
    if (width_ == dim_) {
      for (std::uint32_t i = 0; i < dim_; ++i)
        out[i] = b[a[i]];
      return;
    }
    for (std::uint32_t i = 0; i < dim_; ++i)
      write_point(out, i, read_point(b, read_point(a, i, true), true), true);
    return;
  }
  mat_mul_raw(*field_, a, b, out, dim_);
  canonicalize(out);
}

std::size_t GroupTable::multiply_index(std::size_t a, std::size_t b) const
{
  std::vector<std::uint8_t> tmp(width_);
  multiply(at(a), at(b), tmp.data());
  auto idx = index_of(tmp.data());
  if (!idx)
    throw std::logic_error("GroupTable: product not in table");
  return *idx;
}

Matrix GroupTable::matrix_at(std::size_t i) const
{
  if (kind_ == ElementKind::Permutation)
    throw std::logic_error("GroupTable: not a matrix group");
  Matrix m(dim_);
  std::memcpy(m.e.data(), at(i), width_);
  return m;
}

Perm GroupTable::perm_at(std::size_t i) const
{
  if (kind_ != ElementKind::Permutation)
    throw std::logic_error("GroupTable: not a permutation group");
  Perm p;
  p.images.resize(dim_);
  const bool wide = width_ != dim_;
  for (std::uint32_t k = 0; k < dim_; ++k)
    p.images[k] = read_point(at(i), k, wide);
  return p;
}

std::vector<std::uint8_t> GroupTable::encode(const Matrix &m) const
{
  if (kind_ == ElementKind::Permutation || m.dim != dim_)
    throw std::invalid_argument("GroupTable: element kind mismatch");
  std::vector<std::uint8_t> out(m.e.begin(), m.e.end());
  canonicalize(out.data());
  return out;
}

std::vector<std::uint8_t> GroupTable::encode(const Perm &p) const
{
  if (kind_ != ElementKind::Permutation || p.degree() != dim_)
    throw std::invalid_argument("GroupTable: element kind mismatch");
  std::vector<std::uint8_t> out(width_);
  const bool wide = width_ != dim_;
  for (std::uint32_t k = 0; k < dim_; ++k)
    write_point(out.data(), k, p.images[k], wide);
  return out;
}

const std::vector<std::uint32_t> &GroupTable::element_orders() const
{
  if (!orders_.empty() || count_ == 0)
    return orders_;
  orders_.assign(count_, 0);
  if (kind_ == ElementKind::Permutation) {
    const bool wide = width_ != dim_;
    std::vector<std::uint8_t> seen(dim_);
    for (std::size_t i = 0; i < count_; ++i) {
      const std::uint8_t *x = at(i);
      std::fill(seen.begin(), seen.end(), 0);
      std::uint64_t e = 1;
      for (std::uint32_t s = 0; s < dim_; ++s) {
        if (seen[s])
          continue;
        std::uint64_t len = 0;
        for (std::uint32_t t = s; !seen[t]; t = read_point(x, t, wide)) {
          seen[t] = 1;
          ++len;
        }
        e = std::lcm(e, len);
        if (e > 0xffffffffULL)
          throw std::overflow_error("GroupTable: element order exceeds 32 bits");
      }
      orders_[i] = static_cast<std::uint32_t>(e);
    }
    return orders_;
  }
  std::vector<std::uint8_t> x(width_), y(width_);
  const std::uint8_t *id = at(0);
  for (std::size_t i = 0; i < count_; ++i) {
    if (orders_[i] != 0)
      continue;
    std::memcpy(x.data(), at(i), width_);
    std::uint32_t e = 1;
    while (std::memcmp(x.data(), id, width_) != 0) {
      multiply(x.data(), at(i), y.data());
      std::swap(x, y);
      ++e;
    }
    orders_[i] = e;
  }
  return orders_;
}

GroupTable enumerate_impl(ElementKind kind, std::uint32_t dim, std::shared_ptr<const Field> field,
                          std::vector<std::vector<std::uint8_t>> gens, std::uint64_t cap)
{
  if (cap < 1)
    throw std::invalid_argument("enumerate_group: cap must be positive");
  GroupTable G;
  G.kind_ = kind;
  G.dim_ = dim;
  G.field_ = std::move(field);
  if (kind == ElementKind::Permutation)
    G.width_ = dim <= 256 ? dim : 2 * static_cast<std::size_t>(dim);
  else
    G.width_ = static_cast<std::size_t>(dim) * dim;
  for (auto &g : gens) {
    if (g.size() != G.width_)
      throw std::invalid_argument("enumerate_group: generator of wrong size");
    G.canonicalize(g.data());
  }
  G.rehash(64);

  std::vector<std::uint8_t> id(G.width_, 0);
  if (kind == ElementKind::Permutation) {
    const bool wide = G.width_ != dim;
    for (std::uint32_t i = 0; i < dim; ++i)
      write_point(id.data(), i, i, wide);
  } else {
    for (std::uint32_t i = 0; i < dim; ++i)
      id[i * dim + i] = 1;
  }
  G.insert(id.data());

  // Generators already in the closure of earlier ones are dropped; each kept
  // generator is applied to every element found so far.
  std::vector<std::uint8_t> prod(G.width_), cur(G.width_);
  for (auto &g : gens) {
    if (G.index_of(g.data()))
      continue;
    G.gens_.push_back(std::move(g));
    const auto &ng = G.gens_.back();
    const std::size_t old = G.count_;
    for (std::size_t i = 0; i < old; ++i) {
      std::memcpy(cur.data(), G.at(i), G.width_);
      G.multiply(cur.data(), ng.data(), prod.data());
      if (G.insert(prod.data()) && G.count_ > cap)
        throw CapExceeded("enumerate_group: group order exceeds cap", G.count_);
    }
    for (std::size_t frontier = old; frontier < G.count_; ++frontier) {
      std::memcpy(cur.data(), G.at(frontier), G.width_);
      for (const auto &h : G.gens_) {
        G.multiply(cur.data(), h.data(), prod.data());
        if (G.insert(prod.data()) && G.count_ > cap)
          throw CapExceeded("enumerate_group: group order exceeds cap", G.count_);
      }
    }
  }
  return G;
}

GroupTable enumerate_group(const std::vector<Matrix> &gens, std::shared_ptr<const Field> field,
                           bool projective, std::uint64_t cap)
{
  if (gens.empty())
    throw std::invalid_argument("enumerate_group: no generators");
  const std::uint32_t d = gens.front().dim;
  std::vector<std::vector<std::uint8_t>> raw;
  for (const auto &g : gens) {
    if (g.dim != d)
      throw std::invalid_argument("enumerate_group: generators of mixed dimension");
    if (determinant(*field, g) == 0)
      throw std::domain_error("enumerate_group: singular generator");
    raw.emplace_back(g.e.begin(), g.e.end());
  }
  return enumerate_impl(projective ? ElementKind::ProjectiveMatrix : ElementKind::Matrix, d,
                        std::move(field), std::move(raw), cap);
}

GroupTable enumerate_group(const std::vector<Perm> &gens, std::uint64_t cap)
{
  if (gens.empty())
    throw std::invalid_argument("enumerate_group: no generators");
  const std::uint32_t n = gens.front().degree();
  if (n > 65536)
    throw std::invalid_argument("enumerate_group: degree too large");
  std::vector<std::vector<std::uint8_t>> raw;
  const bool wide = n > 256;
  for (const auto &g : gens) {
    if (g.degree() != n || !is_permutation(g.images))
      throw std::invalid_argument("enumerate_group: invalid permutation generator");
    std::vector<std::uint8_t> r(wide ? 2 * n : n);
    for (std::uint32_t i = 0; i < n; ++i)
      write_point(r.data(), i, g.images[i], wide);
    raw.push_back(std::move(r));
  }
  return enumerate_impl(ElementKind::Permutation, n, nullptr, std::move(raw), cap);
}

Spectrum spectrum(const GroupTable &G, std::string name)
{
  std::set<std::uint32_t> seen(G.element_orders().begin(), G.element_orders().end());
  std::vector<BigNat> orders(seen.begin(), seen.end());
  return make_spectrum(std::move(orders), G.order(), SpectrumSource::Oracle, std::move(name));
}

CosetSpectra coset_spectra(const GroupTable &A, const GroupTable &N)
{
  if (A.kind() != N.kind() || A.width() != N.width())
    throw std::invalid_argument("coset_spectra: representations differ");
  std::vector<std::size_t> n_in_a(N.size());
  for (std::size_t i = 0; i < N.size(); ++i) {
    auto idx = A.index_of(N.at(i));
    if (!idx)
      throw std::invalid_argument("coset_spectra: N is not contained in A");
    n_in_a[i] = *idx;
  }
  CosetSpectra out;
  const std::size_t none = static_cast<std::size_t>(-1);
  out.coset_of_element.assign(A.size(), none);
  const auto &ord = A.element_orders();
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < A.size(); ++a) {
    if (out.coset_of_element[a] != none)
      continue;
    const std::size_t c = reps.size();
    reps.push_back(a);
    std::set<std::uint32_t> orders;
    for (std::size_t n : n_in_a) {
      std::size_t x = A.multiply_index(a, n);
      out.coset_of_element[x] = c;
      orders.insert(ord[x]);
    }
    out.orders.emplace_back(orders.begin(), orders.end());
  }
  for (std::size_t r : reps)
    out.square_coset.push_back(out.coset_of_element[A.multiply_index(r, r)]);
  return out;
}

}  // namespace meo
