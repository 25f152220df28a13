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
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "meo/bignat.hpp"
#include "meo/field.hpp"
#include "meo/matrix.hpp"
#include "meo/perm.hpp"
#include "meo/spectrum.hpp"

namespace meo {

enum class ElementKind { Matrix, ProjectiveMatrix, Permutation };

inline constexpr std::uint64_t kDefaultCap = 5000000;

// Closed element list produced by breadth-first closure. Elements are stored
// as fixed-width byte strings: matrix entries row-major, or permutation
// images (one byte per point up to degree 256, two bytes otherwise).
class GroupTable {
public:
  ElementKind kind() const { return kind_; }
  std::size_t size() const { return count_; }
  BigNat order() const { return BigNat(count_); }
  std::size_t width() const { return width_; }
  std::uint32_t dim() const { return dim_; }  // matrix dimension or degree
  const std::shared_ptr<const Field> &field() const { return field_; }

  const std::uint8_t *at(std::size_t i) const { return data_.data() + i * width_; }
  std::optional<std::size_t> index_of(const std::uint8_t *x) const;
  std::size_t identity_index() const { return 0; }

  // out = a * b (a acts first for permutations); canonicalized.
  void multiply(const std::uint8_t *a, const std::uint8_t *b, std::uint8_t *out) const;
  std::size_t multiply_index(std::size_t a, std::size_t b) const;

  Matrix matrix_at(std::size_t i) const;
  Perm perm_at(std::size_t i) const;

  std::vector<std::uint8_t> encode(const Matrix &m) const;
  std::vector<std::uint8_t> encode(const Perm &p) const;

  // Order of each element, by index.
  const std::vector<std::uint32_t> &element_orders() const;

private:
  friend GroupTable enumerate_impl(ElementKind, std::uint32_t, std::shared_ptr<const Field>,
                                   std::vector<std::vector<std::uint8_t>>, std::uint64_t);
  void canonicalize(std::uint8_t *x) const;
  bool insert(const std::uint8_t *x);
  void rehash(std::size_t cap);
  std::size_t slot_of(const std::uint8_t *x) const;

  ElementKind kind_ = ElementKind::Permutation;
  std::size_t width_ = 0;
  std::uint32_t dim_ = 0;
  std::shared_ptr<const Field> field_;
  std::vector<std::vector<std::uint8_t>> gens_;
  std::vector<std::uint8_t> data_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> slots_;  // index + 1, 0 = empty
  mutable std::vector<std::uint32_t> orders_;
};

GroupTable enumerate_group(const std::vector<Matrix> &gens,
                           std::shared_ptr<const Field> field, bool projective,
                           std::uint64_t cap = kDefaultCap);
GroupTable enumerate_group(const std::vector<Perm> &gens, std::uint64_t cap = kDefaultCap);

Spectrum spectrum(const GroupTable &G, std::string name = {});

// Orders of elements in each coset aN of N in A (same representation, N normal
// or not); coset 0 is N itself. Returns per-coset sorted order sets together
// with the coset index of the square of each coset representative.
struct CosetSpectra {
  std::vector<std::vector<std::uint32_t>> orders;
  std::vector<std::size_t> coset_of_element;  // by index in A
  std::vector<std::size_t> square_coset;      // coset of a^2 for any a in coset
};
CosetSpectra coset_spectra(const GroupTable &A, const GroupTable &N);

}  // namespace meo
