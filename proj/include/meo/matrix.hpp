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
#include <optional>
#include <utility>
#include <vector>

#include "meo/bignat.hpp"
#include "meo/field.hpp"

namespace meo {

// Square matrix over a Field; entries are field indices, row-major.
struct Matrix {
  std::uint32_t dim = 0;
  std::vector<Field::E> e;

  Matrix() = default;
  explicit Matrix(std::uint32_t d) : dim(d), e(static_cast<std::size_t>(d) * d, 0) {}

  Field::E &at(std::uint32_t i, std::uint32_t j) { return e[i * dim + j]; }
  Field::E at(std::uint32_t i, std::uint32_t j) const { return e[i * dim + j]; }
  bool operator==(const Matrix &o) const = default;
};

Matrix identity_matrix(std::uint32_t d);
Matrix scalar_matrix(std::uint32_t d, Field::E s);
Matrix diagonal_matrix(const std::vector<Field::E> &diag);
// b x b block with eigenvalue lambda on the diagonal and ones above it.
Matrix jordan_block(std::uint32_t b, Field::E lambda = 1);
Matrix direct_sum(const Matrix &a, const Matrix &b);

void mat_mul_raw(const Field &F, const Field::E *a, const Field::E *b, Field::E *c,
                 std::uint32_t d);
Matrix mat_mul(const Field &F, const Matrix &a, const Matrix &b);
Matrix mat_pow(const Field &F, const Matrix &a, const BigNat &e);
Matrix transpose(const Matrix &a);
Matrix frobenius(const Field &F, const Matrix &a, std::uint32_t k = 1);
Field::E determinant(const Field &F, Matrix a);
std::optional<Matrix> inverse(const Field &F, const Matrix &a);

bool is_identity(const Matrix &a);
bool is_scalar(const Matrix &a);

// Scales so that the first nonzero entry in row-major order equals 1.
void projective_reduce_raw(const Field &F, Field::E *e, std::size_t n);
Matrix projective_reduce(const Field &F, const Matrix &a);

// Order of a (or of its image modulo scalars when projective is set).
// Uses the exponent lcm(q^i - 1) * p^ceil(log_p d) and descends along its
// prime factors; falls back to iterated multiplication up to cap.
BigNat element_order(const Field &F, const Matrix &a, bool projective = false,
                     std::uint64_t cap = 10000000);
BigNat order_by_iteration(const Field &F, const Matrix &a, bool projective,
                          std::uint64_t cap);

struct JordanParts {
  Matrix s;  // semisimple
  Matrix u;  // unipotent
};
JordanParts jordan_decompose(const Field &F, const Matrix &g);

}  // namespace meo
