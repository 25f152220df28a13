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
#include <vector>

#include "meo/bignat.hpp"

namespace meo {

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t f = 1;
  std::vector<std::uint32_t> modulus;  // monic, low degree first, size f+1

  std::uint32_t q() const;
  bool operator==(const FieldSpec &o) const = default;
};

struct FieldElem {
  std::vector<std::uint32_t> coeffs;  // polynomial basis, low degree first
  bool operator==(const FieldElem &o) const = default;
};

// Lexicographically smallest monic irreducible polynomial of degree f over
// GF(p), ordered by the integer sum c_i p^i of its lower coefficients.
FieldSpec make_field_spec(std::uint32_t p, std::uint32_t f);

// GF(q) for q <= 256 with elements encoded as the index sum c_i p^i.
class Field {
public:
  using E = std::uint8_t;

  explicit Field(const FieldSpec &spec);
  static std::shared_ptr<const Field> make(std::uint32_t q);

  const FieldSpec &spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t f() const { return spec_.f; }
  std::uint32_t q() const { return q_; }

  E zero() const { return 0; }
  E one() const { return 1; }
  E add(E a, E b) const { return add_[a * q_ + b]; }
  E sub(E a, E b) const { return add_[a * q_ + neg_[b]]; }
  E neg(E a) const { return neg_[a]; }
  E mul(E a, E b) const { return mul_[a * q_ + b]; }
  E inv(E a) const;
  E pow(E a, std::uint64_t e) const;
  E frob(E a) const { return frob_[a]; }       // a^p
  E frob_pow(E a, std::uint32_t k) const;      // a^(p^k)
  E from_int(std::int64_t k) const;            // image of k in the prime field
  E primitive() const { return prim_; }

  E encode(const FieldElem &x) const;
  FieldElem decode(E a) const;

  const E *mul_row(E a) const { return &mul_[a * q_]; }
  const E *add_row(E a) const { return &add_[a * q_]; }

private:
  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<E> add_, mul_, neg_, inv_, frob_;
  E prim_ = 1;
};

FieldElem field_mul(const FieldElem &a, const FieldElem &b, const FieldSpec &F);
FieldElem field_add(const FieldElem &a, const FieldElem &b, const FieldSpec &F);
BigNat mult_order(const FieldElem &a, const FieldSpec &F);

}  // namespace meo
