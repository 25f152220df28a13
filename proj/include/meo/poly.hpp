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
#include <utility>
#include <vector>

#include "meo/bignat.hpp"
#include "meo/field.hpp"
#include "meo/matrix.hpp"

namespace meo {

// Polynomials over a Field, coefficients low degree first, no trailing zeros.
using Poly = std::vector<Field::E>;

void poly_trim(Poly &a);
int poly_degree(const Poly &a);  // -1 for zero
Poly poly_add(const Field &F, const Poly &a, const Poly &b);
Poly poly_sub(const Field &F, const Poly &a, const Poly &b);
Poly poly_mul(const Field &F, const Poly &a, const Poly &b);
std::pair<Poly, Poly> poly_divmod(const Field &F, const Poly &a, const Poly &b);
Poly poly_mod(const Field &F, const Poly &a, const Poly &m);
Poly poly_gcd(const Field &F, Poly a, Poly b);  // monic
Poly poly_monic(const Field &F, Poly a);
Poly poly_derivative(const Field &F, const Poly &a);
Poly poly_powmod(const Field &F, const Poly &a, const BigNat &e, const Poly &m);

// Characteristic polynomial via reduction to Hessenberg form.
Poly char_poly(const Field &F, const Matrix &a);

// Monic irreducible factors with multiplicities, sorted by (degree, coeffs).
// Squarefree decomposition, distinct-degree and equal-degree splitting with a
// fixed-seed random sequence.
std::vector<std::pair<Poly, unsigned>> factor_poly(const Field &F, const Poly &f);

struct SemisimpleShape {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parts;  // (d_i, m_i)
  std::uint32_t dimension() const;
};

// Homogeneous components of a semisimple matrix: one part per irreducible
// factor of its characteristic polynomial, with d_i its degree and m_i its
// multiplicity.
SemisimpleShape semisimple_shape(const Field &F, const Matrix &s);

}  // namespace meo
