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
#include <string>
#include <vector>

#include "meo/field.hpp"
#include "meo/group.hpp"
#include "meo/matrix.hpp"
#include "meo/perm.hpp"

namespace meo {

// Generating sets for the classical groups. Forms are antidiagonal; the
// unitary groups are built over the field GF(q^2) passed in.
std::vector<Matrix> sl_generators(const Field &F, std::uint32_t d);
std::vector<Matrix> gl_generators(const Field &F, std::uint32_t d);
Matrix symplectic_form(std::uint32_t m, const Field &F);
Matrix unitary_form(std::uint32_t d);
std::vector<Matrix> sp_generators(const Field &F, std::uint32_t m);
std::vector<Matrix> csp_generators(const Field &F, std::uint32_t m);
std::vector<Matrix> su_generators(const Field &F2, std::uint32_t d);
std::vector<Matrix> gu_generators(const Field &F2, std::uint32_t d);

bool preserves_symplectic(const Field &F, const Matrix &a, const Matrix &J);
bool preserves_unitary(const Field &F2, const Matrix &a, const Matrix &J);

std::vector<Perm> symmetric_generators(std::uint32_t m);
std::vector<Perm> alternating_generators(std::uint32_t m);
// H wr Sym(2) in its imprimitive action on 2n points.
std::vector<Perm> wreath_with_s2(const std::vector<Perm> &h);

// Semilinear action of linear groups on projective points.
struct SemilinearSpec {
  bool diagonal = false;  // GL instead of SL
  bool field = false;     // Frobenius x -> x^p
  bool graph = false;     // inverse-transpose, needs hyperplanes
};
std::vector<Perm> linear_action_perms(std::uint32_t d, std::uint32_t q, SemilinearSpec s,
                                      bool with_hyperplanes);
// PGU_d(q) (or PSU with full=false) with optional field automorphisms, acting
// on the isotropic points of the hermitian form.
std::vector<Perm> unitary_action_perms(std::uint32_t d, std::uint32_t q, bool full,
                                       bool field);
// PCSp_{2m}(q) (or PSp with full=false) with optional field automorphisms on
// the points of PG(2m-1, q).
std::vector<Perm> symplectic_action_perms(std::uint32_t m, std::uint32_t q, bool full,
                                          bool field);

// A group description the oracle can enumerate.
struct GroupSource {
  std::string name;
  ElementKind kind = ElementKind::Permutation;
  std::vector<Perm> perms;
  std::vector<Matrix> mats;
  std::shared_ptr<const Field> field;
};

GroupTable enumerate(const GroupSource &src, std::uint64_t cap = kDefaultCap);

// Named constructions: "Sym(m)", "Alt(m)", "PSL(d,q)", "PGL(d,q)", "PSU(d,q)",
// "PGU(d,q)", "PSp(2m,q)", "PCSp(2m,q)", "GL(d,q)", "SL(d,q)", "Aut(...)" for
// the supported socles, "PGammaL(d,q)", "PSigmaL(d,q)", "PSL(3,4).2^2",
// "PSL(3,3).2", "PSU(3,q).2", "PGammaU(3,q)", and generator-file groups such
// as "M11", "M12.2", "M22.2". Throws UnsupportedGroup for unknown names.
GroupSource named_group(const std::string &name);

}  // namespace meo
