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
#include <vector>

#include "meo/bignat.hpp"

namespace meo {

struct Perm {
  std::vector<std::uint32_t> images;  // x -> images[x], points 0..n-1

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images.size()); }
  bool operator==(const Perm &o) const = default;
};

Perm identity_perm(std::uint32_t n);
bool is_permutation(const std::vector<std::uint32_t> &images);
// Product acting first by a, then by b.
Perm perm_mul(const Perm &a, const Perm &b);
Perm perm_inverse(const Perm &a);
std::vector<std::uint32_t> cycle_type(const Perm &a);
BigNat element_order(const Perm &a);

}  // namespace meo
