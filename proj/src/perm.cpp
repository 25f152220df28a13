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
#include "meo/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace meo {

Perm identity_perm(std::uint32_t n)
{
  Perm p;
  p.images.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    p.images[i] = i;
  return p;
}

bool is_permutation(const std::vector<std::uint32_t> &images)
{
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t x : images) {
    if (x >= images.size() || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

Perm perm_mul(const Perm &a, const Perm &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("perm_mul: degree mismatch");
  Perm c;
  c.images.resize(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i)
    c.images[i] = b.images[a.images[i]];
  return c;
}

Perm perm_inverse(const Perm &a)
{
  Perm c;
  c.images.resize(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i)
    c.images[a.images[i]] = i;
  return c;
}

std::vector<std::uint32_t> cycle_type(const Perm &a)
{
  if (!is_permutation(a.images))
    throw std::invalid_argument("cycle_type: not a permutation");
  std::vector<bool> seen(a.degree(), false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < a.degree(); ++i) {
    if (seen[i])
      continue;
    std::uint32_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = a.images[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

BigNat element_order(const Perm &a)
{
  BigNat r = 1;
  for (std::uint32_t c : cycle_type(a))
    r = lcm_big(r, c);
  return r;
}

}  // namespace meo
