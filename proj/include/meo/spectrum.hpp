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

#include <string>
#include <vector>

#include "meo/bignat.hpp"

namespace meo {

enum class SpectrumSource { Oracle, Embedded, Computed };

struct Spectrum {
  std::vector<BigNat> orders;  // sorted, contains 1
  BigNat group_order = 1;
  SpectrumSource source = SpectrumSource::Computed;
  std::string name;

  BigNat meo() const { return orders.empty() ? BigNat(1) : orders.back(); }
  bool contains(const BigNat &x) const;
};

Spectrum make_spectrum(std::vector<BigNat> orders, BigNat group_order,
                       SpectrumSource source, std::string name = {});
const char *to_string(SpectrumSource s);

}  // namespace meo
