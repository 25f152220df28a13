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
#include "meo/spectrum.hpp"

namespace meo {

struct LandauTable {
  std::uint32_t upto = 0;
  std::vector<BigNat> values;  // values[m] = g(m), values[0] = 1

  const BigNat &operator()(std::uint32_t m) const { return values.at(m); }
};

LandauTable landau_table(std::uint32_t upto);
BigNat landau(std::uint32_t m);

struct LandauBoundReport {
  std::uint32_t m = 0;
  double log_g = 0, lower = 0, upper = 0;
  bool lower_ok = false, upper_ok = false;
  bool ok() const { return lower_ok && upper_ok; }
};

inline constexpr double kLandauA = 0.975;
inline constexpr double kBoundSlack = 1e-9;

LandauBoundReport check_landau_bounds(std::uint32_t m);
LandauBoundReport check_landau_bounds(std::uint32_t m, const BigNat &g);

// All lcms of partitions of m: the spectrum of Sym(m).
Spectrum sym_spectrum(std::uint32_t m);
// Even cycle types only.
Spectrum alt_spectrum(std::uint32_t m);

BigNat meo_direct_power(const Spectrum &S, std::uint32_t ell);
BigNat meo_wreath(const Spectrum &S, std::uint32_t ell);

}  // namespace meo
