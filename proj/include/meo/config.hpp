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
#include <iosfwd>
#include <string>
#include <vector>

namespace meo {

// Sweep boxes and limits. Text form is `key = value` per line, '#' comments,
// lists comma-separated.
struct Config {
  std::uint64_t cap = 5000000;

  std::uint32_t landau_brute_max = 30;
  std::uint32_t landau_bound_max = 2000;

  std::uint32_t unipotent_dmax = 32;
  std::vector<std::uint32_t> unipotent_primes{2, 3, 5};

  std::uint32_t divisibility_mmax = 10;
  std::uint32_t divisibility_kmax = 4;
  std::uint32_t divisibility_fmax = 4;
  std::vector<std::uint32_t> divisibility_primes{2, 3, 5};

  std::uint32_t tori_dmax = 12;
  std::vector<std::uint32_t> tori_q{2, 3, 4, 5, 7, 8, 9};

  std::uint32_t unitary_dmax = 12;
  std::uint32_t unitary_qmax = 9;

  std::uint32_t quotient_kmax = 60;
  std::uint32_t quotient_tmax = 3;

  std::uint32_t partition_mmin = 16;
  std::uint32_t partition_mmax = 60;

  std::uint32_t catalog_dmax = 12;
  std::uint32_t catalog_mmax = 9;
  std::uint32_t catalog_qmax = 32;
  std::uint32_t catalog_altmax = 40;
};

Config parse_config(std::istream &in);
Config load_config(const std::string &path);
void write_config(std::ostream &out, const Config &c);

}  // namespace meo
