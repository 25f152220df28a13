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
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "meo/bignat.hpp"
#include "meo/config.hpp"
#include "meo/grpdata.hpp"
#include "meo/poly.hpp"

namespace meo {

struct SweepReport {
  std::string lemma;
  std::string box;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};
nlohmann::json to_json(const SweepReport &r);

struct SignedPart {
  std::uint32_t a = 1;
  int eps = 1;
};
using SignedPartition = std::vector<SignedPart>;

// p^ceil(log_p d), with value 1 for d = 0.
BigNat max_unipotent_order(std::uint32_t d, std::uint32_t p);

// Exponent of (C_k1 x ... x C_kt)/C with C the diagonal subgroup of order k.
BigNat cyclic_quotient_exponent(std::uint64_t k, const std::vector<std::uint64_t> &ks);

struct DivisibilityCheck {
  bool divides[3] = {true, true, true};    // parts (i)-(iii); unused part stays true
  bool applies[3] = {true, false, false};  // (ii) for m odd, (iii) for m even
  bool inequality[3] = {true, true, true};
  bool exceptional[3] = {false, false, false};  // tuple is the stated exception
  bool ok() const;
};
DivisibilityCheck check_divisibility_lemma(std::uint32_t m, std::uint32_t k, std::uint32_t f,
                                           std::uint32_t p);

struct SignedLcm {
  BigNat value;
  SignedPartition witness;
};
SignedLcm signed_lcm_max(std::uint32_t d, std::uint64_t q);

struct ToriCheck {
  BigNat max_all, max_multi;  // over all partitions; over those with t >= 2
  bool bound_ok = true, halved_ok = true;
  bool ok() const { return bound_ok && halved_ok; }
};
ToriCheck check_tori_bound(std::uint32_t d, std::uint64_t q);

struct UnitaryCheck {
  BigNat lhs, rhs;
  bool ok = true;
};
// Lcm over the parts of q^b - (-1)^b against q^(d-1) - (-1)^(d-1); for a
// single part compares (q^d - (-1)^d)/(q+1) instead.
UnitaryCheck unitary_lcm_bound(const std::vector<std::uint32_t> &bs, std::uint64_t q);
// (q^(e-1) - (-1)^(e-1)) * max(p^ceil(log_p d+), p^ceil(log_p d-)) against the
// four-case value for d = d+ + d- + e. For e = 0 the left side is rational
// and compared after multiplying by q.
UnitaryCheck unitary_mixed_bound(std::uint32_t d_plus, std::uint32_t d_minus, std::uint32_t e,
                                 std::uint64_t q);

BigNat centralizer_unipotent_bound(const SemisimpleShape &shape, std::uint32_t p);

struct PartitionCountCheck {
  BigNat count;  // m! / ((a!)^b b!)
  bool ok = false;
};
// Requires a, b >= 2 and ab >= 16.
PartitionCountCheck check_partition_count_bound(std::uint32_t a, std::uint32_t b);

struct OutBoundCheck {
  BigNat lhs, rhs;  // (4|Out|)^3 and |T|^2
  bool ok = false;
};
OutBoundCheck check_out_bound(const GroupId &T);

// Sweeps over configured boxes.
SweepReport sweep_unipotent(const Config &c);
SweepReport sweep_quotient_exponent(const Config &c);
SweepReport sweep_divisibility(const Config &c);
SweepReport sweep_tori(const Config &c);
SweepReport sweep_unitary(const Config &c);
SweepReport sweep_partition_count(const Config &c);
SweepReport sweep_out_bound(const Config &c);
// Every commuting pair (s semisimple, u unipotent) in GL_d(q) has
// |u| <= centralizer_unipotent_bound(shape(s)).
SweepReport check_centralizer_oracle(std::uint32_t d, std::uint32_t q,
                                     std::uint64_t cap = 5000000);
std::vector<SweepReport> lemma_suite(const Config &c);

}  // namespace meo
