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
#include "meo/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "meo/builders.hpp"
#include "meo/group.hpp"
#include "meo/matrix.hpp"

namespace meo {

namespace {

BigNat signed_pow(std::uint64_t q, std::uint32_t a, int eps)
{
  return pow_big(BigNat(q), a) - eps;
}

// (-1)^b
int minus_one_pow(std::uint32_t b) { return (b % 2 == 0) ? 1 : -1; }

std::uint32_t prime_of(std::uint64_t q)
{
  std::uint32_t p = 0, f = 0;
  if (!is_prime_power(q, &p, &f))
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return p;
}

std::string fmt(const SignedPartition &w)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i)
    os << (i ? "," : "") << "(" << w[i].a << "," << (w[i].eps > 0 ? "+" : "-") << ")";
  return os.str();
}

template <class V>
std::string join(const V &v)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os.str();
}

// Depth-first walk over signed partitions of d. Signed parts are keyed by
// 2a + (eps > 0) and emitted in nonincreasing key order, so each multiset
// is visited once.
void walk_signed(std::uint32_t d, std::uint64_t q,
                 const std::function<void(const SignedPartition &, const BigNat &)> &visit)
{
  SignedPartition cur;
  std::function<void(std::uint32_t, std::uint32_t, const BigNat &)> rec =
      [&](std::uint32_t left, std::uint32_t max_key, const BigNat &l) {
        if (left == 0) {
          visit(cur, l);
          return;
        }
        for (std::uint32_t key = std::min(max_key, 2 * left + 1); key >= 2; --key) {
          std::uint32_t a = key / 2;
          int eps = (key % 2) ? 1 : -1;
          cur.push_back({a, eps});
          rec(left - a, key, lcm_big(l, signed_pow(q, a, eps)));
          cur.pop_back();
        }
      };
  rec(d, 2 * d + 1, BigNat(1));
}

void walk_partitions(std::uint32_t d,
                     const std::function<void(const std::vector<std::uint32_t> &)> &visit)
{
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t left,
                                                               std::uint32_t mx) {
    if (left == 0) {
      visit(cur);
      return;
    }
    for (std::uint32_t a = std::min(left, mx); a >= 1; --a) {
      cur.push_back(a);
      rec(left - a, a);
      cur.pop_back();
    }
  };
  rec(d, d);
}

BigNat factorial(std::uint32_t n)
{
  BigNat r = 1;
  for (std::uint32_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

// Order of e_i in (C_k1 x ... x C_kt)/C by scanning multiples against the
// explicit element list of C.
std::uint64_t brute_generator_order(std::uint64_t k, const std::vector<std::uint64_t> &ks,
                                    std::size_t i)
{
  std::vector<std::vector<std::uint64_t>> C;
  for (std::uint64_t j = 0; j < k; ++j) {
    std::vector<std::uint64_t> c(ks.size());
    for (std::size_t l = 0; l < ks.size(); ++l)
      c[l] = (j * (ks[l] / k)) % ks[l];
    C.push_back(std::move(c));
  }
  for (std::uint64_t e = 1;; ++e) {
    std::vector<std::uint64_t> x(ks.size(), 0);
    x[i] = e % ks[i];
    if (std::find(C.begin(), C.end(), x) != C.end())
      return e;
  }
}

SweepReport report(std::string lemma, std::string box)
{
  SweepReport r;
  r.lemma = std::move(lemma);
  r.box = std::move(box);
  return r;
}

}  // namespace

nlohmann::json to_json(const SweepReport &r)
{
  return {{"lemma", r.lemma},           {"box", r.box},
          {"checked", r.checked},       {"violations", r.violations},
          {"notes", r.notes},           {"ok", r.ok()}};
}

BigNat max_unipotent_order(std::uint32_t d, std::uint32_t p)
{
  if (p < 2)
    throw std::invalid_argument("max_unipotent_order: p must be prime");
  return BigNat(ceil_pow(p, d));
}

BigNat cyclic_quotient_exponent(std::uint64_t k, const std::vector<std::uint64_t> &ks)
{
  if (k == 0 || ks.empty())
    throw std::invalid_argument("cyclic_quotient_exponent: empty input");
  for (auto x : ks)
    if (x == 0 || x % k != 0)
      throw std::invalid_argument("cyclic_quotient_exponent: " + std::to_string(x) +
                                  " not divisible by " + std::to_string(k));
  if (ks.size() == 1)
    return BigNat(ks[0] / k);
  BigNat l = 1;
  for (auto x : ks)
    l = lcm_big(l, BigNat(x));
  return l;
}

bool DivisibilityCheck::ok() const
{
  for (int i = 0; i < 3; ++i)
    if (applies[i] && (!divides[i] || !(inequality[i] || exceptional[i])))
      return false;
  return true;
}

DivisibilityCheck check_divisibility_lemma(std::uint32_t m, std::uint32_t k, std::uint32_t f,
                                           std::uint32_t p)
{
  if (m == 0 || k == 0 || f == 0 || !is_prime_u64(p))
    throw std::invalid_argument("check_divisibility_lemma: bad arguments");
  DivisibilityCheck r;
  BigNat Q = pow_big(pow_big(BigNat(p), f), k);
  BigNat Qm = pow_big(Q, m);
  BigNat floor_ = ceil_pow(p, m);
  auto part = [&](int i, const BigNat &num, const BigNat &den) {
    r.divides[i] = (num % den == 0);
    r.inequality[i] = num >= floor_ * den;
  };
  part(0, Qm - 1, Q - 1);
  r.applies[1] = (m % 2 == 1);
  r.applies[2] = (m % 2 == 0);
  if (r.applies[1]) {
    part(1, Qm + 1, Q + 1);
    r.exceptional[1] = (p == 2 && k == 1 && m == 3 && f == 1);
  }
  if (r.applies[2]) {
    part(2, Qm - 1, Q + 1);
    r.exceptional[2] = (k == 1 && m == 2 && f == 1);
  }
  return r;
}

SignedLcm signed_lcm_max(std::uint32_t d, std::uint64_t q)
{
  if (d == 0 || d > 16)
    throw std::invalid_argument("signed_lcm_max: need 1 <= d <= 16");
  prime_of(q);
  SignedLcm best;
  best.value = 0;
  walk_signed(d, q, [&](const SignedPartition &w, const BigNat &l) {
    if (l > best.value) {
      best.value = l;
      best.witness = w;
    }
  });
  return best;
}

ToriCheck check_tori_bound(std::uint32_t d, std::uint64_t q)
{
  if (d == 0 || d > 16)
    throw std::invalid_argument("check_tori_bound: need 1 <= d <= 16");
  prime_of(q);
  ToriCheck r;
  walk_signed(d, q, [&](const SignedPartition &w, const BigNat &l) {
    r.max_all = std::max(r.max_all, l);
    if (w.size() >= 2)
      r.max_multi = std::max(r.max_multi, l);
  });
  BigNat top = pow_big(BigNat(q), d + 1);
  r.bound_ok = r.max_all * (q - 1) <= top;
  if (q % 2 == 1)
    r.halved_ok = r.max_multi * 2 * (q - 1) <= top;
  return r;
}

UnitaryCheck unitary_lcm_bound(const std::vector<std::uint32_t> &bs, std::uint64_t q)
{
  if (bs.empty())
    throw std::invalid_argument("unitary_lcm_bound: empty partition");
  std::uint32_t d = 0;
  for (auto b : bs) {
    if (b == 0)
      throw std::invalid_argument("unitary_lcm_bound: zero part");
    d += b;
  }
  UnitaryCheck r;
  BigNat Q(q);
  if (bs.size() == 1) {
    r.lhs = (pow_big(Q, d) - minus_one_pow(d)) / (Q + 1);
  } else {
    r.lhs = 1;
    for (auto b : bs)
      r.lhs = lcm_big(r.lhs, pow_big(Q, b) - minus_one_pow(b));
  }
  r.rhs = pow_big(Q, d - 1) - minus_one_pow(d - 1);
  r.ok = r.lhs <= r.rhs;
  return r;
}

UnitaryCheck unitary_mixed_bound(std::uint32_t d_plus, std::uint32_t d_minus, std::uint32_t e,
                                 std::uint64_t q)
{
  std::uint32_t d = d_plus + d_minus + e;
  if (d < 3)
    throw std::invalid_argument("unitary_mixed_bound: need d >= 3");
  std::uint32_t p = prime_of(q);
  BigNat Q(q), P(p);
  BigNat M = std::max(ceil_pow(p, d_plus), ceil_pow(p, d_minus));
  BigNat rhs;
  if (d % 2 == 1)
    rhs = (q > p) ? pow_big(Q, d - 1) - 1 : (pow_big(P, d - 2) + 1) * P;
  else
    rhs = (q > 2) ? pow_big(Q, d - 1) + 1 : 4 * (pow_big(BigNat(2), d - 3) + 1);
  UnitaryCheck r;
  if (e == 0) {
    // q^{-1} + 1 = (1 + q)/q
    r.lhs = (Q + 1) * M;
    r.rhs = Q * rhs;
  } else {
    r.lhs = (pow_big(Q, e - 1) - minus_one_pow(e - 1)) * M;
    r.rhs = rhs;
  }
  r.ok = r.lhs <= r.rhs;
  return r;
}

BigNat centralizer_unipotent_bound(const SemisimpleShape &shape, std::uint32_t p)
{
  std::uint64_t best = 1;
  for (const auto &[di, mi] : shape.parts) {
    if (di == 0 || mi == 0)
      throw std::invalid_argument("centralizer_unipotent_bound: invalid shape");
    best = std::max(best, ceil_pow(p, mi));
  }
  return BigNat(best);
}

PartitionCountCheck check_partition_count_bound(std::uint32_t a, std::uint32_t b)
{
  if (a < 2 || b < 2 || a * b < 16)
    throw std::invalid_argument("check_partition_count_bound: need a, b >= 2 and ab >= 16");
  std::uint32_t m = a * b;
  PartitionCountCheck r;
  r.count = factorial(m) / (pow_big(factorial(a), b) * factorial(b));
  r.ok = r.count * pow_big(BigNat(10), m) >= pow_big(BigNat(17), m);
  return r;
}

OutBoundCheck check_out_bound(const GroupId &T)
{
  OutBoundCheck r;
  BigNat x = 4 * out_order(T);
  r.lhs = x * x * x;
  BigNat n = group_order(T);
  r.rhs = n * n;
  r.ok = r.lhs < r.rhs;
  return r;
}

SweepReport sweep_unipotent(const Config &c)
{
  auto r = report("unipotent_order", "d<=" + std::to_string(c.unipotent_dmax) + " p in {" +
                                       join(c.unipotent_primes) + "}");
  for (auto p : c.unipotent_primes) {
    auto F = Field::make(p);
    for (std::uint32_t d = 1; d <= c.unipotent_dmax; ++d) {
      BigNat want = max_unipotent_order(d, p);
      BigNat got = element_order(*F, jordan_block(d));
      ++r.checked;
      if (want != got)
        r.violations.push_back("d=" + std::to_string(d) + " p=" + std::to_string(p) +
                               " formula " + to_string(want) + " oracle " + to_string(got));
    }
  }
  return r;
}

SweepReport sweep_quotient_exponent(const Config &c)
{
  auto r = report("quotient_exponent", "k_i<=" + std::to_string(c.quotient_kmax) +
                                         " t<=" + std::to_string(c.quotient_tmax));
  std::vector<std::uint64_t> ks;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t t) {
    if (!ks.empty()) {
      std::uint64_t g = 0;
      for (auto x : ks)
        g = std::gcd(g, x);
      for (std::uint64_t k = 1; k <= g; ++k) {
        if (g % k)
          continue;
        std::uint64_t brute = 1;
        for (std::size_t i = 0; i < ks.size(); ++i)
          brute = std::lcm(brute, brute_generator_order(k, ks, i));
        ++r.checked;
        if (cyclic_quotient_exponent(k, ks) != brute)
          r.violations.push_back("k=" + std::to_string(k) + " ks=" + join(ks));
      }
    }
    if (t == c.quotient_tmax)
      return;
    std::uint64_t lo = ks.empty() ? 1 : ks.back();
    for (std::uint64_t x = lo; x <= c.quotient_kmax; ++x) {
      ks.push_back(x);
      rec(t + 1);
      ks.pop_back();
    }
  };
  rec(0);
  return r;
}

SweepReport sweep_divisibility(const Config &c)
{
  auto r = report("divisibility", "m<=" + std::to_string(c.divisibility_mmax) +
                                    " k<=" + std::to_string(c.divisibility_kmax) +
                                    " f<=" + std::to_string(c.divisibility_fmax) + " p in {" +
                                    join(c.divisibility_primes) + "}");
  static const char *names[3] = {"(i)", "(ii)", "(iii)"};
  for (auto p : c.divisibility_primes)
    for (std::uint32_t f = 1; f <= c.divisibility_fmax; ++f)
      for (std::uint32_t k = 1; k <= c.divisibility_kmax; ++k)
        for (std::uint32_t m = 1; m <= c.divisibility_mmax; ++m) {
          auto d = check_divisibility_lemma(m, k, f, p);
          ++r.checked;
          std::string tag = "(p,k,m,f)=(" + std::to_string(p) + "," + std::to_string(k) + "," +
                            std::to_string(m) + "," + std::to_string(f) + ")";
          for (int i = 0; i < 3; ++i) {
            if (!d.applies[i])
              continue;
            if (!d.divides[i])
              r.violations.push_back(std::string(names[i]) + " divisibility fails at " + tag);
            if (!d.inequality[i] && !d.exceptional[i])
              r.violations.push_back(std::string(names[i]) + " inequality fails at " + tag);
            if (d.exceptional[i])
              r.notes.push_back(std::string(names[i]) + " stated exception " + tag +
                                (d.inequality[i] ? ": inequality holds anyway"
                                                 : ": inequality fails"));
          }
        }
  return r;
}

SweepReport sweep_tori(const Config &c)
{
  auto r = report("tori", "d<=" + std::to_string(c.tori_dmax) + " q in {" + join(c.tori_q) + "}");
  for (auto q : c.tori_q)
    for (std::uint32_t d = 1; d <= c.tori_dmax; ++d) {
      auto t = check_tori_bound(d, q);
      ++r.checked;
      std::string tag = "d=" + std::to_string(d) + " q=" + std::to_string(q);
      if (!t.bound_ok)
        r.violations.push_back(tag + " max " + to_string(t.max_all) + " exceeds q^(d+1)/(q-1)" +
                               " witness " + fmt(signed_lcm_max(d, q).witness));
      if (!t.halved_ok)
        r.violations.push_back(tag + " t>=2 max " + to_string(t.max_multi) +
                               " exceeds q^(d+1)/2(q-1)");
    }
  return r;
}

SweepReport sweep_unitary(const Config &c)
{
  auto r = report("unitary", "d<=" + std::to_string(c.unitary_dmax) +
                               " q<=" + std::to_string(c.unitary_qmax));
  r.notes.push_back("single-part clause swept from d=2; at d=1 the right side is 0");
  for (std::uint64_t q = 2; q <= c.unitary_qmax; ++q) {
    if (!is_prime_power(q))
      continue;
    for (std::uint32_t d = 2; d <= c.unitary_dmax; ++d) {
      walk_partitions(d, [&](const std::vector<std::uint32_t> &bs) {
        auto u = unitary_lcm_bound(bs, q);
        ++r.checked;
        if (!u.ok)
          r.violations.push_back("lcm q=" + std::to_string(q) + " bs=" + join(bs) + ": " +
                                 to_string(u.lhs) + " > " + to_string(u.rhs));
      });
      if (d < 3)
        continue;
      for (std::uint32_t dp = 0; dp <= d; ++dp)
        for (std::uint32_t dm = 0; dp + dm <= d; ++dm) {
          auto u = unitary_mixed_bound(dp, dm, d - dp - dm, q);
          ++r.checked;
          if (!u.ok)
            r.violations.push_back("mixed q=" + std::to_string(q) + " (d+,d-,e)=(" +
                                   std::to_string(dp) + "," + std::to_string(dm) + "," +
                                   std::to_string(d - dp - dm) + ")");
        }
    }
  }
  return r;
}

SweepReport sweep_partition_count(const Config &c)
{
  auto r = report("partition_count", std::to_string(c.partition_mmin) +
                                       "<=m<=" + std::to_string(c.partition_mmax));
  for (std::uint32_t m = std::max<std::uint32_t>(c.partition_mmin, 16); m <= c.partition_mmax;
       ++m)
    for (std::uint32_t a = 2; a <= m / 2; ++a) {
      if (m % a)
        continue;
      auto pc = check_partition_count_bound(a, m / a);
      ++r.checked;
      if (!pc.ok)
        r.violations.push_back("(a,b)=(" + std::to_string(a) + "," + std::to_string(m / a) +
                               ")");
    }
  return r;
}

SweepReport sweep_out_bound(const Config &c)
{
  auto r = report("out_bound", "d<=" + std::to_string(c.catalog_dmax) +
                                 " m<=" + std::to_string(c.catalog_mmax) +
                                 " q<=" + std::to_string(c.catalog_qmax) +
                                 " alt<=" + std::to_string(c.catalog_altmax) + " sporadics");
  for (const auto &T : catalog_sweep(c.catalog_dmax, c.catalog_mmax, c.catalog_qmax,
                                     c.catalog_altmax)) {
    auto o = check_out_bound(T);
    ++r.checked;
    if (!o.ok)
      r.violations.push_back(to_string(T));
  }
  return r;
}

SweepReport check_centralizer_oracle(std::uint32_t d, std::uint32_t q, std::uint64_t cap)
{
  auto r = report("centralizer_unipotent", "GL(" + std::to_string(d) + "," + std::to_string(q) + ")");
  auto F = Field::make(q);
  std::uint32_t p = F->p();
  GroupTable G = enumerate_group(gl_generators(*F, d), F, false, cap);
  const auto &ord = G.element_orders();
  std::vector<std::size_t> semis, unis;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (ord[i] % p != 0)
      semis.push_back(i);
    std::uint32_t o = ord[i];
    while (o % p == 0)
      o /= p;
    if (o == 1 && ord[i] > 1)
      unis.push_back(i);
  }
  std::stable_sort(unis.begin(), unis.end(),
                   [&](std::size_t a, std::size_t b) { return ord[a] > ord[b]; });
  for (std::size_t s : semis) {
    std::uint32_t best = 1;
    for (std::size_t u : unis) {
      if (G.multiply_index(s, u) == G.multiply_index(u, s)) {
        best = ord[u];
        break;
      }
    }
    auto shape = semisimple_shape(*F, G.matrix_at(s));
    BigNat bound = centralizer_unipotent_bound(shape, p);
    ++r.checked;
    if (BigNat(best) > bound)
      r.violations.push_back("element " + std::to_string(s) + ": unipotent order " +
                             std::to_string(best) + " > " + to_string(bound));
  }
  return r;
}

std::vector<SweepReport> lemma_suite(const Config &c)
{
  std::vector<SweepReport> out;
  out.push_back(sweep_unipotent(c));
  out.push_back(sweep_quotient_exponent(c));
  out.push_back(sweep_divisibility(c));
  out.push_back(sweep_tori(c));
  out.push_back(sweep_unitary(c));
  out.push_back(sweep_partition_count(c));
  out.push_back(sweep_out_bound(c));
  for (auto [d, q] : {std::pair{4u, 2u}, {3u, 3u}, {2u, 4u}, {2u, 5u}})
    out.push_back(check_centralizer_oracle(d, q, c.cap));
  return out;
}

}  // namespace meo
