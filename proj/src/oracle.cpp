// Copyright 2026 The Authors.
//
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

#include "veronese/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

namespace veronese::oracle {

namespace {

void require_nonzero_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw DomainError("the oracle needs a nonzero proper ideal");
  }
}

}  // namespace

std::vector<IndexSet> minimal_vertex_covers(const MonomialIdeal& ideal,
                                            const OracleBudget& budget) {
  require_nonzero_proper(ideal);
  const int n = ideal.vars();
  if (n > 62 || (1LL << n) > budget.max_subsets) {
    throw BudgetError("vertex cover enumeration exceeds the subset budget");
  }
  // Distinct generator supports as bitmasks.
  std::vector<std::uint64_t> supports;
  for (const Monomial& u : ideal.generators()) {
    std::uint64_t mask = 0;
    for (int i : u.support()) mask |= std::uint64_t{1} << (i - 1);
    supports.push_back(mask);
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()),
                 supports.end());

  std::vector<std::uint64_t> found;
  std::vector<IndexSet> out;
  const std::uint64_t size = std::uint64_t{1} << n;
  // Increasing cardinality, so every cover not dominated by an earlier one
  // is inclusion-minimal.
  for (int k = 0; k <= n; ++k) {
    for (std::uint64_t w = 0; w < size; ++w) {
      if (std::popcount(w) != k) continue;
      bool dominated = false;
      for (std::uint64_t f : found) {
        if ((f & w) == f) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      bool covers = true;
      for (std::uint64_t s : supports) {
        if ((s & w) == 0) {
          covers = false;
          break;
        }
      }
      if (!covers) continue;
      found.push_back(w);
      std::vector<int> members;
      for (int i = 0; i < n; ++i) {
        if (w & (std::uint64_t{1} << i)) members.push_back(i + 1);
      }
      out.push_back(IndexSet(std::move(members)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_equidimensional_bruteforce(const MonomialIdeal& ideal,
                                   const OracleBudget& budget) {
  std::vector<IndexSet> covers = minimal_vertex_covers(ideal, budget);
  for (const IndexSet& w : covers) {
    if (w.size() != covers.front().size()) return false;
  }
  return true;
}

std::vector<PrimeWitness> associated_primes_bruteforce(
    const MonomialIdeal& ideal, const OracleBudget& budget) {
  require_nonzero_proper(ideal);
  const int n = ideal.vars();
  const auto& gens = ideal.generators();

  std::vector<int> lcm(static_cast<std::size_t>(n), 0);
  for (const Monomial& u : gens) {
    for (int i = 0; i < n; ++i) {
      lcm[static_cast<std::size_t>(i)] = std::max(
          lcm[static_cast<std::size_t>(i)],
          u.exponents()[static_cast<std::size_t>(i)]);
    }
  }
  long long divisors = 1;
  for (int e : lcm) {
    divisors *= e + 1;
    if (divisors > budget.max_divisors) {
      throw BudgetError("colon search exceeds the divisor budget");
    }
  }

  // deficits[g] counts coordinates where generator g exceeds the current z;
  // it is maintained incrementally while the divisor lattice is walked.
  // buckets[coord][e] lists the generators whose exponent in coord is e,
  // so a step of z only touches the generators it affects.
  std::vector<int> deficit(gens.size(), 0);
  std::size_t divisible = gens.size();  // generators with deficit zero
  std::vector<std::vector<std::vector<std::size_t>>> buckets(
      static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    buckets[static_cast<std::size_t>(i)].resize(
        static_cast<std::size_t>(lcm[static_cast<std::size_t>(i)]) + 1);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      buckets[static_cast<std::size_t>(i)]
             [static_cast<std::size_t>(
                  gens[g].exponents()[static_cast<std::size_t>(i)])]
                 .push_back(g);
    }
  }
  auto raise_deficit = [&deficit, &divisible](std::size_t g) {
    if (deficit[g]++ == 0) --divisible;
  };
  auto lower_deficit = [&deficit, &divisible](std::size_t g) {
    if (--deficit[g] == 0) ++divisible;
  };

  std::vector<int> z(static_cast<std::size_t>(n), 0);
  std::map<IndexSet, Monomial> witnesses;

  std::function<void(int)> walk = [&](int coord) {
    if (coord == n) {
      // z in I exactly when some generator has no exceeding coordinate.
      if (divisible > 0) return;
      // I : z is generated by the quotients u / gcd(u, z).  It equals the
      // prime on A = { i : some quotient is exactly x_i } iff every
      // quotient is divisible by some x_i with i in A.
      std::uint64_t a_mask = 0;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (deficit[g] != 1) continue;
        const auto& exps = gens[g].exponents();
        for (int i = 0; i < n; ++i) {
          if (exps[static_cast<std::size_t>(i)] >
              z[static_cast<std::size_t>(i)]) {
            if (exps[static_cast<std::size_t>(i)] ==
                z[static_cast<std::size_t>(i)] + 1) {
              a_mask |= std::uint64_t{1} << i;
            }
            break;
          }
        }
      }
      if (a_mask == 0) return;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& exps = gens[g].exponents();
        bool meets = false;
        for (int i = 0; i < n && !meets; ++i) {
          meets = (a_mask & (std::uint64_t{1} << i)) &&
                  exps[static_cast<std::size_t>(i)] >
                      z[static_cast<std::size_t>(i)];
        }
        if (!meets) return;
      }
      std::vector<int> members;
      for (int i = 0; i < n; ++i) {
        if (a_mask & (std::uint64_t{1} << i)) members.push_back(i + 1);
      }
      // Keep the least witness per prime, comparing exponent vectors from
      // the last coordinate backwards; that is the selection that
      // reproduces the witnesses the colon identities are usually quoted
      // with (small exponents on late variables).
      auto colex_less = [](const std::vector<int>& x,
                           const std::vector<int>& y) {
        return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(),
                                            y.rend());
      };
      IndexSet key(std::move(members));
      auto it = witnesses.find(key);
      if (it == witnesses.end()) {
        witnesses.emplace(std::move(key), Monomial(z));
      } else if (colex_less(z, it->second.exponents())) {
        it->second = Monomial(z);
      }
      return;
    }
    // z[coord] = 0: every generator exceeding in this coordinate counts.
    const auto& coord_buckets = buckets[static_cast<std::size_t>(coord)];
    for (int e = 1; e <= lcm[static_cast<std::size_t>(coord)]; ++e) {
      for (std::size_t g : coord_buckets[static_cast<std::size_t>(e)]) {
        raise_deficit(g);
      }
    }
    walk(coord + 1);
    for (int e = 1; e <= lcm[static_cast<std::size_t>(coord)]; ++e) {
      z[static_cast<std::size_t>(coord)] = e;
      for (std::size_t g : coord_buckets[static_cast<std::size_t>(e)]) {
        lower_deficit(g);
      }
      walk(coord + 1);
    }
    // Every generator exponent lies within the lcm, so the raise/lower
    // pairs above net to zero and the deficits are already restored.
    z[static_cast<std::size_t>(coord)] = 0;
  };
  if (n > 62) throw BudgetError("colon search supports at most 62 variables");
  walk(0);

  std::vector<PrimeWitness> out;
  out.reserve(witnesses.size());
  for (auto& [indices, witness] : witnesses) {
    out.push_back(PrimeWitness{indices, witness});
  }
  return out;
}

bool is_unmixed_bruteforce(const MonomialIdeal& ideal,
                           const OracleBudget& budget) {
  std::vector<PrimeWitness> ass = associated_primes_bruteforce(ideal, budget);
  std::vector<IndexSet> primes;
  primes.reserve(ass.size());
  for (const PrimeWitness& pw : ass) primes.push_back(pw.indices);
  return primes == minimal_vertex_covers(ideal, budget);
}

}  // namespace veronese::oracle
