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

#ifndef VERONESE_TESTS_UTIL_HPP
#define VERONESE_TESTS_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "veronese/core.hpp"
#include "veronese/polymatroid.hpp"

namespace vtest {

using veronese::IndexSet;
using veronese::Monomial;
using veronese::MonomialIdeal;
using veronese::VeroneseParams;

inline Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

inline IndexSet iset(std::vector<int> members) {
  return IndexSet(std::move(members));
}

inline std::vector<IndexSet> isets(std::vector<std::vector<int>> families) {
  std::vector<IndexSet> out;
  out.reserve(families.size());
  for (auto& f : families) out.emplace_back(std::move(f));
  std::sort(out.begin(), out.end());
  return out;
}

inline MonomialIdeal ideal(int n, std::vector<std::vector<int>> rows) {
  std::vector<Monomial> gens;
  gens.reserve(rows.size());
  for (auto& r : rows) gens.emplace_back(std::move(r));
  return MonomialIdeal(n, std::move(gens));
}

/// The ideal of all degree-d monomials with exponents capped by caps.
inline MonomialIdeal vero_ideal(int d, std::vector<int> caps) {
  return veronese::polymatroidal_ideal(
      veronese::veronese_bases(VeroneseParams{d, std::move(caps)}),
      /*check=*/false);
}

inline std::vector<IndexSet> sorted_supports(const MonomialIdeal& ideal) {
  std::vector<IndexSet> out;
  out.reserve(ideal.generators().size());
  for (const Monomial& u : ideal.generators()) out.push_back(u.support());
  std::sort(out.begin(), out.end());
  return out;
}

struct Rng {
  std::mt19937_64 eng{0x5eed2026'0810ULL};
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
};

/// Feasible parameters with 1 <= a_i < d, caps sorted non-increasingly.
inline VeroneseParams random_core_params(Rng& rng, int max_n, int max_d) {
  while (true) {
    int d = rng.uniform(2, max_d);
    int n = rng.uniform(1, max_n);
    std::vector<int> caps(static_cast<std::size_t>(n));
    for (int& a : caps) a = rng.uniform(1, d - 1);
    std::sort(caps.rbegin(), caps.rend());
    long long total = std::accumulate(caps.begin(), caps.end(), 0LL);
    if (total >= d) return VeroneseParams{d, std::move(caps)};
  }
}

inline Monomial random_monomial(Rng& rng, int n, int max_exp) {
  std::vector<int> exps(static_cast<std::size_t>(n));
  for (int& e : exps) e = rng.uniform(0, max_exp);
  return Monomial(std::move(exps));
}

inline MonomialIdeal random_ideal(Rng& rng, int n, int max_gens, int max_exp) {
  std::vector<Monomial> gens;
  int count = rng.uniform(1, max_gens);
  for (int k = 0; k < count; ++k) {
    gens.push_back(random_monomial(rng, n, max_exp));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace vtest

#endif  // VERONESE_TESTS_UTIL_HPP
