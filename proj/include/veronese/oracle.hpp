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

#ifndef VERONESE_ORACLE_HPP
#define VERONESE_ORACLE_HPP

#include <vector>

#include "veronese/core.hpp"

// Deliberately naive, definition-level reimplementations of everything the
// closed-form criteria claim, used to falsify them.  Enumerations that
// would exceed their budget raise BudgetError rather than degrade.

namespace veronese::oracle {

struct OracleBudget {
  long long max_subsets = 1LL << 20;
  long long max_divisors = 1'000'000;
};

/// All inclusion-minimal W meeting the support of every generator; the
/// primes they generate are exactly the minimal primes.  Walks subsets by
/// increasing cardinality with dominance pruning.  Requires a nonzero
/// proper ideal.
std::vector<IndexSet> minimal_vertex_covers(const MonomialIdeal& ideal,
                                            const OracleBudget& budget = {});

/// All minimal vertex covers share one cardinality.
bool is_equidimensional_bruteforce(const MonomialIdeal& ideal,
                                   const OracleBudget& budget = {});

struct PrimeWitness {
  IndexSet indices;
  Monomial witness;
  bool operator==(const PrimeWitness&) const = default;
};

/// Associated primes by exhaustive colon search: every monomial z dividing
/// the componentwise maximum of G(I) with z not in I is tried, and the
/// primes among the colon ideals I : z are collected, each with its least
/// witness (exponent vectors compared from the last coordinate backwards).
/// Exponents above the componentwise maximum cannot change any colon, so
/// these witnesses are complete.
std::vector<PrimeWitness> associated_primes_bruteforce(
    const MonomialIdeal& ideal, const OracleBudget& budget = {});

/// Associated primes coincide with the minimal vertex covers.
bool is_unmixed_bruteforce(const MonomialIdeal& ideal,
                           const OracleBudget& budget = {});

}  // namespace veronese::oracle

#endif  // VERONESE_ORACLE_HPP
