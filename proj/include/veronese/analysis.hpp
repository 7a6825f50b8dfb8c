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

#ifndef VERONESE_ANALYSIS_HPP
#define VERONESE_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "veronese/core.hpp"
#include "veronese/polymatroid.hpp"
#include "veronese/stable.hpp"

namespace veronese {

/// The reduced shape the equidimensionality criteria operate on: caps
/// clamped to d, sorted non-increasingly, zero caps dropped, caps equal to
/// d peeled off.  What remains ("core") satisfies d > a_1 >= ... >= a_k >= 1.
struct NormalForm {
  VeroneseParams original;
  /// permutation[k] is the original 1-based variable index of the k-th cap
  /// in the sorted nonzero sequence (peeled caps first, then the core).
  std::vector<int> permutation;
  /// Original indices of variables whose cap is zero.
  IndexSet trimmed_zero_indices;
  /// Original indices of variables whose clamped cap equals d.
  IndexSet peeled_full_indices;
  /// Sorted caps strictly between 0 and d; empty when every nonzero cap
  /// equals d.
  VeroneseParams core;
  /// All nonzero caps equal d: the ideal is a power of the maximal ideal of
  /// the subring on its variables.
  bool pure_veronese = false;
  /// The core caps alone reach degree d.  When false the radical is the
  /// prime generated by the peeled variables.
  bool core_feasible = false;

  int peeled_count() const { return peeled_full_indices.size(); }
};

/// Throws DomainError when d == 0 (unit ideal) or when the caps cannot
/// reach degree d (zero ideal).
NormalForm normalize(const VeroneseParams& params);

/// Minimal generator supports of the radical for parameters already in
/// core normal form (d > a_1 >= ... >= a_n >= 1, feasible): the strictly
/// increasing sequences whose cap sum reaches d while every proper prefix
/// stays below d.  Throws PreconditionError on non-normalized input.
std::vector<IndexSet> radical_generators(const VeroneseParams& core);

/// G(sqrt(I)) of an arbitrary feasible parameter set, in the input's own
/// variable numbering: peeled variables contribute singletons, the core
/// contributes its generators mapped back through the sorting permutation.
SquarefreeIdeal radical_ideal(const VeroneseParams& params);

/// Evidence-carrying verdict of the Borel-generator criterion.  All index
/// data refers to the frame the criterion was evaluated in: the sorted core
/// when it is feasible, otherwise the peeled variables 1..l.
struct EquidimReport {
  bool verdict = false;
  MBInvariants mb;
  std::vector<IndexSet> borel;
  /// The degree-b Borel generator when it is unique.
  std::optional<IndexSet> unique_top_borel;
  /// First radical generator with max(u) - deg(u) > m - b, if any.
  std::optional<IndexSet> failing_generator;
  /// m - b + 1; present exactly when the verdict is true.
  std::optional<int> cover_cardinality;
};

/// Decides equidimensionality: the radical must have a unique Borel
/// generator of top degree b, namely x_{m-b+1}...x_m, and every generator
/// must satisfy max(u) - deg(u) <= m - b.  Accepts arbitrary feasible
/// parameters and normalizes internally.
EquidimReport is_equidimensional(const VeroneseParams& params);

/// Window criterion over the sorted caps.
struct MaximalPairReport {
  /// The componentwise-maximal pair (p, l) with
  /// a_{p-l+1} + ... + a_p >= d and a_{p-l+1} + ... + a_{p-1} < d.
  std::optional<std::pair<int, int>> pair;
  /// Every radical generator i_1 < ... < i_k satisfies i_k - k <= p - l.
  bool slack_condition_holds = false;
  std::optional<IndexSet> violating_generator;
  bool equidimensional = false;
};

/// Requires core normal form, like radical_generators.  All candidate
/// pairs are pairwise comparable; that is asserted at runtime.
MaximalPairReport maximal_pair(const VeroneseParams& core);

/// An associated prime P_A together with a monomial witness z of degree
/// d - 1 satisfying I : z = P_A.
struct WitnessedPrime {
  IndexSet indices;
  Monomial witness;
  bool operator==(const WitnessedPrime&) const = default;
};

enum class WitnessCheck {
  /// Re-derive each witness through the colon ideal; throws BudgetError
  /// when the generating set needed for that is too large to build.
  verify,
  /// Trust the construction.
  skip,
};

/// All associated primes of S/I by the closed-form criterion
///   sum of all caps >= d - 1 + |A|  and  sum of caps outside A <= d - 1,
/// each with a deterministically constructed witness.  Caps equal to d are
/// allowed; zero caps are trimmed internally (their variables belong to no
/// associated prime).  Index sets use the input's variable numbering.
std::vector<WitnessedPrime> associated_primes(
    const VeroneseParams& params, WitnessCheck check = WitnessCheck::verify);

/// true iff no associated prime strictly contains another, i.e. the
/// associated primes are exactly the minimal primes.
bool is_unmixed(const VeroneseParams& params);

/// The Cohen-Macaulay trichotomy.  Everything unmixed is one of the first
/// three; precedence Principal > Veronese > SquarefreeVeronese when the
/// categories overlap.
enum class CMClass { Principal, Veronese, SquarefreeVeronese, NotCohenMacaulay };

CMClass classify(const VeroneseParams& params);
const char* cm_class_name(CMClass c);

/// Equidimensionality for a strong-exchange base set: after translation,
/// either the parameters are of Veronese type and the Borel criterion
/// decides, or the ideal has a monomial factor and equidimensionality is
/// equivalent to the radical being principal.
bool strong_polymatroidal_equidimensional(const BaseSet& bases);

}  // namespace veronese

#endif  // VERONESE_ANALYSIS_HPP
