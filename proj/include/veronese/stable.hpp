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

#ifndef VERONESE_STABLE_HPP
#define VERONESE_STABLE_HPP

#include <vector>

#include "veronese/core.hpp"

namespace veronese {

/// A squarefree monomial ideal held by the supports of its minimal
/// generators.  Construction minimalizes the family by inclusion.  The
/// empty family encodes the zero ideal; the family {{}} encodes the unit
/// ideal.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal(int n, std::vector<IndexSet> gens);
  static SquarefreeIdeal zero(int n) { return SquarefreeIdeal(n, {}); }
  static SquarefreeIdeal unit(int n) {
    return SquarefreeIdeal(n, {IndexSet{}});
  }
  /// Throws PreconditionError unless every generator is squarefree.
  static SquarefreeIdeal from_monomial_ideal(const MonomialIdeal& ideal);

  int vars() const { return n_; }
  /// Sorted ascending-lexicographically as index sequences.
  const std::vector<IndexSet>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }

  MonomialIdeal to_monomial_ideal() const;

  bool operator==(const SquarefreeIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<IndexSet> gens_;
};

/// m(J) = largest variable index in a minimal generator, b(J) = largest
/// generator degree.  Satisfies 1 <= b <= m <= n.
struct MBInvariants {
  int m = 0;
  int b = 0;
  bool operator==(const MBInvariants&) const = default;
};

/// true iff replacing any variable x_j of any generator by any smaller
/// variable x_l not already present lands back in the ideal.
bool is_squarefree_strongly_stable(const SquarefreeIdeal& ideal);

/// The smallest squarefree strongly stable ideal containing the given
/// supports: closure of the family under the moves j -> l (l < j, l not in
/// the support), then minimalized.
SquarefreeIdeal strongly_stable_closure(int n,
                                        const std::vector<IndexSet>& gens);

/// The unique minimal subset of G(J) whose strongly stable closure
/// regenerates J.  Requires is_squarefree_strongly_stable(ideal); throws
/// PreconditionError otherwise.  The minimality of the result is verified
/// by re-closing it, not assumed.
std::vector<IndexSet> borel_generators(const SquarefreeIdeal& ideal);

/// Throws PreconditionError on the zero or unit ideal.
MBInvariants mb(const SquarefreeIdeal& ideal);

/// Maximal subsets of [n] containing no generator support (the facets of
/// the complex whose Stanley-Reisner ideal this is).  Throws
/// PreconditionError on the unit ideal, which has no faces at all.
std::vector<IndexSet> facets(const SquarefreeIdeal& ideal);

/// The Alexander dual: generated by the complements of the facets.  An
/// involution on proper nonzero squarefree ideals; its generators
/// correspond to the minimal vertex covers.  Throws PreconditionError on
/// the zero and unit ideals.
SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal);

/// codim S/J = max of min(u) over G(J), valid for squarefree strongly
/// stable J only (checked; throws PreconditionError).
int codim(const SquarefreeIdeal& ideal);

/// codepth S/J = max of (max(u) - deg(u)) over G(J), plus one; same
/// validity domain as codim.
int codepth(const SquarefreeIdeal& ideal);

/// Cohen-Macaulay test for squarefree strongly stable ideals:
/// codim == codepth.
bool is_cm_sqfree_stable(const SquarefreeIdeal& ideal);

}  // namespace veronese

#endif  // VERONESE_STABLE_HPP
