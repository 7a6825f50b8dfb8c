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

#ifndef VERONESE_POLYMATROID_HPP
#define VERONESE_POLYMATROID_HPP

#include <vector>

#include "veronese/core.hpp"

namespace veronese {

/// Candidate set of bases of a discrete polymatroid: a nonempty family of
/// equal-modulus nonnegative integer vectors.  Construction enforces the
/// shape invariants; whether the family actually satisfies the exchange
/// axioms is a separate check.
class BaseSet {
 public:
  /// Throws InvalidBaseSetError when empty, ragged, with negative entries,
  /// or with unequal moduli.
  explicit BaseSet(std::vector<std::vector<int>> vectors);

  int vars() const { return n_; }
  /// The common modulus of the vectors.
  long long rank() const { return rank_; }
  /// Sorted in descending lexicographic order.
  const std::vector<std::vector<int>>& vectors() const { return vectors_; }
  bool contains(const std::vector<int>& v) const;

  bool operator==(const BaseSet&) const = default;

 private:
  int n_ = 0;
  long long rank_ = 0;
  std::vector<std::vector<int>> vectors_;
};

/// Parameters (d; a_1,...,a_n) of the degree-d monomials with i-th exponent
/// capped at a_i.
struct VeroneseParams {
  int d = 0;
  std::vector<int> caps;

  int vars() const { return static_cast<int>(caps.size()); }
  long long cap_sum() const;
  /// Shape validation: d and caps within [0, kMaxExponent], at least one
  /// variable.  Feasibility (cap_sum() >= d) is checked by the operations
  /// that need a nonzero ideal.
  void validate() const;

  bool operator==(const VeroneseParams&) const = default;
};

/// Exchange property: for all u, v in B and every i with u_i > v_i there is
/// some j with u_j < v_j such that u - e_i + e_j lies in B.  This
/// characterizes base sets of discrete polymatroids.
bool check_exchange(const BaseSet& bases);

/// Strong exchange: the swap u - e_i + e_j stays in B for *every* pair
/// i, j with u_i > v_i and u_j < v_j.
bool check_strong_exchange(const BaseSet& bases);

/// All vectors u with |u| = d and 0 <= u_i <= a_i, in descending
/// lexicographic order.  Throws DomainError when cap_sum() < d (the family
/// would be empty).
BaseSet veronese_bases(const VeroneseParams& params);

/// Ground set rank: max over the bases of the coordinate sum over A.
/// rank(B, {}) == 0 and rank(B, [n]) == B.rank().
long long rank(const BaseSet& bases, const IndexSet& a);

/// Closed form for Veronese parameters: min(sum of caps over A, d).
long long rank_veronese(const VeroneseParams& params, const IndexSet& a);

/// Result of shifting a strong-exchange base set into Veronese position.
struct Translation {
  /// shift_i = rank([n]) - rank([n] minus i); subtracting it from every base
  /// yields a Veronese-type base set.
  std::vector<int> shift;
  BaseSet normalized;
  /// Caps of the normalized set (per-coordinate maxima) and its rank, i.e.
  /// the parameters with veronese_bases(params) == normalized.
  VeroneseParams params;
};

/// Throws NotStrongExchangeError when the strong exchange check fails, and
/// InternalError if the translated family fails to be of Veronese type
/// (impossible for genuine strong-exchange base sets).
Translation translation_normalize(const BaseSet& bases);

/// The ideal generated by x^v over the bases.  With check enabled (the
/// default) throws NotAPolymatroidError when the exchange property fails;
/// disable it for families already known to be base sets, e.g. the output
/// of veronese_bases, where the quadratic check would dominate.
MonomialIdeal polymatroidal_ideal(const BaseSet& bases, bool check = true);

/// The radical computed from the rank function alone: the squarefree ideal
/// generated by x_A over the inclusion-minimal A with rank(A) == rank(B).
MonomialIdeal radical_via_rank(const BaseSet& bases, bool check = true);

}  // namespace veronese

#endif  // VERONESE_POLYMATROID_HPP
