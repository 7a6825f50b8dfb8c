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

#ifndef VERONESE_CORE_HPP
#define VERONESE_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "veronese/errors.hpp"

namespace veronese {

// Exponents and degree bounds above this are rejected at construction;
// exact enumeration is hopeless far below it anyway.
inline constexpr int kMaxExponent = 1'000'000;

/// A set of variable indices, stored as a strictly increasing sequence of
/// 1-based integers.  Used both for monomial supports and for the monomial
/// primes P_A = (x_i : i in A).
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts its argument; throws IndexError on duplicates or entries < 1.
  explicit IndexSet(std::vector<int> members);
  static IndexSet full(int n);

  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;
  bool subset_of(const IndexSet& other) const;
  /// All members must lie in 1..n.
  IndexSet complement(int n) const;
  /// The set with j removed and l inserted.
  IndexSet replaced(int j, int l) const;
  /// The set with i inserted (i must not already be a member).
  IndexSet inserted(int i) const;

  bool operator==(const IndexSet&) const = default;
  // Lexicographic order on the index sequences; the canonical order for
  // printed families of index sets.
  auto operator<=>(const IndexSet& other) const {
    return members_ <=> other.members_;
  }

  std::string str() const;  // e.g. "{1,3,5}"

 private:
  std::vector<int> members_;
};

/// A monomial in n variables as its exponent vector.  Immutable.
class Monomial {
 public:
  /// Throws DomainError on negative or oversized exponents.
  explicit Monomial(std::vector<int> exps);
  static Monomial one(int n);
  /// The squarefree monomial x_A in n variables.
  static Monomial squarefree(const IndexSet& support, int n);

  int vars() const { return static_cast<int>(exps_.size()); }
  /// Exponent of x_i, 1-based.
  int exponent(int i) const;
  const std::vector<int>& exponents() const { return exps_; }

  long long degree() const;
  IndexSet support() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  /// Largest/smallest index of a variable that divides this monomial.
  /// Only defined for degree >= 1; throws DomainError otherwise.
  int max_index() const;
  int min_index() const;

  Monomial squarefree_part() const;
  Monomial operator*(const Monomial& other) const;
  /// this / gcd(this, z) — the colon quotient against z.
  Monomial quotient_by_gcd(const Monomial& z) const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial& other) const {
    return exps_ <=> other.exps_;
  }

  /// Paper-style rendering: x1^3x2 with exponent-1 suppression; "1" for the
  /// unit monomial.
  std::string str() const;

 private:
  std::vector<int> exps_;
};

Monomial gcd(const Monomial& a, const Monomial& b);

/// true iff u divides v componentwise.  Throws DimensionError when the two
/// monomials live over different n.
bool divides(const Monomial& u, const Monomial& v);

/// A monomial ideal held by its unique minimal generating set G(I), sorted
/// in descending lexicographic order on exponent vectors (the order the
/// generator sets are conventionally listed in).  The empty set encodes the
/// zero ideal; the single degree-0 monomial encodes the unit ideal.
class MonomialIdeal {
 public:
  /// Minimalizes the given generators (removes divisibility-redundant
  /// ones).  All monomials must share n; throws DimensionError otherwise.
  MonomialIdeal(int n, std::vector<Monomial> gens);
  static MonomialIdeal zero(int n);
  static MonomialIdeal unit(int n);
  /// The prime P_A = (x_i : i in A).
  static MonomialIdeal prime(const IndexSet& a, int n);

  int vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool operator==(const MonomialIdeal&) const = default;

  std::string str() const;  // e.g. "(x1^3x2^2, x1^3x2x3)"

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

/// The divisibility-minimal elements of ms as an ideal; idempotent and
/// independent of input order.
MonomialIdeal minimalize(int n, std::vector<Monomial> ms);

/// true iff z lies in I, i.e. some generator divides z.
bool contains(const MonomialIdeal& ideal, const Monomial& z);

/// The colon ideal I : z = { w : w z in I }.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& z);

/// The radical: squarefree parts of the generators, minimalized.
/// Throws DomainError on the zero ideal.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// |G(I)| == 1.  Throws DomainError on the zero ideal.
bool is_principal(const MonomialIdeal& ideal);

/// All generators share one degree.  Throws DomainError on the zero ideal.
bool is_equigenerated(const MonomialIdeal& ideal);

}  // namespace veronese

#endif  // VERONESE_CORE_HPP
