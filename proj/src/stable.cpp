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

#include "veronese/stable.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace veronese {

namespace {

// Some generator support is contained in the given set, i.e. x_set lies in
// the ideal.
bool ideal_contains_support(const SquarefreeIdeal& ideal, const IndexSet& set) {
  for (const IndexSet& g : ideal.generators()) {
    if (g.subset_of(set)) return true;
  }
  return false;
}

}  // namespace

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<IndexSet> gens) : n_(n) {
  if (n < 0) throw DomainError("number of variables must be >= 0");
  for (const IndexSet& g : gens) {
    if (!g.empty() && g.members().back() > n) {
      throw IndexError("generator support exceeds the number of variables");
    }
  }
  // A proper subset has strictly smaller size, so after ordering by size a
  // single pass against the accepted smaller generators minimalizes.
  std::sort(gens.begin(), gens.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::size_t smaller_count = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0 && gens[k].size() != gens[k - 1].size()) {
      smaller_count = gens_.size();
    }
    bool redundant = false;
    for (std::size_t j = 0; j < smaller_count; ++j) {
      if (gens_[j].subset_of(gens[k])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(gens[k]);
  }
  std::sort(gens_.begin(), gens_.end());
}

SquarefreeIdeal SquarefreeIdeal::from_monomial_ideal(
    const MonomialIdeal& ideal) {
  std::vector<IndexSet> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& u : ideal.generators()) {
    if (!u.is_squarefree()) {
      throw PreconditionError("ideal is not squarefree");
    }
    gens.push_back(u.support());
  }
  return SquarefreeIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal SquarefreeIdeal::to_monomial_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const IndexSet& g : gens_) {
    gens.push_back(Monomial::squarefree(g, n_));
  }
  return MonomialIdeal(n_, std::move(gens));
}

bool is_squarefree_strongly_stable(const SquarefreeIdeal& ideal) {
  for (const IndexSet& g : ideal.generators()) {
    for (int j : g.members()) {
      for (int l = 1; l < j; ++l) {
        if (g.contains(l)) continue;
        if (!ideal_contains_support(ideal, g.replaced(j, l))) return false;
      }
    }
  }
  return true;
}

SquarefreeIdeal strongly_stable_closure(int n,
                                        const std::vector<IndexSet>& gens) {
  // Orbit of the supports under the moves j -> l; moves preserve
  // cardinality, so the orbit stays within subsets of the starting sizes.
  std::set<IndexSet> orbit(gens.begin(), gens.end());
  std::vector<IndexSet> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    IndexSet g = queue.back();
    queue.pop_back();
    for (int j : g.members()) {
      for (int l = 1; l < j; ++l) {
        if (g.contains(l)) continue;
        IndexSet moved = g.replaced(j, l);
        if (orbit.insert(moved).second) queue.push_back(moved);
      }
    }
  }
  return SquarefreeIdeal(n, std::vector<IndexSet>(orbit.begin(), orbit.end()));
}

namespace {

// Whether some support reachable from v by the moves j -> l is contained in
// u.  Reachability between equal-size supports is exactly sorted
// componentwise <=, so the best candidate inside u is its |v| smallest
// elements.
bool generates(const IndexSet& v, const IndexSet& u) {
  const auto& vm = v.members();
  const auto& um = u.members();
  if (vm.size() > um.size()) return false;
  for (std::size_t s = 0; s < vm.size(); ++s) {
    if (um[s] > vm[s]) return false;
  }
  return true;
}

}  // namespace

std::vector<IndexSet> borel_generators(const SquarefreeIdeal& ideal) {
  if (!is_squarefree_strongly_stable(ideal)) {
    throw PreconditionError(
        "Borel generators are defined for squarefree strongly stable ideals");
  }
  const auto& gens = ideal.generators();
  std::vector<IndexSet> kept;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j != k) redundant = generates(gens[j], gens[k]);
    }
    if (!redundant) kept.push_back(gens[k]);
  }
  // The kept set must regenerate the ideal exactly.
  if (strongly_stable_closure(ideal.vars(), kept) != ideal) {
    throw InternalError("Borel generator extraction failed to regenerate");
  }
  return kept;
}

MBInvariants mb(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("m and b need a nonzero proper ideal");
  }
  MBInvariants out;
  for (const IndexSet& g : ideal.generators()) {
    out.m = std::max(out.m, g.members().back());
    out.b = std::max(out.b, g.size());
  }
  return out;
}

namespace {

// Enumerates covers by branching on the first uncovered generator; every
// minimal cover appears among the leaves.
void enumerate_covers(const std::vector<IndexSet>& gens, IndexSet& chosen,
                      std::set<IndexSet>& out, long long& nodes) {
  if (++nodes > 10'000'000) {
    throw BudgetError("vertex cover branching exceeded its node budget");
  }
  const IndexSet* uncovered = nullptr;
  for (const IndexSet& g : gens) {
    bool hit = false;
    for (int i : g.members()) {
      if (chosen.contains(i)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      uncovered = &g;
      break;
    }
  }
  if (uncovered == nullptr) {
    out.insert(chosen);
    return;
  }
  for (int i : uncovered->members()) {
    IndexSet next = chosen.inserted(i);
    std::swap(chosen, next);
    enumerate_covers(gens, chosen, out, nodes);
    std::swap(chosen, next);
  }
}

std::vector<IndexSet> minimal_only(const std::set<IndexSet>& family) {
  std::vector<IndexSet> out;
  for (const IndexSet& a : family) {
    bool minimal = true;
    for (const IndexSet& b : family) {
      if (b != a && b.subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IndexSet> facets(const SquarefreeIdeal& ideal) {
  if (ideal.is_unit()) {
    throw PreconditionError("the unit ideal has no faces");
  }
  std::set<IndexSet> covers;
  IndexSet chosen;
  long long nodes = 0;
  enumerate_covers(ideal.generators(), chosen, covers, nodes);
  std::vector<IndexSet> out;
  for (const IndexSet& w : minimal_only(covers)) {
    out.push_back(w.complement(ideal.vars()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("the Alexander dual needs a nonzero proper ideal");
  }
  std::vector<IndexSet> gens;
  for (const IndexSet& f : facets(ideal)) {
    gens.push_back(f.complement(ideal.vars()));
  }
  return SquarefreeIdeal(ideal.vars(), std::move(gens));
}

namespace {

void require_stable(const SquarefreeIdeal& ideal, const char* op) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError(std::string(op) +
                            " needs a nonzero proper ideal");
  }
  if (!is_squarefree_strongly_stable(ideal)) {
    throw PreconditionError(
        std::string(op) +
        " is only valid for squarefree strongly stable ideals");
  }
}

}  // namespace

int codim(const SquarefreeIdeal& ideal) {
  require_stable(ideal, "codim");
  int out = 0;
  for (const IndexSet& g : ideal.generators()) {
    out = std::max(out, g.members().front());
  }
  return out;
}

int codepth(const SquarefreeIdeal& ideal) {
  require_stable(ideal, "codepth");
  int out = 0;
  for (const IndexSet& g : ideal.generators()) {
    out = std::max(out, g.members().back() - g.size());
  }
  return out + 1;
}

bool is_cm_sqfree_stable(const SquarefreeIdeal& ideal) {
  return codim(ideal) == codepth(ideal);
}

}  // namespace veronese
