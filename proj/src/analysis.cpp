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

#include "veronese/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace veronese {

namespace {

void require_nonzero_proper(const VeroneseParams& params) {
  params.validate();
  if (params.d == 0) {
    throw DomainError("d = 0 gives the unit ideal, which is out of scope");
  }
  if (params.cap_sum() < params.d) {
    throw DomainError(
        "the ideal is zero: feasibility requires a_1 + ... + a_n >= d");
  }
}

std::vector<int> clamped_caps(const VeroneseParams& params) {
  std::vector<int> caps(params.caps);
  for (int& a : caps) a = std::min(a, params.d);
  return caps;
}

}  // namespace

NormalForm normalize(const VeroneseParams& params) {
  require_nonzero_proper(params);
  NormalForm nf;
  nf.original = params;

  std::vector<int> caps = clamped_caps(params);
  std::vector<int> order(caps.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&caps](int i, int j) {
    return caps[static_cast<std::size_t>(i - 1)] >
           caps[static_cast<std::size_t>(j - 1)];
  });

  std::vector<int> trimmed, peeled;
  for (int i : order) {
    int a = caps[static_cast<std::size_t>(i - 1)];
    if (a == 0) {
      trimmed.push_back(i);
      continue;
    }
    nf.permutation.push_back(i);
    if (a == params.d) {
      peeled.push_back(i);
    } else {
      nf.core.caps.push_back(a);
    }
  }
  nf.core.d = params.d;
  nf.trimmed_zero_indices = IndexSet(std::move(trimmed));
  nf.peeled_full_indices = IndexSet(std::move(peeled));
  nf.pure_veronese = nf.core.caps.empty();
  nf.core_feasible =
      !nf.core.caps.empty() && nf.core.cap_sum() >= nf.core.d;
  return nf;
}

namespace {

void require_core_form(const VeroneseParams& core) {
  core.validate();
  if (core.caps.empty() || core.caps.front() >= core.d ||
      core.caps.back() < 1 ||
      !std::is_sorted(core.caps.rbegin(), core.caps.rend())) {
    throw PreconditionError(
        "parameters must be in core normal form: d > a_1 >= ... >= a_n >= 1");
  }
  if (core.cap_sum() < core.d) {
    throw PreconditionError(
        "the ideal is zero: feasibility requires a_1 + ... + a_n >= d");
  }
}

}  // namespace

std::vector<IndexSet> radical_generators(const VeroneseParams& core) {
  require_core_form(core);
  const int n = core.vars();
  std::vector<long long> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] +
        core.caps[static_cast<std::size_t>(i)];
  }
  std::vector<IndexSet> out;
  std::vector<int> seq;
  // Invariant: the cap sum over seq is < d.  Appending i either reaches d
  // (a minimal generator: its last-element-removed prefix is exactly seq)
  // or recurses while some completion can still reach d.
  std::function<void(int, long long)> walk = [&](int start, long long sum) {
    for (int i = start; i <= n; ++i) {
      long long a = core.caps[static_cast<std::size_t>(i - 1)];
      seq.push_back(i);
      if (sum + a >= core.d) {
        out.push_back(IndexSet(seq));
      } else if (sum + a + suffix[static_cast<std::size_t>(i)] >= core.d) {
        walk(i + 1, sum + a);
      }
      seq.pop_back();
    }
  };
  walk(1, 0);
  return out;
}

SquarefreeIdeal radical_ideal(const VeroneseParams& params) {
  NormalForm nf = normalize(params);
  std::vector<IndexSet> gens;
  for (int i : nf.peeled_full_indices.members()) {
    gens.push_back(IndexSet({i}));
  }
  if (nf.core_feasible) {
    const int l = nf.peeled_count();
    for (const IndexSet& g : radical_generators(nf.core)) {
      std::vector<int> original;
      original.reserve(static_cast<std::size_t>(g.size()));
      for (int pos : g.members()) {
        original.push_back(
            nf.permutation[static_cast<std::size_t>(l + pos - 1)]);
      }
      gens.push_back(IndexSet(std::move(original)));
    }
  }
  return SquarefreeIdeal(params.vars(), std::move(gens));
}

namespace {

// Condition on the Borel generators of the given radical: a unique top
// Borel generator x_{m-b+1}...x_m and max(u) - deg(u) <= m - b throughout.
EquidimReport evaluate_borel_criterion(int frame_n,
                                       std::vector<IndexSet> rad) {
  SquarefreeIdeal j(frame_n, std::move(rad));
  EquidimReport report;
  report.mb = mb(j);
  report.borel = borel_generators(j);
  const int m = report.mb.m;
  const int b = report.mb.b;

  std::vector<IndexSet> tops;
  for (const IndexSet& g : report.borel) {
    if (g.size() == b) tops.push_back(g);
  }
  std::vector<int> expected(static_cast<std::size_t>(b));
  std::iota(expected.begin(), expected.end(), m - b + 1);
  bool top_ok = false;
  if (tops.size() == 1) {
    report.unique_top_borel = tops.front();
    top_ok = tops.front() == IndexSet(expected);
  }
  for (const IndexSet& g : j.generators()) {
    if (g.members().back() - g.size() > m - b) {
      report.failing_generator = g;
      break;
    }
  }
  report.verdict = top_ok && !report.failing_generator.has_value();
  if (report.verdict) report.cover_cardinality = m - b + 1;
  return report;
}

}  // namespace

EquidimReport is_equidimensional(const VeroneseParams& params) {
  NormalForm nf = normalize(params);
  if (nf.core_feasible) {
    return evaluate_borel_criterion(nf.core.vars(),
                                    radical_generators(nf.core));
  }
  // Either every nonzero cap equals d, or the core alone cannot reach
  // degree d.  Both ways the radical is the prime on the peeled variables,
  // and the criterion holds on its singleton generators.
  const int l = nf.peeled_count();
  std::vector<IndexSet> singles;
  for (int i = 1; i <= l; ++i) singles.push_back(IndexSet({i}));
  return evaluate_borel_criterion(l, std::move(singles));
}

MaximalPairReport maximal_pair(const VeroneseParams& core) {
  require_core_form(core);
  const int n = core.vars();
  std::vector<long long> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    prefix[static_cast<std::size_t>(i)] =
        prefix[static_cast<std::size_t>(i) - 1] +
        core.caps[static_cast<std::size_t>(i - 1)];
  }
  auto window = [&prefix](int lo, int hi) {  // caps a_lo + ... + a_hi
    return prefix[static_cast<std::size_t>(hi)] -
           prefix[static_cast<std::size_t>(lo - 1)];
  };

  MaximalPairReport report;
  std::vector<std::pair<int, int>> pairs;
  for (int p = 1; p <= n; ++p) {
    for (int l = 1; l <= p; ++l) {
      if (window(p - l + 1, p) >= core.d && window(p - l + 1, p - 1) < core.d) {
        pairs.emplace_back(p, l);
      }
    }
  }
  if (pairs.empty()) {
    return report;  // unreachable for feasible core parameters
  }
  std::pair<int, int> best = pairs.front();
  for (const auto& q : pairs) {
    if (q.first >= best.first && q.second >= best.second) best = q;
  }
  for (const auto& q : pairs) {
    if (q.first > best.first || q.second > best.second) {
      throw InternalError("window pairs are not pairwise comparable");
    }
  }
  report.pair = best;

  report.slack_condition_holds = true;
  const int slack = best.first - best.second;
  for (const IndexSet& g : radical_generators(core)) {
    if (g.members().back() - g.size() > slack) {
      report.slack_condition_holds = false;
      report.violating_generator = g;
      break;
    }
  }
  report.equidimensional = report.slack_condition_holds;
  return report;
}

namespace {

constexpr long long kWitnessIdealBudget = 1'000'000;
constexpr std::size_t kMaxAssociatedPrimes = std::size_t{1} << 20;

Monomial witness_for(const std::vector<int>& caps, int d,
                     const std::vector<int>& inside,
                     const std::vector<int>& outside) {
  const int n = static_cast<int>(caps.size());
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  long long outside_sum = 0;
  for (int i : outside) {
    exps[static_cast<std::size_t>(i - 1)] = caps[static_cast<std::size_t>(i - 1)];
    outside_sum += caps[static_cast<std::size_t>(i - 1)];
  }
  long long deficit = d - 1 - outside_sum;
  for (int i : inside) {
    int take = static_cast<int>(std::min<long long>(
        caps[static_cast<std::size_t>(i - 1)] - 1, deficit));
    exps[static_cast<std::size_t>(i - 1)] = take;
    deficit -= take;
  }
  if (deficit != 0) {
    throw InternalError("witness degree cannot be met; criterion violated");
  }
  return Monomial(std::move(exps));
}

}  // namespace

std::vector<WitnessedPrime> associated_primes(const VeroneseParams& params,
                                              WitnessCheck check) {
  require_nonzero_proper(params);
  const std::vector<int> caps = clamped_caps(params);
  const int n = params.vars();
  std::vector<int> active;
  long long total = 0;
  for (int i = 1; i <= n; ++i) {
    if (caps[static_cast<std::size_t>(i - 1)] > 0) {
      active.push_back(i);
      total += caps[static_cast<std::size_t>(i - 1)];
    }
  }
  const int k = static_cast<int>(active.size());

  // Enumerate complements C with cap sum <= d - 1; the caps of a variable
  // outside A must all fit under the witness degree.
  std::vector<WitnessedPrime> out;
  std::vector<int> complement;
  std::function<void(int, long long)> walk = [&](int from, long long sum) {
    const int csize = static_cast<int>(complement.size());
    // |A| = k - |C|; first criterion inequality.
    if (total >= params.d - 1 + static_cast<long long>(k - csize)) {
      std::vector<int> inside;
      std::size_t next = 0;
      for (int i : active) {
        if (next < complement.size() && complement[next] == i) {
          ++next;
        } else {
          inside.push_back(i);
        }
      }
      if (!inside.empty()) {
        if (out.size() >= kMaxAssociatedPrimes) {
          throw BudgetError("associated prime family exceeds the budget");
        }
        out.push_back(WitnessedPrime{
            IndexSet(inside), witness_for(caps, params.d, inside, complement)});
      }
    }
    for (int idx = from; idx < k; ++idx) {
      int i = active[static_cast<std::size_t>(idx)];
      long long a = caps[static_cast<std::size_t>(i - 1)];
      if (sum + a > params.d - 1) continue;
      complement.push_back(i);
      walk(idx + 1, sum + a);
      complement.pop_back();
    }
  };
  walk(0, 0);

  std::sort(out.begin(), out.end(),
            [](const WitnessedPrime& a, const WitnessedPrime& b) {
              return a.indices < b.indices;
            });

  if (check == WitnessCheck::verify) {
    long long count = 1;
    for (int i : active) {
      count *= caps[static_cast<std::size_t>(i - 1)] + 1;
      if (count > kWitnessIdealBudget) {
        throw BudgetError(
            "witness verification would enumerate too many generators; "
            "re-run with WitnessCheck::skip");
      }
    }
    VeroneseParams clamped{params.d, caps};
    MonomialIdeal ideal =
        polymatroidal_ideal(veronese_bases(clamped), /*check=*/false);
    for (const WitnessedPrime& wp : out) {
      if (contains(ideal, wp.witness) ||
          colon(ideal, wp.witness) != MonomialIdeal::prime(wp.indices, n)) {
        throw InternalError("constructed witness failed the colon check");
      }
    }
  }
  return out;
}

bool is_unmixed(const VeroneseParams& params) {
  std::vector<WitnessedPrime> ass =
      associated_primes(params, WitnessCheck::skip);
  for (const WitnessedPrime& a : ass) {
    for (const WitnessedPrime& b : ass) {
      if (a.indices != b.indices && a.indices.subset_of(b.indices)) {
        return false;
      }
    }
  }
  return true;
}

CMClass classify(const VeroneseParams& params) {
  require_nonzero_proper(params);
  const std::vector<int> caps = clamped_caps(params);
  long long total = 0;
  int active = 0;
  bool all_d = true, all_one = true;
  for (int a : caps) {
    if (a == 0) continue;
    ++active;
    total += a;
    all_d = all_d && a == params.d;
    all_one = all_one && a == 1;
  }
  if (total == params.d) return CMClass::Principal;
  if (all_d) return CMClass::Veronese;
  if (all_one && params.d < active) return CMClass::SquarefreeVeronese;
  return CMClass::NotCohenMacaulay;
}

const char* cm_class_name(CMClass c) {
  switch (c) {
    case CMClass::Principal:
      return "Principal";
    case CMClass::Veronese:
      return "Veronese";
    case CMClass::SquarefreeVeronese:
      return "SquarefreeVeronese";
    case CMClass::NotCohenMacaulay:
      return "NotCohenMacaulay";
  }
  return "NotCohenMacaulay";
}

bool strong_polymatroidal_equidimensional(const BaseSet& bases) {
  Translation t = translation_normalize(bases);  // checks strong exchange
  bool shifted = std::any_of(t.shift.begin(), t.shift.end(),
                             [](int s) { return s != 0; });
  if (!shifted) {
    return is_equidimensional(t.params).verdict;
  }
  // The ideal is a proper monomial multiple of another ideal; every
  // variable in the factor yields a height-one minimal prime, so all
  // minimal primes must have height one, i.e. the radical is principal.
  return is_principal(radical(polymatroidal_ideal(bases, /*check=*/false)));
}

}  // namespace veronese
