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

#include "veronese/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace veronese {

BaseSet::BaseSet(std::vector<std::vector<int>> vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty()) {
    throw InvalidBaseSetError("a base set must be nonempty");
  }
  n_ = static_cast<int>(vectors_.front().size());
  if (n_ == 0) throw InvalidBaseSetError("base vectors must have length >= 1");
  for (const auto& v : vectors_) {
    if (static_cast<int>(v.size()) != n_) {
      throw InvalidBaseSetError("base vectors must share one length");
    }
    for (int e : v) {
      if (e < 0) throw InvalidBaseSetError("base vectors must be nonnegative");
      if (e > kMaxExponent) {
        throw InvalidBaseSetError("base vector entry exceeds supported bound");
      }
    }
  }
  rank_ = std::accumulate(vectors_.front().begin(), vectors_.front().end(), 0LL);
  for (const auto& v : vectors_) {
    if (std::accumulate(v.begin(), v.end(), 0LL) != rank_) {
      throw InvalidBaseSetError("base vectors must have equal modulus");
    }
  }
  std::sort(vectors_.begin(), vectors_.end(), std::greater<>());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()),
                 vectors_.end());
}

bool BaseSet::contains(const std::vector<int>& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v,
                            std::greater<>());
}

long long VeroneseParams::cap_sum() const {
  return std::accumulate(caps.begin(), caps.end(), 0LL);
}

void VeroneseParams::validate() const {
  if (d < 0 || d > kMaxExponent) {
    throw DomainError("degree d must lie in [0, 10^6]");
  }
  if (caps.empty()) throw DomainError("at least one variable is required");
  for (int a : caps) {
    if (a < 0 || a > kMaxExponent) {
      throw DomainError("caps must lie in [0, 10^6]");
    }
  }
}

namespace {

// Applies the swap u - e_i + e_j and tests membership.
bool swap_in(const BaseSet& bases, std::vector<int> u, int i, int j) {
  --u[static_cast<std::size_t>(i)];
  ++u[static_cast<std::size_t>(j)];
  return bases.contains(u);
}

}  // namespace

bool check_exchange(const BaseSet& bases) {
  const auto& vs = bases.vectors();
  const int n = bases.vars();
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      for (int i = 0; i < n; ++i) {
        if (u[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i)]) {
          continue;
        }
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (u[static_cast<std::size_t>(j)] <
              v[static_cast<std::size_t>(j)]) {
            found = swap_in(bases, u, i, j);
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool check_strong_exchange(const BaseSet& bases) {
  const auto& vs = bases.vectors();
  const int n = bases.vars();
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      for (int i = 0; i < n; ++i) {
        if (u[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i)]) {
          continue;
        }
        for (int j = 0; j < n; ++j) {
          if (u[static_cast<std::size_t>(j)] <
                  v[static_cast<std::size_t>(j)] &&
              !swap_in(bases, u, i, j)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

BaseSet veronese_bases(const VeroneseParams& params) {
  params.validate();
  if (params.cap_sum() < params.d) {
    throw DomainError(
        "empty base family: feasibility requires a_1 + ... + a_n >= d");
  }
  const int n = params.vars();
  // Suffix cap sums for pruning.
  std::vector<long long> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] +
        params.caps[static_cast<std::size_t>(i)];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  // Descending choice per coordinate produces descending lex order.
  std::function<void(int, long long)> emit = [&](int i, long long remaining) {
    if (i == n) {
      out.push_back(current);
      return;
    }
    long long cap = params.caps[static_cast<std::size_t>(i)];
    long long hi = std::min<long long>(cap, remaining);
    long long lo =
        std::max<long long>(0, remaining - suffix[static_cast<std::size_t>(i) + 1]);
    for (long long e = hi; e >= lo; --e) {
      current[static_cast<std::size_t>(i)] = static_cast<int>(e);
      emit(i + 1, remaining - e);
    }
    current[static_cast<std::size_t>(i)] = 0;
  };
  emit(0, params.d);
  return BaseSet(std::move(out));
}

long long rank(const BaseSet& bases, const IndexSet& a) {
  if (!a.empty() && a.members().back() > bases.vars()) {
    throw IndexError("rank over an index outside 1..n");
  }
  if (a.empty()) return 0;
  long long best = 0;
  for (const auto& v : bases.vectors()) {
    long long s = 0;
    for (int i : a.members()) s += v[static_cast<std::size_t>(i - 1)];
    best = std::max(best, s);
  }
  return best;
}

long long rank_veronese(const VeroneseParams& params, const IndexSet& a) {
  if (!a.empty() && a.members().back() > params.vars()) {
    throw IndexError("rank over an index outside 1..n");
  }
  long long s = 0;
  for (int i : a.members()) s += params.caps[static_cast<std::size_t>(i - 1)];
  return std::min<long long>(s, params.d);
}

Translation translation_normalize(const BaseSet& bases) {
  if (!check_strong_exchange(bases)) {
    throw NotStrongExchangeError(
        "translation normalization requires the strong exchange property");
  }
  const int n = bases.vars();
  const long long full_rank = rank(bases, IndexSet::full(n));
  std::vector<int> shift(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    IndexSet rest = IndexSet({i}).complement(n);
    shift[static_cast<std::size_t>(i - 1)] =
        static_cast<int>(full_rank - rank(bases, rest));
  }
  std::vector<std::vector<int>> translated;
  translated.reserve(bases.vectors().size());
  for (const auto& v : bases.vectors()) {
    std::vector<int> w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      w[k] = v[k] - shift[k];
      if (w[k] < 0) {
        throw InternalError(
            "translated base vector has a negative entry; the input cannot "
            "satisfy the strong exchange property");
      }
    }
    translated.push_back(std::move(w));
  }
  BaseSet normalized(std::move(translated));

  VeroneseParams params;
  params.d = static_cast<int>(normalized.rank());
  params.caps.assign(static_cast<std::size_t>(n), 0);
  for (const auto& v : normalized.vectors()) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      params.caps[k] = std::max(params.caps[k], v[k]);
    }
  }
  // The translated family must be exactly the degree slice cut out by its
  // coordinate maxima; anything else is a defect.
  if (veronese_bases(params) != normalized) {
    throw InternalError(
        "translated base set is not of Veronese type despite passing the "
        "strong exchange check");
  }
  return Translation{std::move(shift), std::move(normalized),
                     std::move(params)};
}

MonomialIdeal polymatroidal_ideal(const BaseSet& bases, bool check) {
  if (check && !check_exchange(bases)) {
    throw NotAPolymatroidError(
        "the family fails the exchange property, so it is not the base set "
        "of a discrete polymatroid");
  }
  std::vector<Monomial> gens;
  gens.reserve(bases.vectors().size());
  for (const auto& v : bases.vectors()) gens.emplace_back(v);
  return MonomialIdeal(bases.vars(), std::move(gens));
}

MonomialIdeal radical_via_rank(const BaseSet& bases, bool check) {
  if (check && !check_exchange(bases)) {
    throw NotAPolymatroidError(
        "the family fails the exchange property, so it is not the base set "
        "of a discrete polymatroid");
  }
  const int n = bases.vars();
  if (n > 20) {
    throw BudgetError("rank-based radical enumerates 2^n subsets; n > 20");
  }
  const long long target = bases.rank();
  // Per-base subset sums via DP over the bit lattice, keeping the running
  // maximum per subset, i.e. the whole rank function at once.
  const std::size_t size = std::size_t{1} << n;
  std::vector<long long> rho(size, 0);
  std::vector<long long> sums(size, 0);
  for (const auto& v : bases.vectors()) {
    for (std::size_t mask = 1; mask < size; ++mask) {
      std::size_t low = mask & (~mask + 1);
      int i = std::countr_zero(low);
      sums[mask] = sums[mask ^ low] + v[static_cast<std::size_t>(i)];
      rho[mask] = std::max(rho[mask], sums[mask]);
    }
  }
  // Inclusion-minimal subsets hitting the full rank, by increasing size.
  std::vector<std::size_t> minimal;
  std::vector<Monomial> gens;
  std::vector<std::size_t> by_popcount(size);
  std::iota(by_popcount.begin(), by_popcount.end(), 0);
  std::sort(by_popcount.begin(), by_popcount.end(),
            [](std::size_t a, std::size_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  for (std::size_t mask : by_popcount) {
    if (rho[mask] != target) continue;
    bool dominated = false;
    for (std::size_t m : minimal) {
      if ((m & mask) == m) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    minimal.push_back(mask);
    std::vector<int> support;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) support.push_back(i + 1);
    }
    gens.push_back(Monomial::squarefree(IndexSet(std::move(support)), n));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace veronese
