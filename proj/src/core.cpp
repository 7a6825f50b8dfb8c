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

#include "veronese/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace veronese {

// ---------- IndexSet ----------

IndexSet::IndexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k] < 1) {
      throw IndexError("index set entries must be >= 1");
    }
    if (k > 0 && members_[k] == members_[k - 1]) {
      throw IndexError("index set entries must be distinct");
    }
  }
}

IndexSet IndexSet::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(all.begin(), all.end(), 1);
  return IndexSet(std::move(all));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

IndexSet IndexSet::complement(int n) const {
  if (!members_.empty() && members_.back() > n) {
    throw IndexError("index set exceeds the number of variables");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - members_.size());
  for (int i = 1; i <= n; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::replaced(int j, int l) const {
  std::vector<int> out;
  out.reserve(members_.size() + 1);
  for (int i : members_) {
    if (i != j) out.push_back(i);
  }
  out.push_back(l);
  return IndexSet(std::move(out));
}

IndexSet IndexSet::inserted(int i) const {
  std::vector<int> out(members_);
  out.push_back(i);
  return IndexSet(std::move(out));
}

std::string IndexSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k > 0) os << ',';
    os << members_[k];
  }
  os << '}';
  return os.str();
}

// ---------- Monomial ----------

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("monomial exponents must be >= 0");
    if (e > kMaxExponent) {
      throw DomainError("monomial exponent exceeds the supported bound");
    }
  }
}

Monomial Monomial::one(int n) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::squarefree(const IndexSet& support, int n) {
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (int i : support.members()) {
    if (i > n) throw IndexError("support index exceeds n");
    exps[static_cast<std::size_t>(i - 1)] = 1;
  }
  return Monomial(std::move(exps));
}

int Monomial::exponent(int i) const {
  if (i < 1 || i > vars()) throw IndexError("variable index out of range");
  return exps_[static_cast<std::size_t>(i - 1)];
}

long long Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0LL);
}

IndexSet Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < vars(); ++i) {
    if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i + 1);
  }
  return IndexSet(std::move(s));
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

int Monomial::max_index() const {
  for (int i = vars(); i >= 1; --i) {
    if (exps_[static_cast<std::size_t>(i - 1)] > 0) return i;
  }
  throw DomainError("max index of the unit monomial is undefined");
}

int Monomial::min_index() const {
  for (int i = 1; i <= vars(); ++i) {
    if (exps_[static_cast<std::size_t>(i - 1)] > 0) return i;
  }
  throw DomainError("min index of the unit monomial is undefined");
}

Monomial Monomial::squarefree_part() const {
  std::vector<int> exps(exps_.size());
  std::transform(exps_.begin(), exps_.end(), exps.begin(),
                 [](int e) { return e > 0 ? 1 : 0; });
  return Monomial(std::move(exps));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (vars() != other.vars()) {
    throw DimensionError("monomial product over mismatched variable counts");
  }
  std::vector<int> exps(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    exps[k] = exps_[k] + other.exps_[k];
  }
  return Monomial(std::move(exps));
}

Monomial Monomial::quotient_by_gcd(const Monomial& z) const {
  if (vars() != z.vars()) {
    throw DimensionError("colon quotient over mismatched variable counts");
  }
  std::vector<int> exps(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    exps[k] = std::max(exps_[k] - z.exponents()[k], 0);
  }
  return Monomial(std::move(exps));
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  for (int i = 1; i <= vars(); ++i) {
    int e = exps_[static_cast<std::size_t>(i - 1)];
    if (e == 0) continue;
    os << 'x' << i;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) {
    throw DimensionError("gcd over mismatched variable counts");
  }
  std::vector<int> exps(static_cast<std::size_t>(a.vars()));
  for (std::size_t k = 0; k < exps.size(); ++k) {
    exps[k] = std::min(a.exponents()[k], b.exponents()[k]);
  }
  return Monomial(std::move(exps));
}

bool divides(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars()) {
    throw DimensionError("divisibility test over mismatched variable counts");
  }
  for (int k = 0; k < u.vars(); ++k) {
    if (u.exponents()[static_cast<std::size_t>(k)] >
        v.exponents()[static_cast<std::size_t>(k)]) {
      return false;
    }
  }
  return true;
}

// ---------- MonomialIdeal ----------

namespace {

// Descending lexicographic order on exponent vectors, so that e.g.
// x1^3x2^2 prints before x1^2x2^2x3.
bool lex_desc(const Monomial& a, const Monomial& b) {
  return a.exponents() > b.exponents();
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  if (n < 0) throw DomainError("number of variables must be >= 0");
  for (const Monomial& m : gens) {
    if (m.vars() != n) {
      throw DimensionError("generator over a different number of variables");
    }
  }
  // A proper divisor has strictly smaller degree, so after ordering by
  // degree each candidate only needs to be checked against the accepted
  // generators of smaller degree.  Equigenerated input (the common case for
  // polymatroidal ideals) passes through with no divisibility tests.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::size_t smaller_degree_count = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0 && gens[k].degree() != gens[k - 1].degree()) {
      smaller_degree_count = gens_.size();
    }
    bool redundant = false;
    for (std::size_t j = 0; j < smaller_degree_count; ++j) {
      if (divides(gens_[j], gens[k])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(gens[k]);
  }
  std::sort(gens_.begin(), gens_.end(), lex_desc);
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n, {}); }

MonomialIdeal MonomialIdeal::unit(int n) {
  return MonomialIdeal(n, {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::prime(const IndexSet& a, int n) {
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(a.size()));
  for (int i : a.members()) {
    gens.push_back(Monomial::squarefree(IndexSet({i}), n));
  }
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_one();
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k > 0) os << ", ";
    os << gens_[k].str();
  }
  os << ')';
  return os.str();
}

MonomialIdeal minimalize(int n, std::vector<Monomial> ms) {
  return MonomialIdeal(n, std::move(ms));
}

bool contains(const MonomialIdeal& ideal, const Monomial& z) {
  if (z.vars() != ideal.vars()) {
    throw DimensionError("membership test over mismatched variable counts");
  }
  for (const Monomial& u : ideal.generators()) {
    if (divides(u, z)) return true;
  }
  return false;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& z) {
  if (z.vars() != ideal.vars()) {
    throw DimensionError("colon over mismatched variable counts");
  }
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.generators().size());
  for (const Monomial& u : ideal.generators()) {
    quotients.push_back(u.quotient_by_gcd(z));
  }
  return MonomialIdeal(ideal.vars(), std::move(quotients));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw DomainError("radical of the zero ideal is undefined here");
  }
  // Distinct squarefree parts first; generator sets can be huge while their
  // support sets stay small.
  std::vector<Monomial> parts;
  parts.reserve(ideal.generators().size());
  for (const Monomial& u : ideal.generators()) {
    parts.push_back(u.squarefree_part());
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return MonomialIdeal(ideal.vars(), std::move(parts));
}

bool is_principal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw DomainError("principality of the zero ideal is undefined here");
  }
  return ideal.generators().size() == 1;
}

bool is_equigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw DomainError("equigeneration of the zero ideal is undefined here");
  }
  long long deg = ideal.generators().front().degree();
  return std::all_of(
      ideal.generators().begin(), ideal.generators().end(),
      [deg](const Monomial& u) { return u.degree() == deg; });
}

}  // namespace veronese
