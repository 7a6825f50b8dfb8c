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

#include "veronese/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "veronese/oracle.hpp"
#include "veronese/stable.hpp"

namespace veronese::cli {

using nlohmann::ordered_json;

// ---------- parsing ----------

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw UsageError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos_));
    }
    ++pos_;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) {
        throw UsageError("number too large at position " +
                         std::to_string(start));
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw UsageError("expected a nonnegative integer at position " +
                       std::to_string(pos_));
    }
    return static_cast<int>(value);
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

VeroneseParams parse_params(const std::string& text) {
  Cursor cur(text);
  VeroneseParams params;
  params.d = cur.integer();
  cur.expect(';');
  params.caps.push_back(cur.integer());
  while (cur.peek(',')) {
    cur.expect(',');
    params.caps.push_back(cur.integer());
  }
  if (!cur.at_end()) {
    throw UsageError("unexpected trailing input at position " +
                     std::to_string(cur.pos()));
  }
  return params;
}

BaseSet parse_bases_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open base-set file: " + path);
  std::vector<std::vector<int>> vectors;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<int> v;
    long long e;
    while (ls >> e) {
      if (e < 0 || e > kMaxExponent) {
        throw UsageError("base vector entries must lie in [0, 10^6]");
      }
      v.push_back(static_cast<int>(e));
    }
    if (!ls.eof()) {
      throw UsageError("malformed base vector line: " + line);
    }
    if (!v.empty()) vectors.push_back(std::move(v));
  }
  if (vectors.empty()) {
    throw UsageError("base-set file contains no vectors: " + path);
  }
  return BaseSet(std::move(vectors));
}

// ---------- rendering helpers ----------

namespace {

ordered_json index_sets_json(const std::vector<IndexSet>& family) {
  ordered_json arr = ordered_json::array();
  for (const IndexSet& a : family) arr.push_back(a.members());
  return arr;
}

std::string squarefree_str(const IndexSet& a) {
  if (a.empty()) return "1";
  std::string out;
  for (int i : a.members()) out += "x" + std::to_string(i);
  return out;
}

std::string family_str(const std::vector<IndexSet>& family) {
  std::string out = "{";
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k > 0) out += ", ";
    out += squarefree_str(family[k]);
  }
  return out + "}";
}

std::string prime_str(const IndexSet& a) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.members().size(); ++k) {
    if (k > 0) out += ",";
    out += "x" + std::to_string(a.members()[k]);
  }
  return out + ")";
}

std::vector<IndexSet> supports_of(const MonomialIdeal& ideal) {
  std::vector<IndexSet> out;
  out.reserve(ideal.generators().size());
  for (const Monomial& u : ideal.generators()) out.push_back(u.support());
  std::sort(out.begin(), out.end());
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// The generating set of I, built once for all oracle comparisons; guarded
// by the divisor budget since the generator count is at most
// prod(min(a_i, d) + 1).
MonomialIdeal build_ideal(const VeroneseParams& params) {
  VeroneseParams clamped = params;
  for (int& a : clamped.caps) a = std::min(a, clamped.d);
  long long count = 1;
  for (int a : clamped.caps) {
    count *= a + 1;
    if (count > oracle::OracleBudget{}.max_divisors) {
      throw BudgetError(
          "oracle cross-check would enumerate too many generators");
    }
  }
  return polymatroidal_ideal(veronese_bases(clamped), /*check=*/false);
}

struct Analysis {
  NormalForm nf;
  std::optional<std::vector<IndexSet>> radical;  // input numbering
  std::optional<EquidimReport> equidim;
  std::optional<MaximalPairReport> pair;
  std::optional<std::vector<WitnessedPrime>> assoc;
  bool witnesses_verified = false;
  std::optional<bool> unmixed;
  std::optional<CMClass> cm_class;
  std::optional<std::vector<IndexSet>> dual;  // input numbering
  std::vector<std::string> notes;
};

Analysis analyze(const Request& req, const VeroneseParams& params) {
  Analysis a;
  a.nf = normalize(params);
  if (req.radical || req.dual) {
    a.radical = radical_ideal(params).generators();
  }
  if (req.borel || req.mb || req.equidim) {
    a.equidim = is_equidimensional(params);
  }
  if (req.pair) {
    if (a.nf.core_feasible) {
      a.pair = maximal_pair(a.nf.core);
    } else {
      a.notes.push_back(
          "maximal pair: not applicable, the reduced parameters have no "
          "core below degree d");
    }
  }
  if (req.assoc) {
    try {
      a.assoc = associated_primes(params, WitnessCheck::verify);
      a.witnesses_verified = true;
    } catch (const BudgetError&) {
      a.assoc = associated_primes(params, WitnessCheck::skip);
      a.notes.push_back(
          "associated primes: witnesses constructed but not re-verified "
          "through the colon ideal (generator budget exceeded)");
    }
  }
  if (req.unmixed) a.unmixed = is_unmixed(params);
  if (req.classify) a.cm_class = classify(params);
  if (req.dual) {
    SquarefreeIdeal rad(params.vars(), *a.radical);
    a.dual = alexander_dual(rad).generators();
  }
  return a;
}

// Perturbs exactly one closed-form result, so that --oracle runs stay
// falsifiable end to end.
void corrupt_one(Analysis& a) {
  if (a.assoc && !a.assoc->empty()) {
    a.assoc->pop_back();
    return;
  }
  if (a.equidim) {
    a.equidim->verdict = !a.equidim->verdict;
    return;
  }
  if (a.unmixed) {
    a.unmixed = !*a.unmixed;
    return;
  }
  if (a.radical && !a.radical->empty()) {
    a.radical->pop_back();
    return;
  }
  if (a.cm_class) {
    a.cm_class = *a.cm_class == CMClass::NotCohenMacaulay
                     ? CMClass::Principal
                     : CMClass::NotCohenMacaulay;
  }
}

// The sorted-frame radical of the full ideal: peeled variables first as
// singletons, then the core generators shifted past them.
std::vector<IndexSet> sorted_frame_radical(const NormalForm& nf) {
  std::vector<IndexSet> out;
  const int l = nf.peeled_count();
  for (int i = 1; i <= l; ++i) out.push_back(IndexSet({i}));
  if (nf.core_feasible) {
    for (const IndexSet& g : radical_generators(nf.core)) {
      std::vector<int> shifted;
      shifted.reserve(static_cast<std::size_t>(g.size()));
      for (int i : g.members()) shifted.push_back(i + l);
      out.push_back(IndexSet(std::move(shifted)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Permutes the ideal into the sorted frame (nonzero caps only).
MonomialIdeal permute_to_sorted_frame(const MonomialIdeal& ideal,
                                      const NormalForm& nf) {
  const std::size_t frame_n = nf.permutation.size();
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& u : ideal.generators()) {
    std::vector<int> exps(frame_n);
    for (std::size_t k = 0; k < frame_n; ++k) {
      exps[k] = u.exponents()[static_cast<std::size_t>(nf.permutation[k] - 1)];
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(static_cast<int>(frame_n), std::move(gens));
}

void oracle_check_params(const Request& req, const VeroneseParams& params,
                         const Analysis& a, std::vector<std::string>& out) {
  MonomialIdeal ideal = build_ideal(params);
  oracle::OracleBudget budget;

  if (a.radical) {
    std::vector<IndexSet> brute = supports_of(radical(ideal));
    std::vector<IndexSet> closed = *a.radical;
    std::sort(closed.begin(), closed.end());
    if (closed != brute) {
      out.push_back("radical: closed form " + family_str(closed) +
                    " != squarefree-part radical " + family_str(brute));
    }
  }
  if (req.borel || req.mb || req.equidim || req.pair) {
    // The frame everything Borel-related is computed in must carry the
    // same radical as the actual ideal, permuted accordingly.
    std::vector<IndexSet> closed = sorted_frame_radical(a.nf);
    std::vector<IndexSet> brute =
        supports_of(radical(permute_to_sorted_frame(ideal, a.nf)));
    if (closed != brute) {
      out.push_back("sorted-frame radical: closed form " +
                    family_str(closed) + " != permuted-ideal radical " +
                    family_str(brute));
    }
  }

  std::optional<bool> brute_equidim;
  auto equidim_oracle = [&]() {
    if (!brute_equidim) {
      brute_equidim = oracle::is_equidimensional_bruteforce(ideal, budget);
    }
    return *brute_equidim;
  };

  if (a.equidim && a.equidim->verdict != equidim_oracle()) {
    out.push_back(std::string("equidimensional: closed form says ") +
                  yes_no(a.equidim->verdict) + ", vertex covers say " +
                  yes_no(equidim_oracle()));
  }
  if (a.equidim && a.equidim->verdict) {
    for (const IndexSet& w : oracle::minimal_vertex_covers(ideal, budget)) {
      if (w.size() != *a.equidim->cover_cardinality) {
        out.push_back("cover cardinality: cover " + prime_str(w) +
                      " has size " + std::to_string(w.size()) +
                      ", expected " +
                      std::to_string(*a.equidim->cover_cardinality));
        break;
      }
    }
  }
  if (a.pair && a.pair->equidimensional != equidim_oracle()) {
    out.push_back(std::string("maximal pair: criterion says ") +
                  yes_no(a.pair->equidimensional) + ", vertex covers say " +
                  yes_no(equidim_oracle()));
  }
  if (a.assoc) {
    std::vector<oracle::PrimeWitness> brute =
        oracle::associated_primes_bruteforce(ideal, budget);
    std::vector<IndexSet> brute_primes, closed_primes;
    for (const auto& pw : brute) brute_primes.push_back(pw.indices);
    for (const auto& wp : *a.assoc) closed_primes.push_back(wp.indices);
    std::sort(closed_primes.begin(), closed_primes.end());
    if (closed_primes != brute_primes) {
      out.push_back("associated primes: closed form found " +
                    std::to_string(closed_primes.size()) +
                    " primes, colon search found " +
                    std::to_string(brute_primes.size()) +
                    " (or the sets differ)");
    }
    for (const auto& wp : *a.assoc) {
      if (contains(ideal, wp.witness) ||
          colon(ideal, wp.witness) !=
              MonomialIdeal::prime(wp.indices, ideal.vars())) {
        out.push_back("witness " + wp.witness.str() + " fails I : z = " +
                      prime_str(wp.indices));
      }
    }
  }
  if (a.unmixed &&
      *a.unmixed != oracle::is_unmixed_bruteforce(ideal, budget)) {
    out.push_back(std::string("unmixed: closed form says ") +
                  yes_no(*a.unmixed) + ", oracle says " +
                  yes_no(!*a.unmixed));
  }
  if (a.cm_class) {
    bool cm = *a.cm_class != CMClass::NotCohenMacaulay;
    if (cm != oracle::is_unmixed_bruteforce(ideal, budget)) {
      out.push_back(std::string("class: ") + cm_class_name(*a.cm_class) +
                    " contradicts the brute-force unmixedness test");
    }
  }
  if (a.dual) {
    SquarefreeIdeal dual(params.vars(), *a.dual);
    if (is_equigenerated(dual.to_monomial_ideal()) != equidim_oracle()) {
      out.push_back(
          "dual: equigeneration of the Alexander dual disagrees with the "
          "vertex-cover equidimensionality test");
    }
  }
}

void render_params_json(const Request& req, const VeroneseParams& params,
                        const Analysis& a, ordered_json& j) {
  j["input"] = ordered_json{{"d", params.d}, {"a", params.caps}};
  j["normal_form"] = ordered_json{
      {"permutation", a.nf.permutation},
      {"trimmed", a.nf.trimmed_zero_indices.members()},
      {"peeled", a.nf.peeled_full_indices.members()},
      {"core", ordered_json{{"d", a.nf.core.d}, {"a", a.nf.core.caps}}},
      {"pure_veronese", a.nf.pure_veronese},
      {"core_feasible", a.nf.core_feasible},
  };
  if (req.radical) j["radical"] = index_sets_json(*a.radical);
  if (req.borel) j["borel"] = index_sets_json(a.equidim->borel);
  if (req.mb) {
    j["m"] = a.equidim->mb.m;
    j["b"] = a.equidim->mb.b;
  }
  if (req.equidim) {
    ordered_json e;
    e["verdict"] = a.equidim->verdict;
    if (a.equidim->cover_cardinality) {
      e["cover_cardinality"] = *a.equidim->cover_cardinality;
    }
    ordered_json ev = ordered_json::object();
    if (a.equidim->unique_top_borel) {
      ev["unique_top_borel"] = a.equidim->unique_top_borel->members();
    }
    if (a.equidim->failing_generator) {
      ev["failing_generator"] = a.equidim->failing_generator->members();
    }
    e["evidence"] = ev;
    j["equidimensional"] = e;
  }
  if (req.pair) {
    if (a.pair && a.pair->pair) {
      ordered_json p;
      p["p"] = a.pair->pair->first;
      p["l"] = a.pair->pair->second;
      p["slack_condition"] = a.pair->slack_condition_holds;
      if (a.pair->violating_generator) {
        p["violating_generator"] = a.pair->violating_generator->members();
      }
      p["equidimensional"] = a.pair->equidimensional;
      j["maximal_pair"] = p;
    } else {
      j["maximal_pair"] = nullptr;
    }
  }
  if (req.assoc) {
    ordered_json arr = ordered_json::array();
    for (const WitnessedPrime& wp : *a.assoc) {
      arr.push_back(ordered_json{{"indices", wp.indices.members()},
                                 {"witness_exponents", wp.witness.exponents()}});
    }
    j["associated_primes"] = arr;
    j["witnesses_verified"] = a.witnesses_verified;
  }
  if (req.unmixed) j["unmixed"] = *a.unmixed;
  if (req.classify) j["class"] = cm_class_name(*a.cm_class);
  if (req.dual) j["dual"] = index_sets_json(*a.dual);
}

void render_params_text(const Request& req, const VeroneseParams& params,
                        const Analysis& a, std::ostream& os) {
  os << "input: I_{" << params.d << ";";
  for (std::size_t k = 0; k < params.caps.size(); ++k) {
    os << (k ? "," : "") << params.caps[k];
  }
  os << "} in " << params.vars() << " variable"
     << (params.vars() == 1 ? "" : "s") << "\n";
  os << "normal form: core (" << a.nf.core.d << ";";
  for (std::size_t k = 0; k < a.nf.core.caps.size(); ++k) {
    os << (k ? "," : " ") << a.nf.core.caps[k];
  }
  os << ")";
  if (!a.nf.peeled_full_indices.empty()) {
    os << ", peeled " << a.nf.peeled_full_indices.str();
  }
  if (!a.nf.trimmed_zero_indices.empty()) {
    os << ", trimmed " << a.nf.trimmed_zero_indices.str();
  }
  if (a.nf.pure_veronese) os << " [pure Veronese]";
  os << "\n";

  if (req.radical) {
    os << "radical generators: " << family_str(*a.radical) << "\n";
  }
  if (req.borel) {
    os << "Borel generators (sorted frame): " << family_str(a.equidim->borel)
       << "\n";
  }
  if (req.mb) {
    os << "m = " << a.equidim->mb.m << ", b = " << a.equidim->mb.b << "\n";
  }
  if (req.equidim) {
    os << "equidimensional: " << yes_no(a.equidim->verdict);
    if (a.equidim->verdict) {
      os << " (every minimal vertex cover of the reduced ideal has "
            "cardinality "
         << *a.equidim->cover_cardinality << ")";
    } else if (a.equidim->failing_generator) {
      os << " (generator " << squarefree_str(*a.equidim->failing_generator)
         << " has max index minus degree above m - b)";
    } else if (a.equidim->unique_top_borel) {
      os << " (top Borel generator is "
         << squarefree_str(*a.equidim->unique_top_borel)
         << " instead of the last b variables)";
    } else {
      os << " (no unique top-degree Borel generator)";
    }
    os << "\n";
  }
  if (req.pair && a.pair && a.pair->pair) {
    os << "maximal pair: (p,l) = (" << a.pair->pair->first << ","
       << a.pair->pair->second << "); ";
    if (a.pair->slack_condition_holds) {
      os << "every radical generator has max index minus degree <= p - l "
            "-> equidimensional\n";
    } else {
      os << "generator " << squarefree_str(*a.pair->violating_generator)
         << " exceeds the slack p - l -> not equidimensional\n";
    }
  } else if (req.pair) {
    os << "maximal pair: not applicable\n";
  }
  if (req.assoc) {
    os << "associated primes (" << a.assoc->size() << "):\n";
    for (const WitnessedPrime& wp : *a.assoc) {
      os << "  " << prime_str(wp.indices) << "  =  I : " << wp.witness.str()
         << "\n";
    }
  }
  if (req.unmixed) os << "unmixed: " << yes_no(*a.unmixed) << "\n";
  if (req.classify) os << "class: " << cm_class_name(*a.cm_class) << "\n";
  if (req.dual) {
    os << "Alexander dual of the radical: " << family_str(*a.dual) << "\n";
  }
  for (const std::string& note : a.notes) os << "note: " << note << "\n";
}

RunResult run_params(const Request& req, const VeroneseParams& params) {
  RunResult rr;
  rr.report["schema"] = 1;

  Analysis a = analyze(req, params);
  if (req.corrupt) corrupt_one(a);
  if (req.oracle_check) {
    oracle_check_params(req, params, a, rr.discrepancies);
  }

  render_params_json(req, params, a, rr.report);
  rr.report["oracle"] =
      ordered_json{{"checked", req.oracle_check},
                   {"agreed", rr.discrepancies.empty()}};

  std::ostringstream os;
  render_params_text(req, params, a, os);
  if (req.oracle_check) {
    os << "oracle: "
       << (rr.discrepancies.empty() ? "agreed" : "DISAGREED") << "\n";
  }
  rr.text = os.str();
  rr.exit_code = req.oracle_check && !rr.discrepancies.empty() ? 2 : 0;
  return rr;
}

RunResult run_bases(const Request& req, const BaseSet& bases) {
  RunResult rr;
  ordered_json& j = rr.report;
  j["schema"] = 1;
  j["input"] = ordered_json{{"bases", bases.vectors()}};

  const bool exchange = check_exchange(bases);
  const bool strong = exchange && check_strong_exchange(bases);
  j["exchange"] = exchange;
  j["strong_exchange"] = strong;

  std::ostringstream os;
  os << "base set: " << bases.vectors().size() << " vectors in "
     << bases.vars() << " coordinates, modulus " << bases.rank() << "\n";
  os << "exchange property: " << yes_no(exchange) << "\n";
  os << "strong exchange property: " << yes_no(strong) << "\n";

  std::vector<std::string> notes;
  if (!exchange) {
    if (req.any_action() && !req.all) {
      throw DomainError(
          "the family is not a polymatroid base set; only the exchange "
          "checks apply");
    }
    notes.push_back("not a polymatroid base set; analyses skipped");
  } else if (strong) {
    Translation t = translation_normalize(bases);
    j["translation"] = ordered_json{
        {"shift", t.shift}, {"d", t.params.d}, {"a", t.params.caps}};
    os << "translation shift: (";
    for (std::size_t k = 0; k < t.shift.size(); ++k) {
      os << (k ? "," : "") << t.shift[k];
    }
    os << "), normalized parameters (" << t.params.d << ";";
    for (std::size_t k = 0; k < t.params.caps.size(); ++k) {
      os << (k ? "," : " ") << t.params.caps[k];
    }
    os << ")\n";

    bool shifted = std::any_of(t.shift.begin(), t.shift.end(),
                               [](int s) { return s != 0; });
    if (!shifted) {
      // Veronese position: the whole parameter pipeline applies.
      if (req.any_action()) {
        RunResult inner = run_params(req, t.params);
        for (auto& [key, value] : inner.report.items()) {
          if (key != "schema" && key != "input") j[key] = value;
        }
        os << inner.text;
        rr.discrepancies = std::move(inner.discrepancies);
        rr.exit_code = inner.exit_code;
        rr.text = os.str();
        return rr;
      }
    } else {
      MonomialIdeal ideal = polymatroidal_ideal(bases, /*check=*/false);
      if (req.radical) {
        std::vector<IndexSet> rad = supports_of(radical(ideal));
        j["radical"] = index_sets_json(rad);
        os << "radical generators: " << family_str(rad) << "\n";
      }
      if (req.equidim) {
        bool verdict = strong_polymatroidal_equidimensional(bases);
        j["equidimensional"] = ordered_json{{"verdict", verdict}};
        os << "equidimensional: " << yes_no(verdict)
           << " (the ideal has a monomial factor; the verdict is "
              "principality of the radical)\n";
      }
      if (req.borel || req.mb || req.pair || req.assoc || req.unmixed ||
          req.classify || req.dual) {
        if (!req.all) {
          throw DomainError(
              "this analysis needs a base set in Veronese position "
              "(translation shift zero)");
        }
        notes.push_back(
            "analyses beyond radical/equidimensional skipped: the translated "
            "base set has a nonzero shift");
      }
      if (req.oracle_check) {
        oracle::OracleBudget budget;
        if (req.radical) {
          std::vector<IndexSet> via_rank =
              supports_of(radical_via_rank(bases, /*check=*/false));
          std::vector<IndexSet> direct = supports_of(radical(ideal));
          if (via_rank != direct) {
            rr.discrepancies.push_back(
                "radical: rank-function route disagrees with squarefree "
                "parts");
          }
        }
        if (req.equidim) {
          bool verdict = strong_polymatroidal_equidimensional(bases);
          if (verdict !=
              oracle::is_equidimensional_bruteforce(ideal, budget)) {
            rr.discrepancies.push_back(
                "equidimensional: closed form disagrees with vertex covers");
          }
        }
      }
    }
  } else {
    // Exchange holds but strong exchange fails: only the rank-function
    // radical has a closed form here.
    if (req.radical) {
      std::vector<IndexSet> rad =
          supports_of(radical_via_rank(bases, /*check=*/false));
      j["radical"] = index_sets_json(rad);
      os << "radical generators: " << family_str(rad) << "\n";
      if (req.oracle_check) {
        MonomialIdeal ideal = polymatroidal_ideal(bases, /*check=*/false);
        if (rad != supports_of(radical(ideal))) {
          rr.discrepancies.push_back(
              "radical: rank-function route disagrees with squarefree parts");
        }
      }
    }
    if (req.borel || req.mb || req.equidim || req.pair || req.assoc ||
        req.unmixed || req.classify || req.dual) {
      if (!req.all) {
        throw DomainError(
            "this analysis needs the strong exchange property");
      }
      notes.push_back(
          "analyses beyond the radical skipped: strong exchange fails");
    }
  }

  if (!notes.empty()) {
    j["notes"] = notes;
    for (const std::string& n : notes) os << "note: " << n << "\n";
  }
  j["oracle"] = ordered_json{{"checked", req.oracle_check},
                             {"agreed", rr.discrepancies.empty()}};
  if (req.oracle_check) {
    os << "oracle: "
       << (rr.discrepancies.empty() ? "agreed" : "DISAGREED") << "\n";
  }
  rr.text = os.str();
  rr.exit_code = req.oracle_check && !rr.discrepancies.empty() ? 2 : 0;
  return rr;
}

}  // namespace

RunResult run(const Request& request) {
  if (request.params.has_value() == request.bases.has_value()) {
    throw UsageError("exactly one input is required: \"d;a1,...,an\" or "
                     "--bases FILE");
  }
  if (!request.any_action()) {
    throw UsageError("no analysis requested; pass --all or one of "
                     "--radical --borel --mb --equidim --pair --assoc "
                     "--unmixed --classify --dual");
  }
  if (request.params) return run_params(request, *request.params);
  return run_bases(request, *request.bases);
}

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact combinatorial analyzer for monomial ideals of Veronese type"};
  std::string input;
  std::string bases_path;
  Request req;
  app.add_option("input", input,
                 "parameters as \"d;a1,a2,...,an\" (the ideal generated by "
                 "the degree-d monomials with i-th exponent at most a_i)");
  app.add_option("--bases", bases_path,
                 "file with one nonnegative integer vector per line, "
                 "analyzed as a polymatroid base set");
  app.add_flag("--radical", req.radical, "minimal generators of the radical");
  app.add_flag("--borel", req.borel, "Borel generators of the radical");
  app.add_flag("--mb", req.mb, "the invariants m and b of the radical");
  app.add_flag("--equidim", req.equidim, "equidimensionality with evidence");
  app.add_flag("--pair", req.pair, "the maximal window pair criterion");
  app.add_flag("--assoc", req.assoc, "associated primes with witnesses");
  app.add_flag("--unmixed", req.unmixed, "unmixedness");
  app.add_flag("--classify", req.classify,
               "Cohen-Macaulay classification (principal / Veronese / "
               "squarefree Veronese / none)");
  app.add_flag("--dual", req.dual, "Alexander dual of the radical");
  bool all = false;
  app.add_flag("--all", all, "run every analysis");
  app.add_flag("--oracle", req.oracle_check,
               "cross-check every closed form against brute-force "
               "enumeration; disagreement exits with code 2");
  app.add_flag("--json", req.json, "machine-readable report on stdout");
  app.add_flag("--corrupt", req.corrupt,
               "self-test hook: corrupt one closed-form result before the "
               "oracle comparison")
      ->group("");  // hidden

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (all) req.set_all();
    if (!input.empty()) req.params = parse_params(input);
    if (!bases_path.empty()) req.bases = parse_bases_file(bases_path);
    RunResult rr = run(req);
    if (req.json) {
      out << rr.report.dump(2) << "\n";
    } else {
      out << rr.text;
    }
    for (const std::string& d : rr.discrepancies) {
      err << "discrepancy: " << d << "\n";
    }
    return rr.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace veronese::cli
