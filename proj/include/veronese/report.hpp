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

#ifndef VERONESE_REPORT_HPP
#define VERONESE_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "veronese/analysis.hpp"
#include "veronese/core.hpp"
#include "veronese/polymatroid.hpp"

namespace veronese::cli {

/// Command-line / argument errors; mapped to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Request {
  std::optional<VeroneseParams> params;
  std::optional<BaseSet> bases;

  bool radical = false;
  bool borel = false;
  bool mb = false;
  bool equidim = false;
  bool pair = false;
  bool assoc = false;
  bool unmixed = false;
  bool classify = false;
  bool dual = false;

  bool oracle_check = false;
  bool json = false;
  /// Self-test hook: perturb one closed-form result before the oracle
  /// comparison, so a 'agreed' verdict stays falsifiable end to end.
  bool corrupt = false;
  /// Set by --all; analyses that do not apply to the given input are then
  /// skipped with a note instead of raising an error.
  bool all = false;

  bool any_action() const {
    return radical || borel || mb || equidim || pair || assoc || unmixed ||
           classify || dual;
  }
  void set_all() {
    radical = borel = mb = equidim = pair = assoc = unmixed = classify =
        dual = true;
    all = true;
  }
};

/// Parses "d;a1,a2,...,an" (whitespace-insensitive).  Throws UsageError
/// with the character position of the first offending character.
VeroneseParams parse_params(const std::string& text);

/// Reads one nonnegative integer vector per line; '#' starts a comment.
BaseSet parse_bases_file(const std::string& path);

struct RunResult {
  nlohmann::ordered_json report;
  std::string text;
  /// Human-readable explanations of every closed-form/oracle disagreement.
  std::vector<std::string> discrepancies;
  /// 0 on success, 2 when the oracle cross-check disagreed.
  int exit_code = 0;
};

/// Executes the requested analyses.  Domain errors, budget errors and
/// usage errors propagate as exceptions (exit code 1 territory);
/// closed-form/oracle disagreement is reported in the result with exit
/// code 2.
RunResult run(const Request& request);

/// Full driver: parses argv-style arguments (program name excluded),
/// executes, prints the report to out and diagnostics to err.  Returns the
/// process exit code: 0 success, 1 usage or domain error, 2 oracle
/// discrepancy.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace veronese::cli

#endif  // VERONESE_REPORT_HPP
