/*
 * Copyright 2026 The fockgate Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOCKGATE_TOOLS_COMMANDS_HPP
#define FOCKGATE_TOOLS_COMMANDS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fockgate/gate_lab.hpp"
#include "fockgate/report.hpp"

namespace fockgate::cli {

struct ScenarioConfig {
  Encoding encoding = Encoding::PhaseGate;
  double reflectivity = kBalancedReflectivity;
  std::string grid = "0:1:1/12";
  std::string input;          ///< basis label or "a,b,c,d" amplitude list; empty for none
  std::string rule = "full";  ///< full | practical
  Format format = Format::Table;
  std::string out;            ///< empty writes to stdout
  std::uint64_t seed = 20011;
};

/// Real number or fraction such as "1/3".
double parse_real(std::string_view text);

/// "x", "yi", "x+yi", "x-yi", with fractions allowed in each part.
Complex parse_complex(std::string_view text);

/// "start:stop:step" (stop inclusive) or a comma-separated list.
/// Throws std::invalid_argument for an empty grid or values outside [0, 1].
std::vector<double> parse_grid(std::string_view text);

/// Four comma-separated amplitudes, normalized. Writes a warning to @p warn
/// when the norm was off by more than 1e-9.
std::array<Complex, 4> parse_amplitudes(std::string_view text, std::ostream &warn);

/// Basis label of @p encoding or an amplitude list, as an encoded input state.
PureState parse_input(std::string_view text, Encoding encoding, std::ostream &warn);

PostSelectionRule parse_rule(std::string_view name);

ReportTable truth_table_report(const ScenarioConfig &config);
ReportTable error_budget_report(const ScenarioConfig &config, std::ostream &warn);
ReportTable scan_report(const ScenarioConfig &config);

struct CheckResult {
  std::string name;
  bool passed;
  double max_deviation;
  double tolerance;
};

/// Randomized and exact invariant checks; deterministic for a given seed.
std::vector<CheckResult> run_verification(const ScenarioConfig &config);

ReportTable verification_report(const std::vector<CheckResult> &checks);

/// Parses @p args (without the program name) and executes one subcommand.
/// Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fockgate::cli

#endif // FOCKGATE_TOOLS_COMMANDS_HPP
