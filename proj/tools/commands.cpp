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

#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fockgate/evolution.hpp"
#include "fockgate/oracle.hpp"
#include "fockgate/random.hpp"

namespace fockgate::cli {

namespace {

std::string trim(std::string_view text)
{
  auto begin = text.find_first_not_of(" \t");
  auto end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    return {};
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split(std::string_view text, char separator)
{
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(separator, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

double parse_plain(const std::string &text)
{
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception &) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

std::string format_real_config(double value)
{
  const auto exact = rational_annotation(value);
  return exact ? *exact : format_number(value);
}

std::vector<std::pair<std::string, std::string>> config_entries(const ScenarioConfig &config)
{
  return {{"encoding", std::string(to_string(config.encoding))},
          {"reflectivity", format_real_config(config.reflectivity)},
          {"rule", config.rule}};
}

} // namespace

double parse_real(std::string_view text)
{
  const std::string t = trim(text);
  if (t.empty())
    throw std::invalid_argument("empty number");
  const auto slash = t.find('/');
  if (slash == std::string::npos)
    return parse_plain(t);
  const double num = parse_plain(trim(t.substr(0, slash)));
  const double den = parse_plain(trim(t.substr(slash + 1)));
  if (den == 0.0)
    throw std::invalid_argument("zero denominator in '" + t + "'");
  return num / den;
}

Complex parse_complex(std::string_view text)
{
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += c;
  if (t.empty())
    throw std::invalid_argument("empty amplitude");

  auto imaginary = [](std::string part) {
    part.pop_back(); // trailing 'i'
    if (part.empty() || part == "+")
      return 1.0;
    if (part == "-")
      return -1.0;
    return parse_real(part);
  };

  if (t.back() != 'i')
    return {parse_real(t), 0.0};
  // split at the last sign that is not the leading one or an exponent sign
  for (std::size_t pos = t.size() - 1; pos > 0; --pos) {
    if ((t[pos] == '+' || t[pos] == '-') && t[pos - 1] != 'e' && t[pos - 1] != 'E')
      return {parse_real(t.substr(0, pos)), imaginary(t.substr(pos))};
  }
  return {0.0, imaginary(t)};
}

std::vector<double> parse_grid(std::string_view text)
{
  std::vector<double> grid;
  const std::string t = trim(text);
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3)
      throw std::invalid_argument("grid must be start:stop:step");
    const double start = parse_real(parts[0]);
    const double stop = parse_real(parts[1]);
    const double step = parse_real(parts[2]);
    if (!(step > 0.0))
      throw std::invalid_argument("grid step must be positive");
    if (stop >= start) {
      const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
      for (long k = 0; k < count; ++k)
        grid.push_back(start + static_cast<double>(k) * step);
    }
  } else if (!t.empty()) {
    for (const auto &part : split(t, ','))
      grid.push_back(parse_real(part));
  }
  if (grid.empty())
    throw std::invalid_argument("empty reflectivity grid");
  for (double r : grid)
    if (!(r >= 0.0 && r <= 1.0))
      throw std::invalid_argument("grid value " + format_number(r) + " lies outside [0, 1]");
  return grid;
}

std::array<Complex, 4> parse_amplitudes(std::string_view text, std::ostream &warn)
{
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw std::invalid_argument("amplitude list needs exactly 4 entries, got " +
                                std::to_string(parts.size()));
  std::array<Complex, 4> amplitudes;
  double n2 = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    amplitudes[k] = parse_complex(parts[k]);
    n2 += std::norm(amplitudes[k]);
  }
  const double norm = std::sqrt(n2);
  if (norm < kTolerance)
    throw std::invalid_argument("amplitude list is zero");
  if (std::abs(norm - 1.0) > 1e-9)
    warn << "warning: input amplitudes renormalized (norm was " << format_number(norm) << ")\n";
  for (auto &a : amplitudes)
    a /= norm;
  return amplitudes;
}

PureState parse_input(std::string_view text, Encoding encoding, std::ostream &warn)
{
  const std::string t = trim(text);
  const auto labels = basis_labels(encoding);
  for (int k = 0; k < 4; ++k)
    if (t == labels[static_cast<std::size_t>(k)])
      return encoded_basis_state(encoding, k);
  if (t.find(',') == std::string::npos)
    throw std::invalid_argument("input '" + t + "' is neither a basis label nor an amplitude list");
  return encode(encoding, parse_amplitudes(t, warn));
}

PostSelectionRule parse_rule(std::string_view name)
{
  if (name == "full")
    return PostSelectionRule::full();
  if (name == "practical")
    return PostSelectionRule::practical(1);
  throw std::invalid_argument("unknown rule '" + std::string(name) + "' (expected full or practical)");
}

ReportTable truth_table_report(const ScenarioConfig &config)
{
  const GateLab lab(config.reflectivity);
  const GateReport report = lab.truth_table(config.encoding, parse_rule(config.rule));
  const auto labels = basis_labels(config.encoding);

  ReportTable table;
  table.columns = {"input"};
  for (const auto &label : labels)
    table.columns.push_back("out_" + label);
  table.columns.push_back("success");
  for (int in = 0; in < 4; ++in) {
    std::vector<Cell> row{labels[static_cast<std::size_t>(in)]};
    for (int out = 0; out < 4; ++out)
      row.emplace_back(report.truth_table(out, in));
    row.emplace_back(report.success[static_cast<std::size_t>(in)]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

ReportTable error_budget_report(const ScenarioConfig &config, std::ostream &warn)
{
  const GateLab lab(config.reflectivity);
  const PostSelectionRule rule = parse_rule(config.rule);
  const auto labels = basis_labels(config.encoding);

  auto budget_row = [&](const std::string &label, const PureState &input) {
    const PureState raw = lab.run_gate(input);
    ErrorBudget budget = budget_of(raw);
    budget.success = postselect(raw, rule).probability;
    return std::vector<Cell>{label, budget.success, budget.loss, budget.bunching, budget.total()};
  };

  ReportTable table;
  table.columns = {"input", "success", "loss", "bunching", "total"};
  for (int k = 0; k < 4; ++k)
    table.rows.push_back(
        budget_row(labels[static_cast<std::size_t>(k)], encoded_basis_state(config.encoding, k)));
  if (!config.input.empty())
    table.rows.push_back(budget_row("custom", parse_input(config.input, config.encoding, warn)));
  return table;
}

ReportTable scan_report(const ScenarioConfig &config)
{
  const auto grid = parse_grid(config.grid);
  ReportTable table;
  table.columns = {"R", "vacuum", "single_01", "single_10", "two_photon", "imbalance"};
  for (const auto &row : reflectivity_scan(grid))
    table.rows.push_back({row.reflectivity, row.vacuum, row.single_01, row.single_10,
                          row.two_photon, row.imbalance});
  return table;
}

std::vector<CheckResult> run_verification(const ScenarioConfig &config)
{
  Rng rng(config.seed);
  std::vector<CheckResult> checks;
  auto record = [&checks](std::string name, double deviation, double tolerance) {
    checks.push_back({std::move(name), deviation <= tolerance, deviation, tolerance});
  };

  auto labelled_registry = [](int modes) {
    std::vector<std::string> labels;
    for (int m = 0; m < modes; ++m)
      labels.push_back("m" + std::to_string(m));
    return ModeRegistry(std::move(labels));
  };
  std::uniform_int_distribution<int> mode_count(2, 6);
  std::uniform_int_distribution<int> photon_count(1, 3);
  std::uniform_int_distribution<int> term_count(1, 3);

  {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix m(n, n);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            m(r, c) = random_complex(rng);
        worst = std::max(worst, std::abs(permanent(m) - permanent_by_permutations(m)));
      }
    record("permanent-vs-permutation-sum", worst, 1e-10);
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const ModeRegistry reg = labelled_registry(mode_count(rng));
      const PureState psi = random_state(reg, photon_count(rng), term_count(rng), rng);
      const ModeUnitary u = random_unitary(reg.count(), rng);
      worst = std::max(worst, max_amplitude_difference(evolve(psi, u), oracle_evolve(psi, u)));
    }
    record("oracle-equivalence", worst, 1e-10);
  }
  {
    double norm_worst = 0.0;
    double homomorphism_worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const ModeRegistry reg = labelled_registry(mode_count(rng));
      const PureState psi = random_state(reg, photon_count(rng), term_count(rng), rng);
      const ModeUnitary u = random_unitary(reg.count(), rng);
      const ModeUnitary v = random_unitary(reg.count(), rng);
      const PureState once = evolve(psi, v);
      norm_worst = std::max(norm_worst, std::abs(norm_squared(once) - norm_squared(psi)));
      homomorphism_worst =
          std::max(homomorphism_worst, max_amplitude_difference(evolve(psi, u * v), evolve(once, u)));
    }
    record("norm-conservation", norm_worst, 1e-10);
    record("composition-homomorphism", homomorphism_worst, 1e-10);
  }

  const GateLab lab(config.reflectivity);
  std::vector<PureState> products;
  for (int k = 0; k < 4; ++k)
    products.push_back(encoded_basis_state(Encoding::PhaseGate, k));
  for (int trial = 0; trial < 100; ++trial)
    products.push_back(random_product_input(rng));
  {
    double worst = 0.0;
    for (const auto &input : products)
      worst = std::max(worst, std::abs(lab.error_budget(input).total() - 1.0));
    record("budget-completeness", worst, kTolerance);
  }
  {
    std::vector<double> success;
    for (auto encoding : {Encoding::PhaseGate, Encoding::Cnot})
      for (int k = 0; k < 4; ++k)
        success.push_back(
            postselect(lab.run_gate(encoded_basis_state(encoding, k)), PostSelectionRule::full())
                .probability);
    for (int trial = 0; trial < 20; ++trial)
      success.push_back(postselect(lab.run_gate(random_encoded_input(Encoding::PhaseGate, rng)),
                                   PostSelectionRule::full())
                            .probability);
    const auto [lo, hi] = std::minmax_element(success.begin(), success.end());
    record("uniform-efficiency", *hi - *lo, kTolerance);
  }
  {
    const std::span<const PureState> subset(products.data(), 54);
    double worst = 0.0;
    for (const auto &c : lab.rule_equivalence(subset).cases)
      worst = std::max(worst, c.max_deviation);
    record("rule-equivalence", worst, kTolerance);
  }
  record("fidelity-cz", std::abs(lab.truth_table(Encoding::PhaseGate).fidelity - 1.0), kTolerance);
  record("fidelity-cnot", std::abs(lab.truth_table(Encoding::Cnot).fidelity - 1.0), kTolerance);
  return checks;
}

ReportTable verification_report(const std::vector<CheckResult> &checks)
{
  ReportTable table;
  table.columns = {"check", "status", "max_deviation", "tolerance"};
  for (const auto &c : checks) {
    // deviations are printed in full; the 12-digit zero snap would hide them
    std::ostringstream deviation;
    deviation.precision(3);
    deviation << std::scientific << c.max_deviation;
    std::ostringstream tolerance;
    tolerance.precision(0);
    tolerance << std::scientific << c.tolerance;
    table.rows.push_back({c.name, std::string(c.passed ? "PASS" : "FAIL"), deviation.str(),
                          tolerance.str()});
  }
  return table;
}

namespace {

void emit(const std::string &text, const ScenarioConfig &config, std::ostream &out)
{
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot open output file '" + config.out + "'");
  file << text;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Fock-space simulator for a post-selected linear-optics phase gate", "fockgate"};
  app.set_version_flag("--version", FOCKGATE_VERSION);
  app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  std::string encoding = "phase";
  std::string reflectivity = "1/3";
  std::string format = "table";
  ScenarioConfig config;

  app.add_option("--encoding", encoding, "Qubit encoding")
      ->check(CLI::IsMember({"phase", "cnot"}))
      ->capture_default_str();
  app.add_option("--reflectivity", reflectivity, "Beam splitter reflectivity (e.g. 0.5 or 1/3)")
      ->capture_default_str();
  app.add_option("--grid", config.grid, "Reflectivity grid: start:stop:step or a,b,c")
      ->capture_default_str();
  app.add_option("--input", config.input, "Basis label (VV, 01, ...) or four amplitudes a,b,c,d");
  app.add_option("--rule", config.rule, "Post-selection rule")
      ->check(CLI::IsMember({"full", "practical"}))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", config.out, "Output path (default stdout)");
  app.add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();

  auto *truth = app.add_subcommand("truth-table", "Post-selected gate action on the encoded basis");
  auto *budget = app.add_subcommand("error-budget", "Success, loss and bunching probabilities");
  auto *scan = app.add_subcommand("scan", "Number-conserving amplitudes over a reflectivity grid");
  auto *verify = app.add_subcommand("verify", "Run the invariant suite");
  for (auto *sub : {truth, budget, scan, verify})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    config.encoding = parse_encoding(encoding);
    config.reflectivity = parse_real(reflectivity);
    if (!(config.reflectivity >= 0.0 && config.reflectivity <= 1.0))
      throw std::invalid_argument("reflectivity must lie in [0, 1]");
    config.format = parse_format(format);

    ReportMeta meta;
    meta.seed = config.seed;
    meta.config = config_entries(config);
    if (*truth) {
      meta.command = "truth-table";
      emit(render(truth_table_report(config), meta, config.format), config, out);
    } else if (*budget) {
      meta.command = "error-budget";
      if (!config.input.empty())
        meta.config.emplace_back("input", config.input);
      emit(render(error_budget_report(config, err), meta, config.format), config, out);
    } else if (*scan) {
      meta.command = "scan";
      meta.config = {{"grid", config.grid}};
      emit(render(scan_report(config), meta, config.format), config, out);
    } else if (*verify) {
      meta.command = "verify";
      const auto checks = run_verification(config);
      emit(render(verification_report(checks), meta, config.format), config, out);
      const bool ok =
          std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
      return ok ? 0 : 1;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace fockgate::cli
