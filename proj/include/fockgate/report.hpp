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

#ifndef FOCKGATE_REPORT_HPP
#define FOCKGATE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fockgate/fock_state.hpp"

namespace fockgate {

// Structured report records and their text, CSV and JSON renderings.
//
// Reals are printed with 12 significant digits. A value within kTolerance
// of a small rational p/q (q <= 64) gets the fraction appended: in the text
// table as "0.111111111111 (1/9)", in CSV as an extra "<column>_exact"
// column, in JSON as an "<column>_exact" sibling key.

using Cell = std::variant<std::string, double, Complex>;

struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct ReportMeta {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;
};

enum class Format { Table, Csv, Json };

/// "table", "csv" or "json". Throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// 12 significant digits; magnitudes below kTolerance print as "0".
std::string format_number(double value);

/// "p/q" when @p value is within kTolerance of a fraction with q <= 64.
std::optional<std::string> rational_annotation(double value);

/// Exact form of a complex value when both parts are small rationals.
std::optional<std::string> rational_annotation(Complex value);

std::string render(const ReportTable &table, const ReportMeta &meta, Format format);

} // namespace fockgate

#endif // FOCKGATE_REPORT_HPP
