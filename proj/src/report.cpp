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

#include "fockgate/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef FOCKGATE_VERSION
#define FOCKGATE_VERSION "unknown"
#endif

namespace fockgate {

namespace {

constexpr int kMaxDenominator = 64;

std::string format_complex(Complex value)
{
  const double im = std::abs(value.imag()) < kTolerance ? 0.0 : value.imag();
  return format_number(value.real()) + (im < 0 ? "-" : "+") + format_number(std::abs(im)) + "i";
}

// 12 significant digits, parsed back so JSON carries the same value the
// text renderings show.
double rounded(double value) { return std::stod(format_number(value)); }

std::string csv_escape(const std::string &text)
{
  if (text.find_first_of(",\"\n") == std::string::npos)
    return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string text_cell(const Cell &cell)
{
  if (const auto *s = std::get_if<std::string>(&cell))
    return *s;
  if (const auto *d = std::get_if<double>(&cell)) {
    const auto exact = rational_annotation(*d);
    return format_number(*d) + (exact ? " (" + *exact + ")" : "");
  }
  const Complex z = std::get<Complex>(cell);
  const auto exact = rational_annotation(z);
  return format_complex(z) + (exact ? " (" + *exact + ")" : "");
}

std::string render_table(const ReportTable &table, const ReportMeta &meta)
{
  std::vector<std::vector<std::string>> grid;
  grid.push_back(table.columns);
  for (const auto &row : table.rows) {
    std::vector<std::string> line;
    for (const auto &cell : row)
      line.push_back(text_cell(cell));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (const auto &line : grid)
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], line[c].size());

  std::ostringstream os;
  os << "# " << meta.command;
  for (const auto &[key, value] : meta.config)
    os << ' ' << key << '=' << value;
  os << '\n';
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      if (c)
        os << "  ";
      os << grid[r][c];
      if (c + 1 < grid[r].size())
        os << std::string(width[c] - grid[r][c].size(), ' ');
    }
    os << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : width)
        total += w;
      os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
    }
  }
  return os.str();
}

std::string render_csv(const ReportTable &table)
{
  // Column kinds come from the first row; text columns stay single.
  std::vector<std::string> header;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const std::string &name = table.columns[c];
    const Cell *probe = table.rows.empty() ? nullptr : &table.rows.front()[c];
    if (probe && std::holds_alternative<double>(*probe)) {
      header.push_back(name);
      header.push_back(name + "_exact");
    } else if (probe && std::holds_alternative<Complex>(*probe)) {
      header.push_back(name + "_re");
      header.push_back(name + "_im");
      header.push_back(name + "_exact");
    } else {
      header.push_back(name);
    }
  }

  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << csv_escape(header[i]);
  os << '\n';
  for (const auto &row : table.rows) {
    std::vector<std::string> fields;
    for (const auto &cell : row) {
      if (const auto *s = std::get_if<std::string>(&cell)) {
        fields.push_back(csv_escape(*s));
      } else if (const auto *d = std::get_if<double>(&cell)) {
        fields.push_back(format_number(*d));
        fields.push_back(rational_annotation(*d).value_or(""));
      } else {
        const Complex z = std::get<Complex>(cell);
        fields.push_back(format_number(z.real()));
        fields.push_back(format_number(z.imag()));
        fields.push_back(rational_annotation(z).value_or(""));
      }
    }
    for (std::size_t i = 0; i < fields.size(); ++i)
      os << (i ? "," : "") << fields[i];
    os << '\n';
  }
  return os.str();
}

std::string render_json(const ReportTable &table, const ReportMeta &meta)
{
  using Json = nlohmann::ordered_json;
  Json config = Json::object();
  for (const auto &[key, value] : meta.config)
    config[key] = value;

  Json rows = Json::array();
  for (const auto &row : table.rows) {
    Json record = Json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      const std::string &name = table.columns[c];
      const Cell &cell = row[c];
      if (const auto *s = std::get_if<std::string>(&cell)) {
        record[name] = *s;
      } else if (const auto *d = std::get_if<double>(&cell)) {
        record[name] = rounded(*d);
        if (auto exact = rational_annotation(*d))
          record[name + "_exact"] = *exact;
      } else {
        const Complex z = std::get<Complex>(cell);
        Json value = {{"re", rounded(z.real())}, {"im", rounded(z.imag())}};
        if (auto exact = rational_annotation(z))
          value["exact"] = *exact;
        record[name] = std::move(value);
      }
    }
    rows.push_back(std::move(record));
  }

  Json doc = {{"meta",
               {{"version", FOCKGATE_VERSION},
                {"command", meta.command},
                {"seed", meta.seed},
                {"config", std::move(config)}}},
              {"data", {{"columns", table.columns}, {"rows", std::move(rows)}}}};
  return doc.dump(2) + "\n";
}

} // namespace

Format parse_format(std::string_view name)
{
  if (name == "table")
    return Format::Table;
  if (name == "csv")
    return Format::Csv;
  if (name == "json")
    return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected table, csv or json)");
}

std::string format_number(double value)
{
  if (std::abs(value) < kTolerance)
    return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::optional<std::string> rational_annotation(double value)
{
  if (!std::isfinite(value))
    return std::nullopt;
  if (std::abs(value) < kTolerance)
    return "0";
  for (long q = 1; q <= kMaxDenominator; ++q) {
    const double scaled = value * static_cast<double>(q);
    const long p = std::lround(scaled);
    if (std::abs(value - static_cast<double>(p) / static_cast<double>(q)) < kTolerance) {
      const long g = std::gcd(std::abs(p), q);
      if (q / g == 1)
        return std::to_string(p / g);
      return std::to_string(p / g) + "/" + std::to_string(q / g);
    }
  }
  return std::nullopt;
}

std::optional<std::string> rational_annotation(Complex value)
{
  const auto re = rational_annotation(value.real());
  const auto im = rational_annotation(value.imag());
  if (!re || !im)
    return std::nullopt;
  if (*im == "0")
    return re;
  const std::string imag = (*im == "1" ? "" : *im == "-1" ? "-" : *im) + "i";
  if (*re == "0")
    return imag;
  return *re + (imag.front() == '-' ? "" : "+") + imag;
}

std::string render(const ReportTable &table, const ReportMeta &meta, Format format)
{
  switch (format) {
  case Format::Table:
    return render_table(table, meta);
  case Format::Csv:
    return render_csv(table);
  case Format::Json:
    return render_json(table, meta);
  }
  throw std::logic_error("unhandled report format");
}

} // namespace fockgate
