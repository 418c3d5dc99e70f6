// Copyright 2026 The choimaps Authors
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

#include "choimaps/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace choimaps {

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "gnuplot") return OutputFormat::Gnuplot;
  throw std::invalid_argument("unknown output format '" + s + "' (expected json, csv or gnuplot)");
}

namespace {

std::string csv_tail(const DetectionReport& r) {
  return format_number(r.min_eig_mapped) + "," + (r.lambda_analytic ? format_number(*r.lambda_analytic) : "") + "," +
         (r.ppt ? "true" : "false") + "," + to_string(r.classification);
}

std::string json_array(const std::vector<DetectionReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) j.push_back(r);
  return j.dump(2) + "\n";
}

}  // namespace

std::string format_scan(const ScanResult& result, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      std::vector<DetectionReport> reports;
      reports.reserve(result.points.size());
      for (const auto& p : result.points) reports.push_back(p.report);
      return json_array(reports);
    }
    case OutputFormat::Csv:
      for (const auto& axis : result.axes) os << axis << ',';
      os << "min_eig,lambda,ppt,class\n";
      for (const auto& p : result.points) {
        for (double c : p.coords) os << format_number(c) << ',';
        os << csv_tail(p.report) << '\n';
      }
      break;
    case OutputFormat::Gnuplot:
      for (std::size_t k = 0; k < result.points.size(); ++k) {
        const auto& p = result.points[k];
        // A new outer-coordinate block starts whenever the last axis changes.
        if (k > 0 && p.coords.size() > 1 && p.coords.back() != result.points[k - 1].coords.back()) os << '\n';
        for (double c : p.coords) os << format_number(c) << ' ';
        os << format_number(p.report.min_eig_mapped) << '\n';
      }
      break;
  }
  return os.str();
}

std::string format_reports(const std::vector<DetectionReport>& reports, OutputFormat format) {
  if (format == OutputFormat::Json) return json_array(reports);
  if (format == OutputFormat::Gnuplot) throw std::invalid_argument("gnuplot output is only available for scans");
  std::ostringstream os;
  os << "state,min_eig,lambda,ppt,class\n";
  for (const auto& r : reports) os << '"' << r.state_label << "\"," << csv_tail(r) << '\n';
  return os.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path.string() + "'");
  }
}

void emit_scan(const ScanResult& result, OutputFormat format, const std::optional<std::filesystem::path>& path,
               std::ostream& fallback) {
  if (format == OutputFormat::Csv && result.points.empty()) {
    throw std::invalid_argument("refusing to write an empty scan as CSV");
  }
  const std::string text = format_scan(result, format);
  if (path) {
    write_file_atomically(*path, text);
  } else {
    fallback << text;
  }
}

}  // namespace choimaps
