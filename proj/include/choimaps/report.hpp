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

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "choimaps/detection.hpp"

namespace choimaps {

enum class OutputFormat { Json, Csv, Gnuplot };

OutputFormat output_format_from_string(const std::string& s);

/// json: array of DetectionReport objects.
/// csv: header `beta,gamma,min_eig,lambda,ppt,class` (`b,min_eig,...` for the
///      2x4 families); an empty lambda field means "not available".
/// gnuplot: whitespace-separated `beta gamma min_eig` rows, one blank line
///      between consecutive gamma blocks (`b min_eig` for the 2x4 families).
std::string format_scan(const ScanResult& result, OutputFormat format);

/// Reports without grid coordinates (detect / horodecki output).
std::string format_reports(const std::vector<DetectionReport>& reports, OutputFormat format);

/// Writes via a temporary sibling file and a rename. Throws std::runtime_error
/// when the destination cannot be written.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

/// Writes the formatted scan to `path`, or to `fallback` when no path is given.
/// CSV output of an empty result is rejected.
void emit_scan(const ScanResult& result, OutputFormat format, const std::optional<std::filesystem::path>& path,
               std::ostream& fallback);

}  // namespace choimaps
