// Copyright 2026 The qdyn Authors.
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

#include <optional>
#include <string>

#include <json.hpp>

namespace qdyn::cli {

using Json = nlohmann::ordered_json;

/// One CLI invocation's output. Every exact value inside result is a
/// canonical string, every float a decimal string of the requested digits.
struct Report {
  std::string verb;
  /// Echo of the parsed arguments, as strings.
  Json inputs = Json::object();
  Json result = Json::object();
  /// Wall-clock milliseconds; present only when requested.
  std::optional<double> elapsed_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
/// Throws std::invalid_argument on a document that is not a report.
Report report_from_json(const Json& j);

enum class Format { Text, Json };

/// Bytes written to standard output for the report.
std::string render_report(const Report& r, Format format);

}  // namespace qdyn::cli
