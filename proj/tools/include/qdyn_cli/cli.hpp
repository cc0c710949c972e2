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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdyn/exact/rational.hpp"
#include "qdyn_cli/report.hpp"

namespace qdyn::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMathRange = 3;

struct Command {
  std::string verb;
  std::optional<std::string> c;
  std::optional<std::string> p;
  std::optional<std::string> x;
  std::optional<std::string> s;
  std::optional<int> max_degree;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<double> tol;
  Format format = Format::Text;
  bool timing = false;
  /// Significant digits of float renderings.
  int digits = 30;
};

/// Digits from QDYN_DIGITS, or 30 when unset. Throws InvalidInput when the
/// variable is not an integer in [1, 45].
int default_digits();

/// Executes a validated command. Library errors propagate.
Report execute(const Command& cmd);

/// Full frontend: parse argv, execute, print. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdyn::cli
