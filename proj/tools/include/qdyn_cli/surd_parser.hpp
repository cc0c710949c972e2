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

#include <string_view>

#include "qdyn/exact/surd.hpp"

namespace qdyn::cli {

/// Parses expressions such as "(1+sqrt(5))/2", "-sqrt(2)", "1/3" or
/// "(1+sqrt(5))/(2*sqrt(5))" into an exact surd sum. sqrt takes a
/// nonnegative rational; division needs a single-term divisor. Throws
/// InvalidInput on anything else.
SurdSum parse_surd(std::string_view text);

}  // namespace qdyn::cli
