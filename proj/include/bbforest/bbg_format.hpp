// Copyright 2026 The bbforest Authors
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

// BBG v1 text format:
//
//   BBG 1
//   <n>
//   <row 0: n characters from {0,1}>
//   ...
//   <row n-1>
//
// Row i lists the second-part neighbours of first-part vertex i, column j
// being second-part vertex j. Lines end in LF, no trailing whitespace, no
// blank lines.

#ifndef BBFOREST_BBG_FORMAT_HPP_
#define BBFOREST_BBG_FORMAT_HPP_

#include <string>
#include <string_view>

#include "bbforest/graph.hpp"

namespace bbforest {

inline constexpr std::string_view kBbgHeader = "BBG 1";

// Throws MalformedInput carrying the offending 1-based line number.
BalancedBipartiteGraph parse_bbg(std::string_view text);

std::string emit_bbg(const BalancedBipartiteGraph& g);

}  // namespace bbforest

#endif  // BBFOREST_BBG_FORMAT_HPP_
