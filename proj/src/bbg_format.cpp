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

#include "bbforest/bbg_format.hpp"

#include <charconv>
#include <vector>

#include "bbforest/errors.hpp"

namespace bbforest {
namespace {

// Splits LF-terminated lines. A final line without LF is reported as an error
// by the caller via `unterminated`.
struct Lines {
  std::vector<std::string_view> items;
  bool unterminated = false;
};

Lines split_lines(std::string_view text) {
  Lines out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      out.items.push_back(text.substr(pos));
      out.unterminated = true;
      break;
    }
    out.items.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

int parse_size(std::string_view field) {
  if (field.empty()) throw MalformedInput("missing part size", 2);
  if (field.size() > 1 && field.front() == '0') {
    throw MalformedInput("part size has leading zeros", 2);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw MalformedInput("part size is not a decimal integer", 2);
  }
  if (value < 1) throw MalformedInput("part size must be positive", 2);
  return value;
}

}  // namespace

BalancedBipartiteGraph parse_bbg(std::string_view text) {
  const Lines lines = split_lines(text);
  const auto& items = lines.items;
  if (items.empty() || items[0] != kBbgHeader) {
    throw MalformedInput("bad header, expected \"BBG 1\"", 1);
  }
  if (items.size() < 2) throw MalformedInput("missing part size", 2);
  const int n = parse_size(items[1]);

  std::vector<Row> rows;
  rows.reserve(n <= kMaxPartSize ? n : 0);
  for (int i = 0; i < n; ++i) {
    const int line = i + 3;
    if (static_cast<std::size_t>(i + 2) >= items.size()) {
      throw MalformedInput("expected " + std::to_string(n) + " rows, got " +
                               std::to_string(i),
                           line);
    }
    std::string_view row = items[i + 2];
    if (static_cast<int>(row.size()) != n) {
      throw MalformedInput("row has width " + std::to_string(row.size()) +
                               ", expected " + std::to_string(n),
                           line);
    }
    Row bits = 0;
    for (int j = 0; j < n; ++j) {
      if (row[j] == '1') {
        if (j < kMaxPartSize) bits |= Row{1} << j;
      } else if (row[j] != '0') {
        throw MalformedInput("character outside {0,1} in column " +
                                 std::to_string(j),
                             line);
      }
    }
    rows.push_back(bits);
  }
  if (items.size() > static_cast<std::size_t>(n) + 2) {
    throw MalformedInput("unexpected content after the last row", n + 3);
  }
  if (lines.unterminated) {
    throw MalformedInput("missing final newline",
                         static_cast<int>(items.size()));
  }
  return BalancedBipartiteGraph::from_rows(n, std::move(rows));
}

std::string emit_bbg(const BalancedBipartiteGraph& g) {
  const int n = g.n();
  std::string out;
  out.reserve(static_cast<std::size_t>(n + 1) * n + 16);
  out.append(kBbgHeader);
  out.push_back('\n');
  out.append(std::to_string(n));
  out.push_back('\n');
  for (int i = 0; i < n; ++i) {
    const Row row = g.first_row(i);
    for (int j = 0; j < n; ++j) out.push_back(((row >> j) & 1U) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

}  // namespace bbforest
