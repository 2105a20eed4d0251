// Copyright 2026 The trimin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trimin/graph6.hpp"

#include "trimin/error.hpp"

namespace trimin {

std::string to_graph6(const Graph& g) {
  if (g.order() > kMaxGraph6Order) {
    throw UnsupportedError("graph6 encoding supports at most 62 vertices");
  }
  std::string out;
  out.push_back(static_cast<char>(63 + g.order()));
  int filled = 0;
  int chunk = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        filled = 0;
        chunk = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 line", 0);
  const int header = static_cast<unsigned char>(line[0]);
  if (header == 126) {
    throw ParseError("multi-byte graph6 size header not supported", 0);
  }
  if (header < 63 || header > 63 + kMaxGraph6Order) {
    throw ParseError("invalid graph6 size byte", 0);
  }
  const int n = header - 63;
  const std::int64_t pairs = choose2(n);
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() != body + 1) {
    const std::size_t at = line.size() < body + 1 ? line.size() : body + 1;
    throw ParseError("graph6 body has " + std::to_string(line.size() - 1) +
                         " bytes, expected " + std::to_string(body),
                     at);
  }
  Graph g(n);
  std::int64_t pos = 0;
  int i = 0;
  int j = 1;
  for (std::size_t b = 0; b < body; ++b) {
    const int value = static_cast<unsigned char>(line[b + 1]) - 63;
    if (value < 0 || value > 63) {
      throw ParseError("invalid graph6 body byte", b + 1);
    }
    for (int bit = 5; bit >= 0; --bit, ++pos) {
      const bool set = (value >> bit) & 1;
      if (pos >= pairs) {
        if (set) throw ParseError("nonzero graph6 padding bit", b + 1);
        continue;
      }
      if (set) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

}  // namespace trimin
