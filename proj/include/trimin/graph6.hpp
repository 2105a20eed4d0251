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

#pragma once

#include <string>
#include <string_view>

#include "trimin/graph.hpp"

namespace trimin {

/// graph6 with the single-byte size header, so orders 0..62.
inline constexpr int kMaxGraph6Order = 62;

/// Encodes without a trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes one line. A single trailing "\n" or "\r\n" is accepted; anything
/// else malformed raises ParseError carrying the byte offset.
Graph from_graph6(std::string_view line);

}  // namespace trimin
