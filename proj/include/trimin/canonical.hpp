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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "trimin/graph.hpp"

namespace trimin {

/// Largest order for which canonical forms are computed exactly.
inline constexpr int kMaxCanonicalOrder = 10;

/// Isomorphism-class key. `bits` packs the upper triangle in column order
/// (01, 02, 12, 03, 13, 23, ...) with the first pair in the most significant
/// used bit, so integer order is lexicographic order. The stored string is the
/// lexicographically smallest one over all relabelings.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits * 0x9E3779B97F4A7C15ULL +
                                      static_cast<std::uint64_t>(f.n));
  }
};

/// Exact canonical form; throws UnsupportedError above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

/// A relabeling `perm` with canonical_form(g) == pack(g.relabel(perm)).
std::vector<int> canonical_labeling(const Graph& g);

/// Packs a labeled graph's upper triangle without minimising.
CanonicalForm pack_labeled(const Graph& g);
/// Inverse of pack_labeled; also decodes canonical forms.
Graph unpack(const CanonicalForm& form);

}  // namespace trimin
