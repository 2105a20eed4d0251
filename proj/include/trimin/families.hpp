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

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "trimin/canonical.hpp"
#include "trimin/graph.hpp"

namespace trimin {

enum class FamilyId { kHstar, kH0star, kH1star, kH2star, kH0, kH1, kH2 };

/// "hstar", "h0star", "h1star", "h2star", "h0", "h1", "h2".
std::string_view to_string(FamilyId f);
FamilyId parse_family(std::string_view name);

/// Vertex sets in the order the family definition names them:
///   H0: B_1..B_{k-1}, nonincreasing sizes
///   H1: A_1..A_{k-2} (nonincreasing), then B
///   H2: A_1..A_k, nonincreasing sizes
/// Starred families reuse the shape of the family that witnessed them; a
/// starred H0 member outside starred H1 carries an H0-shaped witness.
using Partition = std::vector<std::vector<int>>;

struct Membership {
  bool member = false;
  Partition witness;
};

inline constexpr int kMaxMembershipOrder = 12;
inline constexpr int kMaxFamilyEnumerationOrder = 9;

/// Decides g ∈ family(n,e) with n = g.order(). Requires e >= 1 and
/// g.edge_count() == e.
Membership family_membership(const Graph& g, FamilyId family, std::int64_t e);

/// Every isomorphism class in family(n,e), sorted, without duplicates.
std::vector<CanonicalForm> enumerate_family(int n, std::int64_t e,
                                            FamilyId family);

/// Callback receives each witness partition; returning true stops the search.
using PartitionVisitor = std::function<bool(const Partition&)>;

/// All H0-canonical partitions of g into k-1 nonempty parts.
void for_each_h0_partition(const Graph& g, int k, const PartitionVisitor& visit);
/// All H1-canonical partitions (A_1..A_{k-2}, B).
void for_each_h1_partition(const Graph& g, int k, const PartitionVisitor& visit);
/// All H2-canonical partitions (A_1..A_k), up to reordering equal-size parts.
void for_each_h2_partition(const Graph& g, int k, const PartitionVisitor& visit);

/// True iff `parts` is an H0-canonical partition of g for index k.
bool is_h0_partition(const Graph& g, const Partition& parts, int k);

bool is_k_colorable(const Graph& g, int k);

/// True iff the subgraph induced on `mask` has no triangle.
bool induces_triangle_free(const Graph& g, Row mask);

}  // namespace trimin
