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

#include "trimin/canonical.hpp"

#include <array>
#include <limits>
#include <string>

#include "trimin/error.hpp"

namespace trimin {

namespace {

// Branch and bound over labelings built one position at a time. Position t
// contributes the column (label 0..t-1 vs label t), so a prefix of labels
// fixes a prefix of the string and only vertices giving the smallest column
// can stay optimal. Candidates that are twins relative to each other are
// interchangeable by an automorphism fixing every labeled vertex, so one
// representative per twin class suffices.
class MinLabelSearch {
 public:
  explicit MinLabelSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    order_.fill(-1);
    descend(0, 0, g_.vertex_mask());
  }

  std::uint64_t best_bits() const { return best_; }
  const std::array<int, kMaxCanonicalOrder>& best_order() const {
    return best_order_;
  }

 private:
  std::uint32_t column(int v, int t) const {
    std::uint32_t col = 0;
    for (int i = 0; i < t; ++i) {
      col = (col << 1) | static_cast<std::uint32_t>(g_.has_edge(order_[i], v));
    }
    return col;
  }

  static std::uint64_t high_mask(int low_bits) {
    return low_bits >= 64 ? 0 : ~((std::uint64_t{1} << low_bits) - 1);
  }

  void descend(int t, std::uint64_t prefix, Row unlabeled) {
    if (t == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::uint32_t min_col = std::numeric_limits<std::uint32_t>::max();
    Row candidates = 0;
    for (Row r = unlabeled; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint32_t col = column(v, t);
      if (col < min_col) {
        min_col = col;
        candidates = Row{1} << v;
      } else if (col == min_col) {
        candidates |= Row{1} << v;
      }
    }
    const int remaining_bits = total_bits_ - (t * (t + 1)) / 2;
    const std::uint64_t next =
        prefix | (static_cast<std::uint64_t>(min_col) << remaining_bits);
    const std::uint64_t mask = high_mask(remaining_bits);
    Row tried = 0;
    for (Row r = candidates; r != 0; r &= r - 1) {
      // Re-checked per sibling: a leaf found in an earlier sibling may
      // already beat every completion of this prefix.
      if (have_best_ && (best_ & mask) < next) return;
      const int v = std::countr_zero(r);
      bool twin_of_tried = false;
      for (Row s = tried; s != 0; s &= s - 1) {
        const int u = std::countr_zero(s);
        const Row bu = Row{1} << u;
        const Row bv = Row{1} << v;
        if ((g_.row(u) & ~bv) == (g_.row(v) & ~bu)) {
          twin_of_tried = true;
          break;
        }
      }
      if (twin_of_tried) continue;
      tried |= Row{1} << v;
      order_[t] = v;
      descend(t + 1, next, unlabeled & ~(Row{1} << v));
    }
    order_[t] = -1;
  }

  const Graph& g_;
  int n_;
  int total_bits_ = static_cast<int>(choose2(n_));
  std::array<int, kMaxCanonicalOrder> order_{};
  std::array<int, kMaxCanonicalOrder> best_order_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

void check_bound(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw UnsupportedError("canonical form supports at most " +
                           std::to_string(kMaxCanonicalOrder) +
                           " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  check_bound(g);
  MinLabelSearch search(g);
  search.run();
  return {g.order(), search.best_bits()};
}

std::vector<int> canonical_labeling(const Graph& g) {
  check_bound(g);
  MinLabelSearch search(g);
  search.run();
  // best_order()[label] = vertex; invert to vertex -> label.
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int label = 0; label < g.order(); ++label) {
    perm[static_cast<std::size_t>(search.best_order()[label])] = label;
  }
  return perm;
}

CanonicalForm pack_labeled(const Graph& g) {
  check_bound(g);
  const int total = static_cast<int>(choose2(g.order()));
  std::uint64_t bits = 0;
  int pos = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if (g.has_edge(i, j)) bits |= std::uint64_t{1} << (total - 1 - pos);
    }
  }
  return {g.order(), bits};
}

Graph unpack(const CanonicalForm& form) {
  Graph g(form.n);
  const int total = static_cast<int>(choose2(form.n));
  int pos = 0;
  for (int j = 1; j < form.n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if ((form.bits >> (total - 1 - pos)) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace trimin
