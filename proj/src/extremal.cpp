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

#include "trimin/extremal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "trimin/error.hpp"
#include "trimin/families.hpp"
#include "trimin/turan.hpp"

namespace trimin {

std::int64_t multipartite_edges(std::span<const std::int64_t> sizes) {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  for (const std::int64_t a : sizes) {
    e2 += e1 * a;
    e1 += a;
  }
  return e2;
}

std::int64_t multipartite_triangles(std::span<const std::int64_t> sizes) {
  // Elementary symmetric polynomials, accumulated part by part.
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::int64_t e3 = 0;
  for (const std::int64_t a : sizes) {
    e3 += e2 * a;
    e2 += e1 * a;
    e1 += a;
  }
  return e3;
}

ExtremalProfile extremal_profile(std::int64_t n, std::int64_t e) {
  const int k = k_index(n, e);  // validates n and e
  ExtremalProfile p;
  p.n = n;
  p.e = e;
  p.k = k;
  if (k == 1) {
    p.a_star = {n};
    return p;
  }
  // The scan stops by floor(n/k) because a = floor(n/k) reaches t_k(n) >= e.
  std::int64_t last = 1;
  while (last * (n - last) + turan_edges(n - last, k - 1) < e) ++last;
  const TuranSpec rest = turan(n - last, k - 1);
  p.a_star = rest.sizes;
  p.a_star.push_back(last);
  p.m_star = multipartite_edges(p.a_star) - e;
  std::int64_t leading = 0;
  for (int i = 0; i + 2 < k; ++i) leading += p.a_star[static_cast<std::size_t>(i)];
  p.h_star = multipartite_triangles(p.a_star) - p.m_star * leading;
  return p;
}

Graph complete_multipartite(std::span<const std::int64_t> sizes) {
  std::int64_t n = 0;
  for (const std::int64_t a : sizes) n += a;
  if (n > Graph::kMaxOrder) {
    throw UnsupportedError("graph construction supports at most 64 vertices");
  }
  Graph g(static_cast<int>(n));
  std::vector<int> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::int64_t j = 0; j < sizes[i]; ++j) {
      part_of.push_back(static_cast<int>(i));
    }
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (part_of[static_cast<std::size_t>(u)] !=
          part_of[static_cast<std::size_t>(v)]) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph build_h_star(std::int64_t n, std::int64_t e) {
  const ExtremalProfile p = extremal_profile(n, e);
  Graph g = complete_multipartite(p.a_star);
  if (p.m_star > 0) {
    std::int64_t start_prev = 0;
    for (int i = 0; i + 2 < p.k; ++i) {
      start_prev += p.a_star[static_cast<std::size_t>(i)];
    }
    const std::int64_t centre =
        start_prev + p.a_star[static_cast<std::size_t>(p.k - 2)];
    for (std::int64_t j = 0; j < p.m_star; ++j) {
      g.remove_edge(static_cast<int>(centre), static_cast<int>(start_prev + j));
    }
  }
  return g;
}

std::string_view to_string(DeltaCase c) {
  switch (c) {
    case DeltaCase::kMissingEdgeRestored:
      return "missing-edge-restored";
    case DeltaCase::kLastPartGrows:
      return "last-part-grows";
    case DeltaCase::kNewPart:
      return "new-part";
  }
  return "unknown";
}

HStarDelta h_star_delta(std::int64_t n, std::int64_t e) {
  if (e >= choose2(n)) {
    throw DomainError("h_star_delta needs e < C(n,2)");
  }
  const ExtremalProfile here = extremal_profile(n, e);
  const ExtremalProfile next = extremal_profile(n, e + 1);
  HStarDelta d;
  d.delta = next.h_star - here.h_star;
  if (here.m_star > 0) {
    d.kind = DeltaCase::kMissingEdgeRestored;
  } else if (here.a_star.front() >= here.a_star.back() + 2) {
    d.kind = DeltaCase::kLastPartGrows;
  } else {
    d.kind = DeltaCase::kNewPart;
  }
  return d;
}

SlopeCheck check_slopes(std::int64_t n, std::int64_t e) {
  SlopeCheck r;
  const int k = k_index(n, e);
  if (k < 2 || e < turan_edges(n, k - 1) + k || e > turan_edges(n, k) - 1) {
    return r;
  }
  r.in_range = true;
  const ExtremalProfile p = extremal_profile(n, e);
  const std::int64_t delta = h_star_delta(n, e).delta;
  if (k == 2) {
    r.delta_ok = delta >= -k && delta <= k;
  } else {
    // (k-2)cn >= delta - k and (k-2)cn <= delta + k.
    r.delta_ok = c_compare(n, e, delta - k, k - 2) != std::strong_ordering::less &&
                 c_compare(n, e, delta + k, k - 2) != std::strong_ordering::greater;
  }
  r.parts_ok = true;
  for (int i = 0; i + 1 < k; ++i) {
    const std::int64_t a = p.a_star[static_cast<std::size_t>(i)];
    if (c_compare(n, e, a - 2, 1) == std::strong_ordering::less ||
        c_compare(n, e, a + 2, 1) == std::strong_ordering::greater) {
      r.parts_ok = false;
    }
  }
  return r;
}

std::int64_t h_of(std::int64_t n, std::int64_t e, bool audit) {
  const std::int64_t value = extremal_profile(n, e).h_star;
  if (!audit) return value;
  if (n > 7) throw UnsupportedError("h_of audit path supports n <= 7");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const FamilyId f : {FamilyId::kH1, FamilyId::kH2}) {
    for (const CanonicalForm& form :
         enumerate_family(static_cast<int>(n), e, f)) {
      best = std::min(best, count_triangles(unpack(form)));
    }
  }
  if (best != value) {
    throw std::logic_error("h_of audit disagrees at (" + std::to_string(n) +
                           "," + std::to_string(e) + "): h* = " +
                           std::to_string(value) + ", family minimum = " +
                           std::to_string(best));
  }
  return value;
}

}  // namespace trimin
