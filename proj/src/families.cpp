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

#include "trimin/families.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "trimin/enumerate.hpp"
#include "trimin/error.hpp"
#include "trimin/extremal.hpp"
#include "trimin/turan.hpp"

namespace trimin {

namespace {

Row bit(int v) { return Row{1} << v; }

std::vector<Row> complement_components(const Graph& g) {
  const Row all = g.vertex_mask();
  Row seen = 0;
  std::vector<Row> comps;
  for (int s = 0; s < g.order(); ++s) {
    if (seen & bit(s)) continue;
    Row comp = bit(s);
    Row frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Row fresh = (~g.row(v) & all & ~bit(v)) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

// Largest part first; ties broken by smallest vertex so output is stable.
void sort_parts(std::vector<Row>& parts) {
  std::stable_sort(parts.begin(), parts.end(), [](Row a, Row b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return std::countr_zero(a) < std::countr_zero(b);
  });
}

Partition to_partition(const std::vector<Row>& parts) {
  Partition out;
  out.reserve(parts.size());
  for (const Row r : parts) out.push_back(bits_to_vertices(r));
  return out;
}

std::vector<std::int64_t> part_sizes(const Partition& p) {
  std::vector<std::int64_t> s;
  for (const auto& part : p) s.push_back(static_cast<std::int64_t>(part.size()));
  return s;
}

Row mask_of(const std::vector<int>& vs) {
  Row m = 0;
  for (const int v : vs) m |= bit(v);
  return m;
}

bool edgeless_on(const Graph& g, Row mask) {
  for (Row m = mask; m; m &= m - 1) {
    if (g.row(std::countr_zero(m)) & mask) return false;
  }
  return true;
}

// Sizes of the A-parts that a starred H1 witness may have.
std::vector<std::vector<std::int64_t>> h1_star_a_sizes(const ExtremalProfile& p) {
  std::vector<std::vector<std::int64_t>> out;
  const int k = p.k;
  for (int i = 0; i + 1 < k; ++i) {
    if (p.m_star > 0 && i != k - 2) continue;
    std::vector<std::int64_t> rest;
    for (int j = 0; j + 1 < k; ++j) {
      if (j != i) rest.push_back(p.a_star[static_cast<std::size_t>(j)]);
    }
    if (std::find(out.begin(), out.end(), rest) == out.end()) out.push_back(rest);
  }
  return out;
}

Membership h1_star_member(const Graph& g, const ExtremalProfile& p) {
  const auto allowed = h1_star_a_sizes(p);
  Membership m;
  for_each_h1_partition(g, p.k, [&](const Partition& w) {
    std::vector<std::int64_t> a(w.size() - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      a[i] = static_cast<std::int64_t>(w[i].size());
    }
    if (std::find(allowed.begin(), allowed.end(), a) == allowed.end()) {
      return false;
    }
    m.member = true;
    m.witness = w;
    return true;
  });
  return m;
}

Membership h0_star_extra_member(const Graph& g, const ExtremalProfile& p) {
  Membership m;
  if (p.a_star.back() != 1) return m;
  const int k = p.k;
  std::vector<std::int64_t> want(p.a_star.begin(), p.a_star.end() - 2);
  const std::int64_t big = p.a_star[static_cast<std::size_t>(k - 2)] + 1;
  want.push_back(big);
  std::sort(want.rbegin(), want.rend());
  for_each_h0_partition(g, k, [&](const Partition& w) {
    if (part_sizes(w) != want) return false;
    for (const auto& part : w) {
      if (static_cast<std::int64_t>(part.size()) != big &&
          !edgeless_on(g, mask_of(part))) {
        return false;
      }
    }
    m.member = true;
    m.witness = w;
    return true;
  });
  return m;
}

struct H2StarShape {
  std::vector<std::int64_t> sizes;
  std::int64_t removed = 0;
};

std::vector<H2StarShape> h2_star_shapes(const ExtremalProfile& p) {
  std::vector<H2StarShape> out{{p.a_star, p.m_star}};
  const auto& a = p.a_star;
  const int k = p.k;
  if (p.m_star == 0 && a.front() >= a.back() + 2) {
    H2StarShape alt;
    alt.sizes.assign(a.begin() + 1, a.begin() + (k - 1));
    alt.sizes.push_back(a.front() - 1);
    alt.sizes.push_back(a.back() + 1);
    alt.removed = a.front() - a.back() - 1;
    out.push_back(alt);
  }
  return out;
}

Membership h2_star_shape_member(const Graph& g, const ExtremalProfile& p) {
  Membership m;
  const auto shapes = h2_star_shapes(p);
  const int k = p.k;
  for_each_h2_partition(g, k, [&](const Partition& w) {
    const auto sizes = part_sizes(w);
    const bool shape_ok =
        std::any_of(shapes.begin(), shapes.end(),
                    [&](const H2StarShape& s) { return s.sizes == sizes; });
    if (!shape_ok) return false;
    // Each missing edge must go to a part as large as A_{k-1}.
    const std::size_t last = static_cast<std::size_t>(k - 1);
    for (std::size_t i = 0; i < last; ++i) {
      if (sizes[i] == sizes[last - 1]) continue;
      const Row part = mask_of(w[i]);
      for (const int x : w[last]) {
        if ((g.row(x) & part) != part) return false;
      }
    }
    m.member = true;
    m.witness = w;
    return true;
  });
  return m;
}

Membership h_star_member(const Graph& g, const ExtremalProfile& p) {
  Membership m;
  const Graph h = build_h_star(p.n, p.e);
  if (canonical_form(g) != canonical_form(h)) return m;
  const auto lab_g = canonical_labeling(g);
  const auto lab_h = canonical_labeling(h);
  std::vector<int> inv_g(lab_g.size());
  for (std::size_t x = 0; x < lab_g.size(); ++x) {
    inv_g[static_cast<std::size_t>(lab_g[x])] = static_cast<int>(x);
  }
  int v = 0;
  for (const std::int64_t size : p.a_star) {
    std::vector<int> part;
    for (std::int64_t j = 0; j < size; ++j, ++v) {
      part.push_back(inv_g[static_cast<std::size_t>(lab_h[static_cast<std::size_t>(v)])]);
    }
    std::sort(part.begin(), part.end());
    m.witness.push_back(part);
  }
  m.member = true;
  return m;
}

void check_inputs(int n, std::int64_t e, FamilyId f, int bound,
                  const char* what) {
  if (n > bound) {
    throw UnsupportedError(std::string(what) + " for family " +
                           std::string(to_string(f)) + " supports n <= " +
                           std::to_string(bound) + ", got " + std::to_string(n));
  }
  if (e < 1) throw DomainError("families are defined for e >= 1");
}

void insert_form(std::set<CanonicalForm>& out, const Graph& g,
                 std::int64_t e) {
  if (g.edge_count() != e) {
    throw std::logic_error("family construction produced " +
                           std::to_string(g.edge_count()) + " edges, expected " +
                           std::to_string(e));
  }
  out.insert(canonical_form(g));
}

std::vector<Graph> triangle_free_classes(int order, std::int64_t edges) {
  if (edges < 0 || edges > choose2(order)) return {};
  EnumerationOptions opts;
  opts.keep = [](const Graph& h) { return is_triangle_free(h); };
  return enumerate_graphs(order, edges, opts);
}

void place(Graph& g, const Graph& inner, int offset) {
  for (const Edge& ed : inner.edges()) g.add_edge(offset + ed.u, offset + ed.v);
}

std::set<CanonicalForm> build_h1_star(const ExtremalProfile& p) {
  std::set<CanonicalForm> out;
  const int k = p.k;
  for (int i = 0; i + 1 < k; ++i) {
    if (p.m_star > 0 && i != k - 2) continue;
    std::vector<std::int64_t> sizes;
    for (int j = 0; j + 1 < k; ++j) {
      if (j != i) sizes.push_back(p.a_star[static_cast<std::size_t>(j)]);
    }
    const std::int64_t ai = p.a_star[static_cast<std::size_t>(i)];
    const std::int64_t ak = p.a_star.back();
    const std::int64_t b = ai + ak;
    sizes.push_back(b);
    const Graph base = complete_multipartite(sizes);
    const int offset = static_cast<int>(p.n - b);
    for (const Graph& f : triangle_free_classes(static_cast<int>(b),
                                                ai * ak - p.m_star)) {
      Graph g = base;
      place(g, f, offset);
      insert_form(out, g, p.e);
    }
  }
  return out;
}

std::set<CanonicalForm> build_h0_star_extra(const ExtremalProfile& p) {
  std::set<CanonicalForm> out;
  if (p.a_star.back() != 1) return out;
  const int k = p.k;
  std::vector<std::int64_t> sizes(p.a_star.begin(), p.a_star.end() - 2);
  const std::int64_t big = p.a_star[static_cast<std::size_t>(k - 2)] + 1;
  sizes.push_back(big);
  std::vector<int> offsets;
  std::vector<int> big_parts;
  int off = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    offsets.push_back(off);
    if (sizes[j] == big) big_parts.push_back(off);
    off += static_cast<int>(sizes[j]);
  }
  const std::int64_t target = p.a_star[static_cast<std::size_t>(k - 2)] - p.m_star;
  std::vector<Graph> fillings;  // every triangle-free class on `big` vertices
  for (std::int64_t j = 0; j <= target; ++j) {
    for (Graph& h : triangle_free_classes(static_cast<int>(big), j)) {
      fillings.push_back(std::move(h));
    }
  }
  const Graph base = complete_multipartite(sizes);
  std::vector<std::size_t> pick(big_parts.size());
  // Parts of equal size are interchangeable, so choices are nondecreasing.
  auto rec = [&](auto&& self, std::size_t slot, std::size_t from,
                 std::int64_t left) -> void {
    if (slot == big_parts.size()) {
      if (left != 0) return;
      Graph g = base;
      for (std::size_t s = 0; s < pick.size(); ++s) {
        place(g, fillings[pick[s]], big_parts[s]);
      }
      insert_form(out, g, p.e);
      return;
    }
    for (std::size_t c = from; c < fillings.size(); ++c) {
      const std::int64_t used = fillings[c].edge_count();
      if (used > left) continue;
      pick[slot] = c;
      self(self, slot + 1, c, left - used);
    }
  };
  rec(rec, 0, 0, target);
  return out;
}

std::set<CanonicalForm> build_h2_star_shapes(const ExtremalProfile& p) {
  std::set<CanonicalForm> out;
  const int k = p.k;
  for (const H2StarShape& shape : h2_star_shapes(p)) {
    const auto& sz = shape.sizes;
    std::vector<int> offsets;
    int off = 0;
    for (const std::int64_t s : sz) {
      offsets.push_back(off);
      off += static_cast<int>(s);
    }
    struct Option {
      int part;
      Row local;  // subset of the part, bit j = j-th vertex of the part
    };
    std::vector<Option> options;
    for (int i = 0; i + 1 < k; ++i) {
      if (sz[static_cast<std::size_t>(i)] != sz[static_cast<std::size_t>(k - 2)]) {
        continue;
      }
      const Row full = (Row{1} << sz[static_cast<std::size_t>(i)]) - 1;
      for (Row s = 1; s <= full; ++s) {
        if (std::popcount(s) <= shape.removed) options.push_back({i, s});
      }
    }
    const Graph base = complete_multipartite(sz);
    const int last_size = static_cast<int>(sz.back());
    const int last_off = offsets.back();
    std::vector<int> choice(static_cast<std::size_t>(last_size), -1);
    // Vertices of A_k are interchangeable: choices are nondecreasing, with
    // -1 meaning "complete to every part".
    auto rec = [&](auto&& self, int x, int from, std::int64_t left) -> void {
      if (x == last_size) {
        if (left != 0) return;
        Graph g = base;
        for (int y = 0; y < last_size; ++y) {
          const int c = choice[static_cast<std::size_t>(y)];
          if (c < 0) continue;
          const Option& o = options[static_cast<std::size_t>(c)];
          for (Row s = o.local; s; s &= s - 1) {
            g.remove_edge(last_off + y,
                          offsets[static_cast<std::size_t>(o.part)] + std::countr_zero(s));
          }
        }
        insert_form(out, g, p.e);
        return;
      }
      if (from < 0) {
        choice[static_cast<std::size_t>(x)] = -1;
        self(self, x + 1, -1, left);
      }
      for (int c = std::max(from, 0); c < static_cast<int>(options.size()); ++c) {
        const std::int64_t cost = std::popcount(options[static_cast<std::size_t>(c)].local);
        if (cost > left) continue;
        choice[static_cast<std::size_t>(x)] = c;
        self(self, x + 1, c, left - cost);
      }
    };
    rec(rec, 0, -1, shape.removed);
  }
  return out;
}

}  // namespace

std::string_view to_string(FamilyId f) {
  switch (f) {
    case FamilyId::kHstar:
      return "hstar";
    case FamilyId::kH0star:
      return "h0star";
    case FamilyId::kH1star:
      return "h1star";
    case FamilyId::kH2star:
      return "h2star";
    case FamilyId::kH0:
      return "h0";
    case FamilyId::kH1:
      return "h1";
    case FamilyId::kH2:
      return "h2";
  }
  return "unknown";
}

FamilyId parse_family(std::string_view name) {
  for (const FamilyId f :
       {FamilyId::kHstar, FamilyId::kH0star, FamilyId::kH1star,
        FamilyId::kH2star, FamilyId::kH0, FamilyId::kH1, FamilyId::kH2}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown family '" + std::string(name) +
                    "' (expected hstar, h0star, h1star, h2star, h0, h1, h2)");
}

bool induces_triangle_free(const Graph& g, Row mask) {
  for (Row m = mask; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    for (Row nb = g.row(v) & mask & ~((bit(v) << 1) - 1); nb; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      if (g.row(u) & g.row(v) & mask) return false;
    }
  }
  return true;
}

void for_each_h0_partition(const Graph& g, int k, const PartitionVisitor& visit) {
  const std::size_t groups = static_cast<std::size_t>(k - 1);
  if (k < 2) return;
  const std::vector<Row> comps = complement_components(g);
  std::vector<Row> acc;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t ci) -> void {
    if (stop || acc.size() + (comps.size() - ci) < groups) return;
    if (ci == comps.size()) {
      std::vector<Row> parts = acc;
      sort_parts(parts);
      stop = visit(to_partition(parts));
      return;
    }
    for (std::size_t j = 0; j < acc.size() && !stop; ++j) {
      const Row merged = acc[j] | comps[ci];
      if (!induces_triangle_free(g, merged)) continue;
      const Row old = acc[j];
      acc[j] = merged;
      self(self, ci + 1);
      acc[j] = old;
    }
    if (!stop && acc.size() < groups && induces_triangle_free(g, comps[ci])) {
      acc.push_back(comps[ci]);
      self(self, ci + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
}

void for_each_h1_partition(const Graph& g, int k, const PartitionVisitor& visit) {
  if (k < 2) return;
  const std::size_t want = static_cast<std::size_t>(k - 2);
  // An A-part is independent and complete to everything else, which makes it
  // exactly a complement component that is edgeless in g.
  std::vector<Row> candidates;
  for (const Row c : complement_components(g)) {
    if (edgeless_on(g, c)) candidates.push_back(c);
  }
  if (candidates.size() < want) return;
  std::vector<Row> chosen;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (stop) return;
    if (chosen.size() == want) {
      Row b = g.vertex_mask();
      for (const Row a : chosen) b &= ~a;
      if (b == 0 || !induces_triangle_free(g, b)) return;
      std::vector<Row> parts = chosen;
      sort_parts(parts);
      parts.push_back(b);
      stop = visit(to_partition(parts));
      return;
    }
    for (std::size_t i = from; i < candidates.size() && !stop; ++i) {
      if (candidates.size() - i < want - chosen.size()) break;
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

void for_each_h2_partition(const Graph& g, int k, const PartitionVisitor& visit) {
  if (k < 2) return;
  const int n = g.order();
  const int last = k - 1;
  std::vector<Row> parts(static_cast<std::size_t>(k), 0);
  std::vector<int> miss(static_cast<std::size_t>(n), -1);  // for x in A_k
  int opened = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int v) -> void {
    if (stop || opened + (n - v) < last) return;
    if (v == n) {
      std::vector<Row> head(parts.begin(), parts.begin() + last);
      sort_parts(head);
      if (std::popcount(parts[static_cast<std::size_t>(last)]) >
          std::popcount(head.back())) {
        return;
      }
      head.push_back(parts[static_cast<std::size_t>(last)]);
      stop = visit(to_partition(head));
      return;
    }
    const Row nv = g.row(v);
    // Head parts 0..limit (existing ones plus one fresh), then A_k.
    const int limit = std::min(opened, last - 1);
    for (int p = 0; p <= limit + 1 && !stop; ++p) {
      const int part = p <= limit ? p : last;
      if (parts[static_cast<std::size_t>(part)] & nv) continue;
      if (part < last) {
        bool ok = true;
        for (int q = 0; q < last && ok; ++q) {
          const Row pq = parts[static_cast<std::size_t>(q)];
          if (q != part && (pq & nv) != pq) ok = false;
        }
        if (!ok) continue;
        std::vector<int> touched;
        for (Row xs = parts[static_cast<std::size_t>(last)] & ~nv; xs; xs &= xs - 1) {
          const int x = std::countr_zero(xs);
          int& mx = miss[static_cast<std::size_t>(x)];
          if (mx == -1) {
            mx = part;
            touched.push_back(x);
          } else if (mx != part) {
            ok = false;
            break;
          }
        }
        if (ok) {
          const bool fresh = parts[static_cast<std::size_t>(part)] == 0;
          parts[static_cast<std::size_t>(part)] |= bit(v);
          if (fresh) ++opened;
          self(self, v + 1);
          if (fresh) --opened;
          parts[static_cast<std::size_t>(part)] &= ~bit(v);
        }
        for (const int x : touched) miss[static_cast<std::size_t>(x)] = -1;
      } else {
        int missed = -1;
        bool ok = true;
        for (int q = 0; q < last && ok; ++q) {
          const Row pq = parts[static_cast<std::size_t>(q)];
          if ((pq & nv) != pq) {
            if (missed != -1) ok = false;
            missed = q;
          }
        }
        if (!ok) continue;
        miss[static_cast<std::size_t>(v)] = missed;
        parts[static_cast<std::size_t>(last)] |= bit(v);
        self(self, v + 1);
        parts[static_cast<std::size_t>(last)] &= ~bit(v);
        miss[static_cast<std::size_t>(v)] = -1;
      }
    }
  };
  rec(rec, 0);
}

bool is_h0_partition(const Graph& g, const Partition& parts, int k) {
  if (k < 2 || parts.size() != static_cast<std::size_t>(k - 1)) return false;
  Row seen = 0;
  std::vector<Row> masks;
  for (const auto& part : parts) {
    if (part.empty()) return false;
    Row m = 0;
    for (const int v : part) {
      if (v < 0 || v >= g.order() || ((seen | m) & bit(v))) return false;
      m |= bit(v);
    }
    seen |= m;
    if (!induces_triangle_free(g, m)) return false;
    masks.push_back(m);
  }
  if (seen != g.vertex_mask()) return false;
  for (const Row m : masks) {
    for (Row vs = m; vs; vs &= vs - 1) {
      const int v = std::countr_zero(vs);
      if ((g.row(v) | m) != g.vertex_mask()) return false;
    }
  }
  return true;
}

bool is_k_colorable(const Graph& g, int k) {
  if (k < 1) return g.order() == 0;
  const int n = g.order();
  std::vector<Row> classes(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return true;
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      if (classes[static_cast<std::size_t>(c)] & g.row(v)) continue;
      classes[static_cast<std::size_t>(c)] |= bit(v);
      const bool ok = self(self, v + 1, std::max(used, c + 1));
      classes[static_cast<std::size_t>(c)] &= ~bit(v);
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

Membership family_membership(const Graph& g, FamilyId family, std::int64_t e) {
  const int n = g.order();
  check_inputs(n, e, family, kMaxMembershipOrder, "membership search");
  if (g.edge_count() != e) {
    throw DomainError("graph has " + std::to_string(g.edge_count()) +
                      " edges but e = " + std::to_string(e));
  }
  const ExtremalProfile p = extremal_profile(n, e);
  const int k = p.k;
  Membership m;
  auto first = [&m](const Partition& w) {
    m.member = true;
    m.witness = w;
    return true;
  };
  switch (family) {
    case FamilyId::kH0:
      for_each_h0_partition(g, k, first);
      return m;
    case FamilyId::kH1:
      for_each_h1_partition(g, k, first);
      return m;
    case FamilyId::kH2:
      for_each_h2_partition(g, k, first);
      return m;
    case FamilyId::kH1star:
      return h1_star_member(g, p);
    case FamilyId::kH0star:
      m = h1_star_member(g, p);
      if (m.member) return m;
      return h0_star_extra_member(g, p);
    case FamilyId::kH2star:
      m = h1_star_member(g, p);
      if (m.member && is_k_colorable(g, k)) return m;
      return h2_star_shape_member(g, p);
    case FamilyId::kHstar:
      return h_star_member(g, p);
  }
  return m;
}

std::vector<CanonicalForm> enumerate_family(int n, std::int64_t e,
                                            FamilyId family) {
  check_inputs(n, e, family, kMaxFamilyEnumerationOrder, "enumeration");
  const ExtremalProfile p = extremal_profile(n, e);
  std::set<CanonicalForm> out;
  switch (family) {
    case FamilyId::kHstar:
      out.insert(canonical_form(build_h_star(n, e)));
      break;
    case FamilyId::kH1star:
      out = build_h1_star(p);
      break;
    case FamilyId::kH0star:
      out = build_h1_star(p);
      out.merge(build_h0_star_extra(p));
      break;
    case FamilyId::kH2star:
      for (const CanonicalForm& f : build_h1_star(p)) {
        if (is_k_colorable(unpack(f), p.k)) out.insert(f);
      }
      out.merge(build_h2_star_shapes(p));
      break;
    case FamilyId::kH0:
    case FamilyId::kH1:
    case FamilyId::kH2:
      for (const Graph& g : enumerate_graphs(n, e)) {
        if (family_membership(g, family, e).member) {
          out.insert(canonical_form(g));
        }
      }
      break;
  }
  return {out.begin(), out.end()};
}

}  // namespace trimin
