#pragma once

// The reconfiguration graph over dominating sets of a seed graph. Vertices
// are ranks in the canonical ascending family; both edge layers (token
// addition/removal and token sliding) are always materialized and the mode
// is a view over them.

#include <algorithm>
#include <cstdint>

#include "tars/domination.hpp"
#include "tars/graph.hpp"

namespace tars {

enum class EdgeKind { TAR, TS };

enum class Mode { TARS, TAR, TS };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::TARS: return "TARS";
    case Mode::TAR: return "TAR";
    case Mode::TS: return "TS";
  }
  return "?";
}

/// Move-shape predicate for token addition/removal: the sets differ by
/// exactly one vertex. Both sets must separately dominate for an edge to
/// exist; that is the family's responsibility, not this predicate's.
inline bool tar_adjacent(VertexSet x, VertexSet y) {
  if (x == y) throw std::invalid_argument("tar_adjacent needs distinct sets");
  return popcount(x ^ y) == 1;
}

/// Token sliding: y = (x \ {u}) + {v} for some u in x, v outside x with
/// u ~ v in the seed graph.
inline bool ts_adjacent(const Graph& g, VertexSet x, VertexSet y) {
  if (x == y) throw std::invalid_argument("ts_adjacent needs distinct sets");
  VertexSet gone = x & ~y, added = y & ~x;
  if (popcount(gone) != 1 || popcount(added) != 1) return false;
  return g.adjacent(std::countr_zero(gone), std::countr_zero(added));
}

struct ReconGraph {
  Graph seed;
  DominatingFamily family;
  Mode mode = Mode::TARS;
  std::vector<std::vector<std::int32_t>> tar_nbrs;
  std::vector<std::vector<std::int32_t>> ts_nbrs;
  std::vector<std::vector<std::int32_t>> tars_nbrs;  // merged, sorted

  int size() const { return family.size(); }

  const std::vector<std::int32_t>& neighbors(int v) const {
    switch (mode) {
      case Mode::TAR: return tar_nbrs[v];
      case Mode::TS: return ts_nbrs[v];
      default: return tars_nbrs[v];
    }
  }

  bool adjacent(int a, int b) const {
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  EdgeKind edge_kind(int a, int b) const {
    if (std::binary_search(tar_nbrs[a].begin(), tar_nbrs[a].end(), b)) return EdgeKind::TAR;
    if (std::binary_search(ts_nbrs[a].begin(), ts_nbrs[a].end(), b)) return EdgeKind::TS;
    throw std::invalid_argument("not an edge");
  }

  long long edge_count(Mode m) const {
    long long twice = 0;
    for (int v = 0; v < size(); ++v) {
      switch (m) {
        case Mode::TAR: twice += tar_nbrs[v].size(); break;
        case Mode::TS: twice += ts_nbrs[v].size(); break;
        default: twice += tars_nbrs[v].size(); break;
      }
    }
    return twice / 2;
  }
};

inline constexpr std::int64_t kDefaultVertexCap = 1 << 20;

/// Builds both adjacency layers by neighbor generation: toggling each seed
/// vertex (TAR) and sliding each member to an adjacent non-member (TS),
/// with membership resolved by binary search in the canonical family.
inline ReconGraph build_recon_graph(const Graph& g, Mode mode = Mode::TARS,
                                    std::int64_t vertex_cap = kDefaultVertexCap) {
  if (g.order > kMaxOrder) throw std::invalid_argument("seed order exceeds cap");
  ReconGraph r;
  r.seed = g;
  r.family = enumerate_dominating_sets(g);
  r.mode = mode;
  int n = r.family.size();
  if (n > vertex_cap)
    throw std::invalid_argument("reconfiguration graph exceeds vertex cap: " + std::to_string(n));
  r.tar_nbrs.assign(n, {});
  r.ts_nbrs.assign(n, {});
  r.tars_nbrs.assign(n, {});
  for (int i = 0; i < n; ++i) {
    VertexSet s = r.family.sets[i];
    for (int v = 0; v < g.order; ++v) {
      int j = r.family.index_of(s ^ (1u << v));
      if (j >= 0) r.tar_nbrs[i].push_back(j);
    }
    VertexSet members = s;
    while (members) {
      int u = std::countr_zero(members);
      members &= members - 1;
      VertexSet targets = g.adj[u] & ~s;
      while (targets) {
        int v = std::countr_zero(targets);
        targets &= targets - 1;
        int j = r.family.index_of((s & ~(1u << u)) | (1u << v));
        if (j >= 0) r.ts_nbrs[i].push_back(j);
      }
    }
    std::sort(r.tar_nbrs[i].begin(), r.tar_nbrs[i].end());
    std::sort(r.ts_nbrs[i].begin(), r.ts_nbrs[i].end());
    std::merge(r.tar_nbrs[i].begin(), r.tar_nbrs[i].end(), r.ts_nbrs[i].begin(),
               r.ts_nbrs[i].end(), std::back_inserter(r.tars_nbrs[i]));
  }
  return r;
}

/// Connected components under the active mode's edge set.
inline int component_count(const ReconGraph& r) {
  int n = r.size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++comps;
    seen[v] = 1;
    stack.push_back(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : r.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

/// Every TAR edge flips cardinality parity, so the TAR layer is bipartite by
/// |S| mod 2. Returns true after verifying; a violation is an internal bug.
inline bool is_bipartite_by_cardinality(const ReconGraph& r) {
  for (int i = 0; i < r.size(); ++i)
    for (int j : r.tar_nbrs[i])
      if ((popcount(r.family.sets[i]) & 1) == (popcount(r.family.sets[j]) & 1))
        throw std::logic_error("TAR edge joins sets of equal cardinality parity");
  return true;
}

}  // namespace tars
