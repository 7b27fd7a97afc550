#pragma once

// Dominating-set predicate and exhaustive enumeration. The enumeration order
// (ascending mask value) is the canonical vertex order of every
// reconfiguration graph built downstream, so certificates stay reproducible.

#include <algorithm>

#include "tars/graph.hpp"

namespace tars {

/// True iff every vertex outside S has a neighbor in S, i.e. the closed
/// neighborhoods of S cover V(G).
inline bool is_dominating(const Graph& g, VertexSet s) {
  VertexSet covered = s;
  VertexSet rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    covered |= g.adj[v];
  }
  return covered == full_set(g.order);
}

/// All dominating sets of the seed, sorted ascending by mask.
struct DominatingFamily {
  Graph seed;
  std::vector<VertexSet> sets;

  int size() const { return static_cast<int>(sets.size()); }

  /// Rank of a mask in the family, or -1.
  int index_of(VertexSet s) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    if (it == sets.end() || *it != s) return -1;
    return static_cast<int>(it - sets.begin());
  }

  bool contains(VertexSet s) const { return index_of(s) >= 0; }
};

inline DominatingFamily enumerate_dominating_sets(const Graph& g) {
  if (g.order > kMaxOrder) throw std::invalid_argument("order exceeds enumeration cap");
  DominatingFamily fam;
  fam.seed = g;
  std::vector<VertexSet> closed(g.order);
  for (int v = 0; v < g.order; ++v) closed[v] = g.closed_neighborhood(v);
  VertexSet all = full_set(g.order);
  std::uint64_t limit = 1ull << g.order;
  for (std::uint64_t m = 0; m < limit; ++m) {
    VertexSet s = static_cast<VertexSet>(m);
    VertexSet covered = 0;
    VertexSet rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= closed[v];
    }
    if (covered == all) fam.sets.push_back(s);
  }
  return fam;
}

inline int domination_number(const Graph& g) {
  if (g.order < 1) throw std::invalid_argument("domination number needs order >= 1");
  DominatingFamily fam = enumerate_dominating_sets(g);
  int best = g.order;
  for (VertexSet s : fam.sets) best = std::min(best, popcount(s));
  return best;
}

}  // namespace tars
