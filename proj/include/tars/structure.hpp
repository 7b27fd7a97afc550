#pragma once

// Forest reduction (Operations A and B), join decomposition, and threshold
// creation sequences. These drive the strategy dispatch in constructions.

#include <optional>
#include <utility>

#include "tars/graph.hpp"

namespace tars {

enum class OpKind { OpA, OpB };

/// One reduction step, with vertex ids in the graph it is applied to.
/// OpA: N(u) = {x, v}, N(v) = {u}; removes {u, v}.
/// OpB: N(u) = N(v) = {x};        removes {v}.
struct ReductionStep {
  OpKind kind;
  int u, v, x;
};

struct ReductionSequence {
  std::vector<ReductionStep> steps;
  Graph base;
};

inline void check_step_precondition(const Graph& g, const ReductionStep& s) {
  g.check_vertex(s.u);
  g.check_vertex(s.v);
  g.check_vertex(s.x);
  if (s.kind == OpKind::OpA) {
    if (g.adj[s.u] != ((1u << s.x) | (1u << s.v)) || g.adj[s.v] != (1u << s.u))
      throw std::logic_error("operation A precondition violated");
  } else {
    if (g.adj[s.u] != (1u << s.x) || g.adj[s.v] != (1u << s.x))
      throw std::logic_error("operation B precondition violated");
  }
}

/// Applies a step, compacting surviving ids in order. If old_ids is non-null
/// it receives, per new id, the id in the pre-step graph.
inline Graph apply_reduction_step(const Graph& g, const ReductionStep& s,
                                  std::vector<int>* old_ids = nullptr) {
  check_step_precondition(g, s);
  VertexSet removed = (s.kind == OpKind::OpA) ? ((1u << s.u) | (1u << s.v)) : (1u << s.v);
  return induced_subgraph(g, full_set(g.order) & ~removed, old_ids);
}

/// Reduces a forest until every component is P1 or P2. Preference order per
/// step: the lowest-id support vertex with two leaves (OpB), otherwise the
/// lowest-id leaf whose neighbor has degree 2 (OpA).
inline ReductionSequence find_reduction_sequence(const Graph& f) {
  if (!is_forest(f)) throw std::invalid_argument("input contains a cycle");
  ReductionSequence seq;
  Graph g = f;
  for (;;) {
    std::optional<ReductionStep> step;
    for (int x = 0; x < g.order && !step; ++x) {
      // two leaves hanging on x
      int first = -1, second = -1;
      VertexSet nb = g.adj[x];
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (g.degree(w) == 1) {
          if (first < 0) first = w;
          else { second = w; break; }
        }
      }
      if (second >= 0) step = ReductionStep{OpKind::OpB, first, second, x};
    }
    if (!step) {
      for (int v = 0; v < g.order && !step; ++v) {
        if (g.degree(v) != 1) continue;
        int u = std::countr_zero(g.adj[v]);
        if (g.degree(u) != 2) continue;
        int x = std::countr_zero(g.adj[u] & ~(1u << v));
        step = ReductionStep{OpKind::OpA, u, v, x};
      }
    }
    if (!step) break;
    seq.steps.push_back(*step);
    g = apply_reduction_step(g, *step);
  }
  for (VertexSet comp : components(g))
    if (popcount(comp) > 2) throw std::logic_error("reduction stalled above P2");
  seq.base = g;
  return seq;
}

/// Replays steps from the given forest; returns the residual graph.
inline Graph replay_reduction(const Graph& f, const std::vector<ReductionStep>& steps) {
  Graph g = f;
  for (const auto& s : steps) g = apply_reduction_step(g, s);
  return g;
}

// ---------------------------------------------------------------------------
// Join decomposition

/// Result of splitting G = G1 v G2 along a disconnected complement. verts1
/// and verts2 hold the original ids of the compacted factors.
struct JoinSplit {
  Graph g1, g2;
  std::vector<int> verts1, verts2;
};

/// G is a join iff its complement is disconnected. G1 is induced on the
/// complement component containing vertex 0, G2 on everything else.
inline std::optional<JoinSplit> join_decompose(const Graph& g) {
  if (g.order < 2) return std::nullopt;
  auto comps = components(complement(g));
  if (comps.size() < 2) return std::nullopt;
  JoinSplit split;
  VertexSet side1 = comps[0];  // component of vertex 0
  VertexSet side2 = full_set(g.order) & ~side1;
  split.g1 = induced_subgraph(g, side1, &split.verts1);
  split.g2 = induced_subgraph(g, side2, &split.verts2);
  return split;
}

// ---------------------------------------------------------------------------
// Threshold recognition

enum class ThresholdTag { Start, Isolated, Universal };

struct ThresholdStep {
  ThresholdTag tag;
  int vertex;  // original id in G
};

/// Creation sequence of a threshold graph: vertices in the order they must be
/// added, each tagged isolated or universal (the first is the lone start
/// vertex). Empty optional if G is not threshold. Recognition peels the
/// lowest-id isolated vertex, else the lowest-id universal vertex.
inline std::optional<std::vector<ThresholdStep>> threshold_sequence(const Graph& g) {
  if (g.order == 0) return std::vector<ThresholdStep>{};
  VertexSet alive = full_set(g.order);
  std::vector<ThresholdStep> removal;
  while (popcount(alive) > 1) {
    int pick = -1;
    ThresholdTag tag = ThresholdTag::Isolated;
    int remaining = popcount(alive);
    VertexSet a = alive;
    while (a) {
      int v = std::countr_zero(a);
      a &= a - 1;
      if ((g.adj[v] & alive) == 0) { pick = v; tag = ThresholdTag::Isolated; break; }
    }
    if (pick < 0) {
      a = alive;
      while (a) {
        int v = std::countr_zero(a);
        a &= a - 1;
        if (popcount(g.adj[v] & alive) == remaining - 1) {
          pick = v;
          tag = ThresholdTag::Universal;
          break;
        }
      }
    }
    if (pick < 0) return std::nullopt;
    removal.push_back({tag, pick});
    alive &= ~(1u << pick);
  }
  std::vector<ThresholdStep> creation;
  creation.push_back({ThresholdTag::Start, std::countr_zero(alive)});
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) creation.push_back(*it);
  return creation;
}

/// Rebuilds the graph described by a creation sequence using natural ids
/// 0..k-1 in creation order (i.e. step k adds vertex k).
inline Graph replay_threshold(const std::vector<ThresholdStep>& steps) {
  if (steps.empty()) return Graph(0);
  Graph g(1);
  for (size_t k = 1; k < steps.size(); ++k) {
    if (steps[k].tag == ThresholdTag::Universal)
      g = graph_join(g, Graph(1));
    else
      g = graph_union(g, Graph(1));
  }
  return g;
}

}  // namespace tars
