#pragma once

// Independent oracle: anchored backtracking search for cycles of prescribed
// length, Hamilton search with extra pruning, full pancyclicity checks, and
// the certificate validator every constructive path is checked against.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tars/recon.hpp"

namespace tars {

using Cycle = std::vector<int>;

enum class Provenance { Constructed, Searched };

inline const char* provenance_name(Provenance p) {
  return p == Provenance::Constructed ? "constructed" : "searched";
}

/// Per-length cycle family witnessing pancyclicity: one cycle for every
/// length 3..N. N < 3 is the trivial certificate with no cycles.
struct PancyclicCertificate {
  int vertex_count = 0;
  std::map<int, Cycle> cycles;
  std::map<int, Provenance> provenance;
};

struct Violation {
  int position;  // index into the cycle, or -1 for a structural failure
  std::string message;
};

/// Empty optional means the cycle is valid in R's active mode.
inline std::optional<Violation> validate_cycle(const ReconGraph& r, const Cycle& c) {
  if (c.size() < 3) return Violation{-1, "cycle length < 3"};
  std::vector<char> seen(r.size(), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int v = c[i];
    if (v < 0 || v >= r.size()) return Violation{static_cast<int>(i), "vertex id out of range"};
    if (seen[v]) return Violation{static_cast<int>(i), "repeated vertex " + std::to_string(v)};
    seen[v] = 1;
  }
  for (size_t i = 0; i < c.size(); ++i) {
    int a = c[i], b = c[(i + 1) % c.size()];
    if (!r.adjacent(a, b)) {
      bool tar = std::binary_search(r.tar_nbrs[a].begin(), r.tar_nbrs[a].end(), b);
      bool ts = std::binary_search(r.ts_nbrs[a].begin(), r.ts_nbrs[a].end(), b);
      std::string found = tar ? "TAR (outside mode)" : ts ? "TS (outside mode)" : "none";
      return Violation{static_cast<int>(i),
                       "no edge " + std::to_string(a) + "-" + std::to_string(b) +
                           " in mode " + mode_name(r.mode) + " (adjacency found: " + found + ")"};
    }
  }
  return std::nullopt;
}

enum class SearchStatus { Found, ExhaustedNone, BudgetExhausted };

struct SearchResult {
  SearchStatus status;
  Cycle cycle;               // filled when Found
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000ull;

namespace detail {

struct CycleDfs {
  const ReconGraph& r;
  int len;
  std::uint64_t budget;
  bool hamilton_pruning;
  std::uint64_t expansions = 0;
  bool out_of_budget = false;
  std::vector<char> visited;
  std::vector<int> path;
  std::vector<int> dist_to_anchor;
  int anchor = 0;

  CycleDfs(const ReconGraph& rg, int l, std::uint64_t b)
      : r(rg), len(l), budget(b), hamilton_pruning(l == rg.size()) {}

  // BFS distances to the anchor over vertices > anchor (plus the anchor);
  // static lower bound on the residual closing distance.
  void compute_dists() {
    dist_to_anchor.assign(r.size(), -1);
    std::vector<int> queue{anchor};
    dist_to_anchor[anchor] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : r.neighbors(v))
        if (w > anchor && dist_to_anchor[w] < 0) {
          dist_to_anchor[w] = dist_to_anchor[v] + 1;
          queue.push_back(w);
        }
    }
  }

  // Hamilton-style prune: every unvisited vertex still needs two usable
  // connections among unvisited vertices, the path head, and the anchor.
  bool dead_vertex(int current) const {
    for (int v = anchor + 1; v < r.size(); ++v) {
      if (visited[v]) continue;
      int avail = 0;
      for (int w : r.neighbors(v)) {
        if (w == current || w == anchor || (w > anchor && !visited[w])) ++avail;
        if (avail >= 2) break;
      }
      if (avail < 2) return true;
    }
    return false;
  }

  int available_degree(int v) const {
    int avail = 0;
    for (int w : r.neighbors(v))
      if (w == anchor || (w > anchor && !visited[w])) ++avail;
    return avail;
  }

  // returns 1 if a cycle was completed below w, 0 to keep scanning
  int step(int w, int remaining) {
    if (dist_to_anchor[w] < 0 || dist_to_anchor[w] > remaining) return 0;
    if (++expansions > budget) {
      out_of_budget = true;
      return 0;
    }
    visited[w] = 1;
    path.push_back(w);
    bool prune = hamilton_pruning && remaining > 2 && dead_vertex(w);
    if (!prune) {
      // orientation canonicalization: when the cycle closes, require
      // path[1] < path[len-1]; skip closing otherwise.
      if (static_cast<int>(path.size()) == len) {
        if (path[1] < path[len - 1] && r.adjacent(w, anchor)) return 1;
      } else if (extend(w)) {
        return 1;
      }
    }
    path.pop_back();
    visited[w] = 0;
    return 0;
  }

  bool extend(int current) {
    if (out_of_budget) return false;
    int depth = static_cast<int>(path.size());
    if (depth == len) return r.adjacent(current, anchor);
    // after pushing w the cycle still needs len - depth edges to close
    int remaining = len - depth;
    if (!hamilton_pruning) {
      for (int w : r.neighbors(current)) {
        if (w <= anchor || visited[w]) continue;
        if (step(w, remaining)) return true;
        if (out_of_budget) return false;
      }
      return false;
    }
    // Hamilton searches extend fewest-options-first (ties by id); plain
    // ascending order stalls on the larger reconfiguration graphs.
    std::vector<std::pair<int, int>> ranked;
    for (int w : r.neighbors(current)) {
      if (w <= anchor || visited[w]) continue;
      ranked.push_back({available_degree(w), w});
    }
    std::sort(ranked.begin(), ranked.end());
    for (const auto& [d, w] : ranked) {
      if (step(w, remaining)) return true;
      if (out_of_budget) return false;
    }
    return false;
  }

  std::optional<Cycle> run_from(int a) {
    anchor = a;
    compute_dists();
    visited.assign(r.size(), 0);
    path.assign(1, anchor);
    visited[anchor] = 1;
    if (extend(anchor)) return path;
    return std::nullopt;
  }
};

}  // namespace detail

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  bool parity_shortcut = true;  // reject odd lengths in the bipartite TAR layer
};

/// Searches for a cycle of exactly `len` vertices. Anchored DFS: each anchor
/// in turn is the minimum vertex of candidate cycles. ExhaustedNone is a
/// definitive absence; BudgetExhausted is inconclusive.
inline SearchResult find_cycle_of_length(const ReconGraph& r, int len,
                                         const SearchOptions& opt = {}) {
  if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (len > r.size()) return {SearchStatus::ExhaustedNone, {}, 0};
  if (opt.parity_shortcut && r.mode == Mode::TAR && len % 2 == 1)
    return {SearchStatus::ExhaustedNone, {}, 0};  // TAR layer is bipartite
  detail::CycleDfs dfs(r, len, opt.budget);
  std::uint64_t total = 0;
  for (int a = 0; a + len <= r.size(); ++a) {
    auto found = dfs.run_from(a);
    total = dfs.expansions;
    if (found) {
      SearchResult res{SearchStatus::Found, *found, total};
      if (validate_cycle(r, res.cycle)) throw std::logic_error("search produced invalid cycle");
      return res;
    }
    if (dfs.out_of_budget) return {SearchStatus::BudgetExhausted, {}, total};
  }
  return {SearchStatus::ExhaustedNone, {}, total};
}

/// Hamilton search: length-N cycle with the dead-vertex prune always on.
inline SearchResult find_hamilton_cycle(const ReconGraph& r, const SearchOptions& opt = {}) {
  if (r.size() < 3) return {SearchStatus::ExhaustedNone, {}, 0};
  return find_cycle_of_length(r, r.size(), opt);
}

enum class PancyclicVerdict { Pancyclic, FailsAt, Inconclusive };

struct PancyclicReport {
  PancyclicVerdict verdict = PancyclicVerdict::Pancyclic;
  int failing_length = 0;            // smallest definitively-absent length
  std::vector<int> inconclusive;     // lengths stopped by budget
  PancyclicCertificate certificate;  // cycles for every length that was found
  std::uint64_t expansions = 0;
};

/// Runs lengths N down to 3. Before a fresh search, tries to shortcut the
/// previously found (longer) cycle with a chord spanning exactly the target
/// length. Budget applies per length.
inline PancyclicReport check_pancyclic(const ReconGraph& r, const SearchOptions& opt = {}) {
  PancyclicReport rep;
  rep.certificate.vertex_count = r.size();
  if (r.size() < 3) return rep;  // trivially pancyclic, no lengths required
  Cycle last;
  for (int len = r.size(); len >= 3; --len) {
    if (!last.empty()) {
      int l = static_cast<int>(last.size());
      bool found = false;
      for (int p = 0; p < l && !found; ++p) {
        int a = last[p], b = last[(p + len - 1) % l];
        if (r.adjacent(a, b)) {
          Cycle c;
          c.reserve(len);
          for (int k = 0; k < len; ++k) c.push_back(last[(p + k) % l]);
          if (!validate_cycle(r, c)) {
            rep.certificate.cycles[len] = c;
            rep.certificate.provenance[len] = Provenance::Searched;
            last = std::move(c);
            found = true;
          }
        }
      }
      if (found) continue;
    }
    SearchResult res = find_cycle_of_length(r, len, opt);
    rep.expansions += res.expansions;
    switch (res.status) {
      case SearchStatus::Found:
        rep.certificate.cycles[len] = res.cycle;
        rep.certificate.provenance[len] = Provenance::Searched;
        last = res.cycle;
        break;
      case SearchStatus::ExhaustedNone:
        rep.verdict = PancyclicVerdict::FailsAt;
        rep.failing_length = len;  // descending loop leaves the smallest
        break;
      case SearchStatus::BudgetExhausted:
        rep.inconclusive.push_back(len);
        break;
    }
  }
  if (rep.verdict != PancyclicVerdict::FailsAt && !rep.inconclusive.empty())
    rep.verdict = PancyclicVerdict::Inconclusive;
  return rep;
}

/// Empty optional iff lengths cover exactly 3..N and every cycle validates.
inline std::optional<Violation> validate_certificate(const ReconGraph& r,
                                                     const PancyclicCertificate& cert) {
  if (cert.vertex_count != r.size())
    return Violation{-1, "certificate is for N=" + std::to_string(cert.vertex_count) +
                             " but graph has N=" + std::to_string(r.size())};
  if (r.size() < 3) {
    if (!cert.cycles.empty()) return Violation{-1, "trivial certificate must have no cycles"};
    return std::nullopt;
  }
  int expect = 3;
  for (const auto& [len, cyc] : cert.cycles) {
    if (len != expect) {
      return Violation{-1, len > expect ? "gap at length " + std::to_string(expect)
                                        : "unexpected length " + std::to_string(len)};
    }
    if (static_cast<int>(cyc.size()) != len)
      return Violation{-1, "cycle stored at length " + std::to_string(len) + " has " +
                               std::to_string(cyc.size()) + " vertices"};
    if (auto bad = validate_cycle(r, cyc))
      return Violation{bad->position,
                       "length " + std::to_string(len) + ": " + bad->message};
    ++expect;
  }
  if (expect != r.size() + 1)
    return Violation{-1, "gap at length " + std::to_string(expect)};
  return std::nullopt;
}

}  // namespace tars
