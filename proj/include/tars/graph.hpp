#pragma once

// Seed-graph representation over dense vertex ids 0..n-1 with one adjacency
// bitmask per vertex, plus parsing and the standard graph combinators
// (disjoint union, join, Cartesian product).

#include <bit>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tars {

/// Subsets of V(G) are bitmasks; vertex v corresponds to bit (1u << v).
using VertexSet = std::uint32_t;

constexpr int kMaxOrder = 24;

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Bitmask of the low n bits.
inline VertexSet full_set(int n) {
  return n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u));
}

/// Simple undirected graph. adj[v] is the open neighborhood N(v) as a mask.
struct Graph {
  int order = 0;
  std::vector<VertexSet> adj;

  Graph() = default;

  explicit Graph(int n) : order(n), adj(static_cast<size_t>(n), 0u) {
    if (n < 0 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in [0, " +
                                  std::to_string(kMaxOrder) + "], got " +
                                  std::to_string(n));
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adj[u] |= (1u << v);
    adj[v] |= (1u << u);
  }

  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1u; }

  VertexSet neighborhood(int v) const { return adj[v]; }

  /// Closed neighborhood N[v] = N(v) + v.
  VertexSet closed_neighborhood(int v) const { return adj[v] | (1u << v); }

  int degree(int v) const { return popcount(adj[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < order; ++v) twice += degree(v);
    return twice / 2;
  }

  bool has_vertex(int v) const { return v >= 0 && v < order; }

  void check_vertex(int v) const {
    if (!has_vertex(v))
      throw std::invalid_argument("vertex id " + std::to_string(v) +
                                  " out of range for order " + std::to_string(order));
  }

  /// Symmetry and loop-freeness; called by every parser/combinator.
  void validate() const {
    if (order < 0 || order > kMaxOrder)
      throw std::invalid_argument("graph order out of range");
    if (static_cast<int>(adj.size()) != order)
      throw std::logic_error("adjacency size does not match order");
    VertexSet allowed = full_set(order);
    for (int v = 0; v < order; ++v) {
      if (adj[v] & ~allowed) throw std::logic_error("adjacency uses bits beyond order");
      if ((adj[v] >> v) & 1u) throw std::logic_error("loop at vertex " + std::to_string(v));
      for (int u = 0; u < order; ++u)
        if (adjacent(v, u) != adjacent(u, v)) throw std::logic_error("asymmetric adjacency");
    }
  }

  bool operator==(const Graph& other) const {
    return order == other.order && adj == other.adj;
  }
};

// ---------------------------------------------------------------------------
// Parsing

/// Edge-list format: header "n <order>", then one "u v" pair per line.
/// '#' starts a comment; blank lines are skipped; duplicate edges collapse.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  bool have_header = false;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_header) {
      int n;
      if (first != "n" || !(ls >> n))
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected header \"n <order>\"");
      std::string extra;
      if (ls >> extra)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing junk in header");
      g = Graph(n);
      have_header = true;
      continue;
    }
    int u, v;
    std::istringstream es(line);
    std::string extra;
    if (!(es >> u >> v))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed edge \"" + line + "\"");
    if (es >> extra)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing junk after edge");
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": vertex id out of range");
    if (u == v)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": loop edge");
    g.add_edge(u, v);
  }
  if (!have_header) throw std::invalid_argument("missing \"n <order>\" header");
  g.validate();
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

/// graph6 decoder for orders up to 62 (we cap at kMaxOrder). One line, no
/// optional ">>graph6<<" prefix required but tolerated.
inline Graph parse_graph6(const std::string& line_in) {
  std::string line = line_in;
  if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw std::invalid_argument("empty graph6 line");
  for (char c : line)
    if (c < 63 || c > 126)
      throw std::invalid_argument("invalid graph6 character");
  size_t pos = 0;
  int n;
  if (line[0] == '~') throw std::invalid_argument("graph6 order beyond supported range");
  n = line[0] - 63;
  pos = 1;
  if (n > kMaxOrder)
    throw std::invalid_argument("graph6 order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxOrder));
  Graph g(n);
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(line.size() - pos) != nbytes)
    throw std::invalid_argument("graph6 payload has wrong length");
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = bit / 6, off = 5 - bit % 6;
      int val = (line[pos + byte] - 63) >> off & 1;
      if (val) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  for (int b = nbits; b < nbytes * 6; ++b) {
    int byte = b / 6, off = 5 - b % 6;
    if ((line[pos + byte] - 63) >> off & 1)
      throw std::invalid_argument("graph6 nonzero padding");
  }
  g.validate();
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.order + 63));
  int nbits = g.order * (g.order - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  std::vector<int> bytes(nbytes, 0);
  int bit = 0;
  for (int j = 1; j < g.order; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) bytes[bit / 6] |= 1 << (5 - bit % 6);
  for (int b : bytes) out.push_back(static_cast<char>(b + 63));
  return out;
}

// ---------------------------------------------------------------------------
// Combinators

/// Disjoint union; H's vertex ids are shifted by |V(G)|.
inline Graph graph_union(const Graph& g, const Graph& h) {
  Graph r(g.order + h.order);
  for (int v = 0; v < g.order; ++v) r.adj[v] = g.adj[v];
  for (int v = 0; v < h.order; ++v)
    r.adj[g.order + v] = static_cast<VertexSet>(h.adj[v]) << g.order;
  r.validate();
  return r;
}

/// Join: union plus every cross edge.
inline Graph graph_join(const Graph& g, const Graph& h) {
  Graph r = graph_union(g, h);
  VertexSet gside = full_set(g.order);
  VertexSet hside = full_set(r.order) & ~gside;
  for (int v = 0; v < g.order; ++v) r.adj[v] |= hside;
  for (int v = g.order; v < r.order; ++v) r.adj[v] |= gside;
  r.validate();
  return r;
}

/// Cartesian product; vertex (u,v) gets id u*|V(H)| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.order) * h.order;
  if (n > kMaxOrder)
    throw std::invalid_argument("Cartesian product order exceeds cap");
  Graph r(static_cast<int>(n));
  for (int u = 0; u < g.order; ++u)
    for (int v = 0; v < h.order; ++v) {
      int id = u * h.order + v;
      for (int w = 0; w < h.order; ++w)
        if (h.adjacent(v, w)) r.adj[id] |= 1u << (u * h.order + w);
      for (int w = 0; w < g.order; ++w)
        if (g.adjacent(u, w)) r.adj[id] |= 1u << (w * h.order + v);
    }
  r.validate();
  return r;
}

inline Graph complement(const Graph& g) {
  Graph r(g.order);
  VertexSet all = full_set(g.order);
  for (int v = 0; v < g.order; ++v) r.adj[v] = all & ~g.adj[v] & ~(1u << v);
  r.validate();
  return r;
}

// ---------------------------------------------------------------------------
// Structure queries

/// Connected components as vertex masks, ordered by lowest member id.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen = 0;
  for (int v = 0; v < g.order; ++v) {
    if ((seen >> v) & 1u) continue;
    VertexSet comp = 1u << v;
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      VertexSet f = frontier;
      while (f) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.adj[u];
      }
      frontier = next & ~comp;
      comp |= next;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Induced subgraph on the vertices of `mask`, ids compacted preserving order.
/// If old_ids is non-null it receives the original id of each new vertex.
inline Graph induced_subgraph(const Graph& g, VertexSet mask, std::vector<int>* old_ids = nullptr) {
  std::vector<int> verts;
  for (int v = 0; v < g.order; ++v)
    if ((mask >> v) & 1u) verts.push_back(v);
  Graph r(static_cast<int>(verts.size()));
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      if (g.adjacent(verts[a], verts[b])) r.add_edge(static_cast<int>(a), static_cast<int>(b));
  if (old_ids) *old_ids = verts;
  r.validate();
  return r;
}

inline bool is_forest(const Graph& g) {
  // acyclic iff every component has |E| = |V| - 1
  for (VertexSet comp : components(g)) {
    int verts = popcount(comp);
    int edges = 0;
    VertexSet c = comp;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      edges += popcount(g.adj[v] & comp);
    }
    if (edges / 2 != verts - 1) return false;
  }
  return true;
}

inline bool is_complete(const Graph& g) {
  return g.edge_count() == g.order * (g.order - 1) / 2;
}

inline bool has_any_edge(const Graph& g) { return g.edge_count() > 0; }

// Named small graphs, handy in tests and tools.
inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

/// Star K_{1,k} with center 0.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace tars
