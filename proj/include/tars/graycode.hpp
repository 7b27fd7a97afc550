#pragma once

// Binary-reflected Gray codes and constructive hypercube cycle embeddings.
// The constructions module consumes exactly two guarantees from Q_n:
//   - a cycle of any even length 4..2^n through a prescribed edge, and
//   - a Hamilton path between any two adjacent words.
// Both are built recursively after normalizing the anchor pair to (0...00,
// 0...01), and every output is checked before being returned.

#include <algorithm>
#include <cstdint>

#include "tars/graph.hpp"

namespace tars {

using Word = std::uint32_t;

/// Term j of the binary-reflected Gray code on n bits.
inline Word brgc_term(std::uint64_t j, int n) {
  if (n < 0 || n > 31 || j >= (1ull << n))
    throw std::invalid_argument("gray code index out of range");
  return static_cast<Word>(j ^ (j >> 1));
}

/// Cycle through all n-bit words, consecutive (cyclically) at Hamming
/// distance 1. Needs n >= 2; Q_0 and Q_1 have no cycle.
inline std::vector<Word> brgc_cycle(int n) {
  if (n < 2) throw std::invalid_argument("gray cycle needs at least 2 bits");
  std::vector<Word> seq(1ull << n);
  for (std::uint64_t j = 0; j < seq.size(); ++j) seq[j] = brgc_term(j, n);
  return seq;
}

/// Gray cycle over subsets base + (subset of free), bit k of the code driving
/// vertex free[k]. Consecutive sets differ by one element.
inline std::vector<VertexSet> subset_gray_cycle(VertexSet base, const std::vector<int>& free) {
  for (int v : free)
    if ((base >> v) & 1u) throw std::invalid_argument("free vertex overlaps base");
  if (free.size() < 2) throw std::invalid_argument("need at least 2 free vertices");
  int n = static_cast<int>(free.size());
  std::vector<VertexSet> out;
  out.reserve(1ull << n);
  for (Word w : brgc_cycle(n)) {
    VertexSet s = base;
    for (int k = 0; k < n; ++k)
      if ((w >> k) & 1u) s |= 1u << free[k];
    out.push_back(s);
  }
  return out;
}

/// Validates the HypercubeCycle invariants: even length >= 4, distinct n-bit
/// words, consecutive (cyclically) Hamming distance 1.
inline void check_hypercube_cycle(const std::vector<Word>& cyc, int n) {
  if (cyc.size() < 4 || cyc.size() % 2 != 0)
    throw std::logic_error("hypercube cycle must have even length >= 4");
  std::vector<Word> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("hypercube cycle repeats a word");
  Word mask = static_cast<Word>(full_set(std::min(n, 31)));
  if (n >= 1 && sorted.back() > mask) throw std::logic_error("word uses too many bits");
  for (size_t i = 0; i < cyc.size(); ++i) {
    Word a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    if (std::popcount(a ^ b) != 1) throw std::logic_error("hypercube step is not a single bit");
  }
}

inline void check_hypercube_path(const std::vector<Word>& path, int n, Word a, Word b,
                                 bool full_cover) {
  if (path.empty() || path.front() != a || path.back() != b)
    throw std::logic_error("hypercube path endpoints wrong");
  std::vector<Word> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("hypercube path repeats a word");
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (std::popcount(path[i] ^ path[i + 1]) != 1)
      throw std::logic_error("hypercube path step is not a single bit");
  if (full_cover && path.size() != (1ull << n))
    throw std::logic_error("hypercube path does not cover all words");
}

namespace detail {

// Transform mapping (a, b) adjacent to (0, 1): first swap coordinate p (the
// differing bit) with coordinate 0, then XOR by the swapped a. Self-inverse
// composition applied in the reverse order on the way out.
struct PairNormalizer {
  int p;
  Word offset;

  static PairNormalizer make(Word a, Word b) {
    Word diff = a ^ b;
    if (std::popcount(diff) != 1) throw std::invalid_argument("words are not adjacent");
    PairNormalizer t{std::countr_zero(diff), 0};
    t.offset = t.swap_bits(a);
    return t;
  }

  Word swap_bits(Word w) const {
    if (p == 0) return w;
    Word b0 = (w >> 0) & 1u, bp = (w >> p) & 1u;
    w &= ~((1u << p) | 1u);
    return w | (b0 << p) | bp;
  }

  // from normalized coordinates back to the caller's
  Word restore(Word w) const { return swap_bits(w ^ offset); }
};

// Even-length cycle through edge (0, 1) in Q_n. For len <= 2^(n-1) recurse
// into the low half; otherwise take the full Gray cycle of the low half and
// bulge disjoint non-anchor edges into the high half, two vertices per bulge.
inline std::vector<Word> cycle_through_unit_edge(int n, std::uint64_t len) {
  if (n == 2) {
    if (len != 4) throw std::logic_error("Q2 only has 4-cycles");
    return {0u, 1u, 3u, 2u};
  }
  std::uint64_t half = 1ull << (n - 1);
  if (len <= half) return cycle_through_unit_edge(n - 1, len);
  std::vector<Word> low = brgc_cycle(n - 1);  // starts 0, 1, ...
  std::uint64_t extra = (len - half) / 2;
  Word top = static_cast<Word>(half);
  std::vector<Word> out;
  out.reserve(len);
  // usable disjoint edges: (g1,g2), (g3,g4), ..., (g_{M-1}, g0)
  std::uint64_t m = low.size();
  out.push_back(low[0]);
  for (std::uint64_t i = 1; i < m; i += 2) {
    Word gi = low[i], gj = low[(i + 1) % m];
    out.push_back(gi);
    if (extra > 0) {
      out.push_back(gi | top);
      out.push_back(gj | top);
      --extra;
    }
    if ((i + 1) % m != 0) out.push_back(gj);
  }
  return out;
}

inline std::vector<Word> hamilton_path_unit(int n) {
  if (n == 1) return {0u, 1u};
  std::vector<Word> low = hamilton_path_unit(n - 1);  // 0 ... 1
  // Map the recursive path onto a path 0 -> low[1] by swapping bit 0 with the
  // bit of low[1]; lift it to the high half and ride it between 0 and low[1].
  PairNormalizer t = PairNormalizer::make(0u, low[1]);
  Word top = 1u << (n - 1);
  std::vector<Word> out;
  out.reserve(1ull << n);
  out.push_back(low[0]);
  for (Word w : low) out.push_back(t.swap_bits(w) | top);
  for (size_t i = 1; i < low.size(); ++i) out.push_back(low[i]);
  return out;
}

}  // namespace detail

/// Cycle of exactly `len` vertices in Q_n with a and b adjacent on it.
/// Preconditions: a ~ b, len even, 4 <= len <= 2^n.
inline std::vector<Word> bipan_cycle_with_edge(int n, Word a, Word b, std::uint64_t len) {
  if (n < 2 || n > 31) throw std::invalid_argument("dimension out of range");
  Word mask = static_cast<Word>((1ull << n) - 1);
  if ((a | b) & ~mask) throw std::invalid_argument("word uses too many bits");
  if (std::popcount(a ^ b) != 1) throw std::invalid_argument("words are not adjacent");
  if (len % 2 != 0 || len < 4 || len > (1ull << n))
    throw std::invalid_argument("cycle length must be even in [4, 2^n]");
  auto t = detail::PairNormalizer::make(a, b);
  std::vector<Word> cyc = detail::cycle_through_unit_edge(n, len);
  for (Word& w : cyc) w = t.restore(w);
  check_hypercube_cycle(cyc, n);
  if (cyc.size() != len) throw std::logic_error("constructed cycle has wrong length");
  // anchor edge must be on the cycle
  bool found = false;
  for (size_t i = 0; i < cyc.size() && !found; ++i) {
    Word u = cyc[i], v = cyc[(i + 1) % cyc.size()];
    found = (u == a && v == b) || (u == b && v == a);
  }
  if (!found) throw std::logic_error("anchor edge missing from constructed cycle");
  return cyc;
}

/// Path from a to b covering all of Q_n except one word, for a and b at
/// Hamming distance 2. The skipped word is the midpoint a ^ (lowest bit of
/// a ^ b); the reflected Gray cycle visits any word with its two cycle
/// neighbors one bit-0-flip and one top-bit-flip away, so translating the
/// code to put the midpoint there and deleting it leaves exactly this path.
inline std::vector<Word> hamiltonian_path_minus_one(int n, Word a, Word b) {
  if (n < 2 || n > 31) throw std::invalid_argument("dimension out of range");
  Word mask = static_cast<Word>((1ull << n) - 1);
  if ((a | b) & ~mask) throw std::invalid_argument("word uses too many bits");
  Word diff = a ^ b;
  if (std::popcount(diff) != 2)
    throw std::invalid_argument("words must be at Hamming distance 2");
  int p = std::countr_zero(diff);
  int q = std::countr_zero(diff & (diff - 1));  // p < q, and q > 0
  Word f = a ^ (1u << p);  // the skipped midpoint
  // coordinate permutation: position 0 -> p then n-1 -> q. The transpositions
  // commute on the relevant positions since p < q <= n-1 and q != 0.
  auto swap_bits = [](Word x, int i, int j) {
    if (i == j) return x;
    Word bi = (x >> i) & 1u, bj = (x >> j) & 1u;
    x &= ~((1u << i) | (1u << j));
    return x | (bi << j) | (bj << i);
  };
  std::vector<Word> path;
  path.reserve((1ull << n) - 1);
  for (std::uint64_t j = 1; j < (1ull << n); ++j)
    path.push_back(swap_bits(swap_bits(brgc_term(j, n), 0, p), n - 1, q) ^ f);
  check_hypercube_path(path, n, a, b, false);
  if (path.size() != (1ull << n) - 1 ||
      std::find(path.begin(), path.end(), f) != path.end())
    throw std::logic_error("near-hamilton path construction failed");
  return path;
}

/// Hamilton path of Q_n from a to b where a ~ b: all 2^n words exactly once.
inline std::vector<Word> hamiltonian_path_between_adjacent(int n, Word a, Word b) {
  if (n < 1 || n > 31) throw std::invalid_argument("dimension out of range");
  Word mask = static_cast<Word>((1ull << n) - 1);
  if ((a | b) & ~mask) throw std::invalid_argument("word uses too many bits");
  if (std::popcount(a ^ b) != 1) throw std::invalid_argument("words are not adjacent");
  auto t = detail::PairNormalizer::make(a, b);
  std::vector<Word> path = detail::hamilton_path_unit(n);
  for (Word& w : path) w = t.restore(w);
  check_hypercube_path(path, n, a, b, true);
  return path;
}

}  // namespace tars
