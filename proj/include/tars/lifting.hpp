#pragma once

// Certificate lifting across the two leaf operations.
//
// Operation A removes a pendant path u-v hanging off x; Operation B removes
// one of two twin leaves u, v on x. Both lifts take a pancyclicity
// certificate for the reduced graph H' and produce one for H, following the
// cycle surgery of the corresponding lifting argument. Every intermediate
// cycle is validated; a failure identifies the construction phase.

#include <string>

#include "tars/cycle_search.hpp"
#include "tars/structure.hpp"

namespace tars {

namespace detail {

/// Replaces edge {a,b} of the cycle with the path a -> mid... -> b,
/// whichever orientation the edge appears in.
inline void splice_edge(Cycle& c, int a, int b, const std::vector<int>& mid,
                        const char* phase) {
  int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    int s = c[i], t = c[(i + 1) % n];
    if (s == a && t == b) {
      c.insert(c.begin() + i + 1, mid.begin(), mid.end());
      return;
    }
    if (s == b && t == a) {
      c.insert(c.begin() + i + 1, mid.rbegin(), mid.rend());
      return;
    }
  }
  throw std::logic_error(std::string(phase) + ": edge " + std::to_string(a) + "-" +
                         std::to_string(b) + " not on cycle");
}

/// Replaces the (contiguous, either orientation) vertex run `from` with `to`.
inline void replace_path(Cycle& c, const std::vector<int>& from, const std::vector<int>& to,
                         const char* phase) {
  int n = static_cast<int>(c.size());
  int k = static_cast<int>(from.size());
  for (int i = 0; i < n; ++i) {
    bool fwd = true, bwd = true;
    for (int j = 0; j < k && (fwd || bwd); ++j) {
      int v = c[(i + j) % n];
      fwd = fwd && v == from[j];
      bwd = bwd && v == from[k - 1 - j];
    }
    if (!fwd && !bwd) continue;
    std::vector<int> repl = to;
    if (bwd && !fwd) std::reverse(repl.begin(), repl.end());
    Cycle out;
    out.reserve(n - k + repl.size());
    for (auto v : repl) out.push_back(v);
    for (int j = k; j < n; ++j) out.push_back(c[(i + j) % n]);
    c = std::move(out);
    return;
  }
  throw std::logic_error(std::string(phase) + ": path not on cycle");
}

inline void rotate_to_front(Cycle& c, size_t pos) {
  std::rotate(c.begin(), c.begin() + pos, c.end());
}

inline VertexSet embed_mask(VertexSet m, const std::vector<int>& embed) {
  VertexSet r = 0;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    r |= 1u << embed[v];
  }
  return r;
}

inline int must_index(const DominatingFamily& fam, VertexSet s, const char* phase) {
  int i = fam.index_of(s);
  if (i < 0)
    throw std::logic_error(std::string(phase) + ": set " + std::to_string(s) +
                           " is not a dominating set");
  return i;
}

inline void check_built_cycle(const ReconGraph& r, const Cycle& c, int want_len,
                              const char* phase) {
  if (static_cast<int>(c.size()) != want_len)
    throw std::logic_error(std::string(phase) + ": built cycle has length " +
                           std::to_string(c.size()) + ", wanted " + std::to_string(want_len));
  if (auto bad = validate_cycle(r, c))
    throw std::logic_error(std::string(phase) + ": invalid cycle at position " +
                           std::to_string(bad->position) + ": " + bad->message);
}

}  // namespace detail

/// One lift instance: H, its reduction H', the step that produced H', and
/// the id embedding V(H') -> V(H).
struct LiftContext {
  Graph h;
  Graph hprime;
  ReductionStep step;       // ids in h
  std::vector<int> embed;   // hprime id -> h id
};

inline LiftContext make_lift_context(const Graph& h, const ReductionStep& step) {
  LiftContext ctx;
  ctx.h = h;
  ctx.step = step;
  ctx.hprime = apply_reduction_step(h, step, &ctx.embed);
  return ctx;
}

/// Sets S over V(H')-{x} that dominate H'-{x} but not H'. Equivalently:
/// S dominates H'-{x} and contains no neighbor of x.
struct BoundarySetJ {
  std::vector<VertexSet> members;  // ascending
};

inline BoundarySetJ compute_boundary_J(const Graph& hprime, int x) {
  hprime.check_vertex(x);
  BoundarySetJ j;
  VertexSet xbit = 1u << x;
  VertexSet rest = full_set(hprime.order) & ~xbit;
  VertexSet goal = rest;
  // iterate subsets of rest in ascending mask order
  for (VertexSet s = 0;; s = (s - rest) & rest) {
    VertexSet covered = s;
    VertexSet m = s;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      covered |= hprime.adj[v] & ~xbit;  // edges of H' - {x}
    }
    if (covered == goal && (hprime.adj[x] & s) == 0) j.members.push_back(s);
    if (s == rest) break;
  }
  return j;
}

/// Lift across Operation A. cert_prime certifies eps(H'); H' must be the
/// ctx reduction with at least 2 vertices.
inline PancyclicCertificate lift_operation_A(const LiftContext& ctx,
                                             const PancyclicCertificate& cert_prime) {
  using detail::splice_edge;
  if (ctx.step.kind != OpKind::OpA) throw std::invalid_argument("context is not an A-step");
  if (ctx.hprime.order < 2)
    throw std::invalid_argument("operation A lift needs |V(H')| >= 2");
  const Graph& h = ctx.h;
  ReconGraph rh = build_recon_graph(h, Mode::TARS);
  DominatingFamily famp = enumerate_dominating_sets(ctx.hprime);
  int n = famp.size();
  if (cert_prime.vertex_count != n)
    throw std::invalid_argument("certificate does not match eps(H')");
  if (n % 2 == 0) throw std::logic_error("op-A lift: eps(H') has even order");

  VertexSet ubit = 1u << ctx.step.u, vbit = 1u << ctx.step.v;
  int xprime = -1;
  for (size_t i = 0; i < ctx.embed.size(); ++i)
    if (ctx.embed[i] == ctx.step.x) xprime = static_cast<int>(i);
  if (xprime < 0) throw std::logic_error("op-A lift: x not in H'");

  // ids in eps(H) of the three extensions of each eps(H') set
  std::vector<int> idv(n), idu(n), iduv(n);
  for (int i = 0; i < n; ++i) {
    VertexSet base = detail::embed_mask(famp.sets[i], ctx.embed);
    idv[i] = detail::must_index(rh.family, base | vbit, "op-A v-extension");
    idu[i] = detail::must_index(rh.family, base | ubit, "op-A u-extension");
    iduv[i] = detail::must_index(rh.family, base | ubit | vbit, "op-A uv-extension");
  }

  BoundarySetJ bj = compute_boundary_J(ctx.hprime, xprime);
  int nh = rh.size();
  if (nh != 3 * n + 2 * static_cast<int>(bj.members.size()))
    throw std::logic_error("op-A lift: family size " + std::to_string(nh) +
                           " != 3n + 2|J| = " +
                           std::to_string(3 * n + 2 * bj.members.size()));

  PancyclicCertificate cert;
  cert.vertex_count = nh;
  auto put = [&](int len, Cycle c, const char* phase) {
    detail::check_built_cycle(rh, c, len, phase);
    cert.cycles[len] = std::move(c);
    cert.provenance[len] = Provenance::Constructed;
  };

  // lengths 3..n: v-extensions of the certified cycles
  for (int len = 3; len <= n; ++len) {
    Cycle c;
    for (int i : cert_prime.cycles.at(len)) c.push_back(idv[i]);
    put(len, std::move(c), "op-A lengths 3..n");
  }

  // Hamilton cycle of eps(H'), rotated so position 0 is not S+x for S in J.
  std::vector<VertexSet> jx;
  for (VertexSet s : bj.members) jx.push_back(s | (1u << xprime));
  Cycle g = cert_prime.cycles.at(n);
  {
    size_t pos = g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      VertexSet s = famp.sets[g[i]];
      if (std::find(jx.begin(), jx.end(), s) == jx.end()) { pos = i; break; }
    }
    if (pos == g.size()) throw std::logic_error("op-A lift: no rotation anchor");
    detail::rotate_to_front(g, pos);
  }

  // n+1: ladder over the (n-1)-cycle, or over an edge of G when n = 3
  {
    Cycle c;
    if (n >= 5) {
      const Cycle& f = cert_prime.cycles.at(n - 1);
      c = {idv[f[0]], iduv[f[0]], iduv[f[1]], idv[f[1]]};
      for (size_t i = 2; i < f.size(); ++i) c.push_back(idv[f[i]]);
    } else {
      c = {idv[g[0]], iduv[g[0]], iduv[g[1]], idv[g[1]]};
    }
    put(n + 1, std::move(c), "op-A length n+1");
  }
  // n+2 .. n+4: deviations at the head of the Hamilton cycle
  {
    Cycle c = {idv[g[0]], iduv[g[0]], iduv[g[1]], idv[g[1]]};
    for (int i = 2; i < n; ++i) c.push_back(idv[g[i]]);
    put(n + 2, std::move(c), "op-A length n+2");
  }
  {
    Cycle c = {idv[g[0]], iduv[g[0]], idu[g[0]], idu[g[1]], idv[g[1]]};
    for (int i = 2; i < n; ++i) c.push_back(idv[g[i]]);
    put(n + 3, std::move(c), "op-A length n+3");  // TS edge (G2+u, G2+v)
  }
  {
    Cycle c = {idv[g[0]], iduv[g[0]], idu[g[0]], idu[g[1]], iduv[g[1]], idv[g[1]]};
    for (int i = 2; i < n; ++i) c.push_back(idv[g[i]]);
    put(n + 4, std::move(c), "op-A length n+4");
  }

  // Z_e (even, n+5) and Z_o (odd, n+6), then +2 growth steps: first the
  // uv-ladder then the u-ladder on pairs (j, j+1) for 0-based even j in
  // [2, n-3], finally one +2 splice per member of J.
  auto z_base = [&](bool odd) {
    Cycle c = {idu[g[0]], idu[g[1]], iduv[g[1]], iduv[g[0]]};
    for (int i = 0; i < n; ++i) c.push_back(idv[g[i]]);
    if (odd) c.push_back(iduv[g[n - 1]]);
    c.push_back(idu[g[n - 1]]);
    return c;
  };
  struct GrowStep {
    int a, b;                 // endpoints of the edge to open up
    std::vector<int> mid;
  };
  std::vector<GrowStep> zsteps;
  for (int j = 2; j <= n - 3; j += 2) {
    zsteps.push_back({idv[g[j]], idv[g[j + 1]], {iduv[g[j]], iduv[g[j + 1]]}});
    zsteps.push_back({iduv[g[j]], iduv[g[j + 1]], {idu[g[j]], idu[g[j + 1]]}});
  }
  // J splices: S+x sits at some position of g; the splice opens the edge
  // between its u- and uv-extensions. Position 0 is excluded by rotation.
  int tail_j = -1;  // index into bj.members whose S+x is the last cycle vertex
  std::vector<GrowStep> jsteps;
  for (size_t k = 0; k < bj.members.size(); ++k) {
    VertexSet sx = bj.members[k] | (1u << xprime);
    int fi = famp.index_of(sx);
    if (fi < 0) throw std::logic_error("op-A lift: S+x not dominating in H'");
    size_t pos = std::find(g.begin(), g.end(), fi) - g.begin();
    if (pos == 0 || pos >= g.size()) throw std::logic_error("op-A lift: bad J position");
    VertexSet base = detail::embed_mask(bj.members[k], ctx.embed);
    int su = detail::must_index(rh.family, base | ubit, "op-A J u-set");
    int suv = detail::must_index(rh.family, base | ubit | vbit, "op-A J uv-set");
    if (pos == g.size() - 1) tail_j = static_cast<int>(k);
    jsteps.push_back({idu[g[pos]], iduv[g[pos]], {su, suv}});
  }

  int ne = n + 5, no = n + 6;
  int max_even_plain = 3 * n - 1 + 2 * static_cast<int>(jsteps.size() - (tail_j >= 0 ? 1 : 0));
  for (int len = ne; len <= nh - 1; len += 2) {
    const char* phase = "op-A even chain";
    Cycle c;
    if (len <= max_even_plain) {
      c = z_base(false);
      int t = (len - ne) / 2;
      for (int s = 0; s < t; ++s) {
        const GrowStep& st =
            s < static_cast<int>(zsteps.size())
                ? zsteps[s]
                : [&]() -> const GrowStep& {
                    int k = s - static_cast<int>(zsteps.size());
                    // skip the tail member; its uv-edge is absent from Z_e
                    for (int q = 0, seen = 0; q < static_cast<int>(jsteps.size()); ++q) {
                      if (q == tail_j) continue;
                      if (seen++ == k) return jsteps[q];
                    }
                    throw std::logic_error("op-A even chain: step overflow");
                  }();
        splice_edge(c, st.a, st.b, st.mid, phase);
      }
    } else {
      // the final even length when some S+x is the Hamilton tail: shorten the
      // fully spliced odd cycle by one vertex
      phase = "op-A even tail patch";
      c = z_base(true);
      for (const auto& st : zsteps) splice_edge(c, st.a, st.b, st.mid, phase);
      for (const auto& st : jsteps) splice_edge(c, st.a, st.b, st.mid, phase);
      VertexSet base = detail::embed_mask(bj.members[tail_j], ctx.embed);
      int su = detail::must_index(rh.family, base | ubit, phase);
      int suv = detail::must_index(rh.family, base | ubit | vbit, phase);
      detail::replace_path(c, {idv[g[n - 1]], iduv[g[n - 1]], suv, su, idu[g[n - 1]]},
                           {idv[g[n - 1]], suv, iduv[g[n - 1]], idu[g[n - 1]]}, phase);
    }
    put(len, std::move(c), phase);
  }
  for (int len = no; len <= nh; len += 2) {
    Cycle c = z_base(true);
    int t = (len - no) / 2;
    for (int s = 0; s < t; ++s) {
      const GrowStep& st = s < static_cast<int>(zsteps.size())
                               ? zsteps[s]
                               : jsteps[s - zsteps.size()];
      splice_edge(c, st.a, st.b, st.mid, "op-A odd chain");
    }
    put(len, std::move(c), "op-A odd chain");
  }

  if (auto bad = validate_certificate(rh, cert))
    throw std::logic_error("op-A lift: certificate invalid: " + bad->message);
  return cert;
}

/// Lift across Operation B: twin leaves u, v on x, with H' = H - {v}.
inline PancyclicCertificate lift_operation_B(const LiftContext& ctx,
                                             const PancyclicCertificate& cert_prime) {
  using detail::splice_edge;
  if (ctx.step.kind != OpKind::OpB) throw std::invalid_argument("context is not a B-step");
  const Graph& h = ctx.h;
  ReconGraph rh = build_recon_graph(h, Mode::TARS);
  DominatingFamily famp = enumerate_dominating_sets(ctx.hprime);
  int n = famp.size();
  if (cert_prime.vertex_count != n)
    throw std::invalid_argument("certificate does not match eps(H')");

  VertexSet ubit = 1u << ctx.step.u, vbit = 1u << ctx.step.v, xbit = 1u << ctx.step.x;
  int nh = rh.size();

  // Five-way partition of eps(H) by membership of x, u, v.
  enum Cls { CXp, CX, CBp, CB, CU };
  std::vector<int> cls(nh, -1);
  int count[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < nh; ++i) {
    VertexSet s = rh.family.sets[i];
    bool hx = s & xbit, hu = s & ubit, hv = s & vbit;
    int c;
    if (hx && !hu && !hv) c = CXp;
    else if (hx && !hu && hv) c = CX;
    else if (hx && hu && !hv) c = CBp;
    else if (hx && hu && hv) c = CB;
    else if (!hx && hu && hv) c = CU;
    else throw std::logic_error("op-B lift: dominating set outside the five classes");
    cls[i] = c;
    ++count[c];
  }
  if (count[CXp] != count[CX] || count[CX] != count[CBp] || count[CBp] != count[CB])
    throw std::logic_error("op-B lift: class cardinalities differ");
  if (n != count[CX] + count[CB] + count[CU])
    throw std::logic_error("op-B lift: n != |X| + |B| + |U|");
  if (nh != n + 2 * count[CX])
    throw std::logic_error("op-B lift: family size != n + 2|X|");

  auto corr = [&](int id, VertexSet want_u, VertexSet want_v, const char* phase) {
    VertexSet core = rh.family.sets[id] & ~(ubit | vbit);
    return detail::must_index(rh.family, core | want_u | want_v, phase);
  };

  std::vector<int> idv(n);
  for (int i = 0; i < n; ++i)
    idv[i] = detail::must_index(rh.family, detail::embed_mask(famp.sets[i], ctx.embed) | vbit,
                                "op-B v-extension");

  PancyclicCertificate cert;
  cert.vertex_count = nh;
  auto put = [&](int len, Cycle c, const char* phase) {
    detail::check_built_cycle(rh, c, len, phase);
    cert.cycles[len] = std::move(c);
    cert.provenance[len] = Provenance::Constructed;
  };

  for (int len = 3; len <= n; ++len) {
    Cycle c;
    for (int i : cert_prime.cycles.at(len)) c.push_back(idv[i]);
    put(len, std::move(c), "op-B lengths 3..n");
  }

  // Detour plan for a lifted cycle: +2 growth steps over the maximal runs of
  // X-elements. Skip-listed vertices get the reduced treatment of the even
  // completion cases.
  struct GrowStep {
    int a, b;
    std::vector<int> mid;
  };
  // shrink_pair_for: this X-element's pair detour drops its B'-layer (or its
  // lone special detour is skipped). split_run_at: this X-element's run is
  // split around it, with the special detour moved to the run's start when
  // the prefix has odd length. At most one of the two is >= 0.
  auto detour_steps = [&](const Cycle& z, int shrink_pair_for, int split_run_at) {
    std::vector<GrowStep> steps;
    Cycle c = z;
    {
      size_t pos = c.size();
      for (size_t i = 0; i < c.size(); ++i)
        if (cls[c[i]] != CX) { pos = i; break; }
      if (pos == c.size()) throw std::logic_error("op-B lift: cycle is all X");
      detail::rotate_to_front(c, pos);
    }
    size_t i = 1;
    while (i < c.size()) {
      if (cls[c[i]] != CX) { ++i; continue; }
      size_t start = i;
      while (i < c.size() && cls[c[i]] == CX) ++i;
      size_t len = i - start;  // run c[start .. i-1]; successor c[i % size]
      bool has_x2 = false;
      size_t x2_off = 0;
      for (size_t k = 0; k < len; ++k)
        if (c[start + k] == shrink_pair_for || c[start + k] == split_run_at) {
          has_x2 = true;
          x2_off = k;
        }
      auto pair_step = [&](int xa, int xb, bool drop_b_layer) {
        int xap = corr(xa, 0, 0, "op-B detour X'"), xbp = corr(xb, 0, 0, "op-B detour X'");
        steps.push_back({xa, xb, {xap, xbp}});
        if (!drop_b_layer) {
          int bap = corr(xa, ubit, 0, "op-B detour B'"), bbp = corr(xb, ubit, 0, "op-B detour B'");
          steps.push_back({xap, xbp, {bap, bbp}});
        }
      };
      auto special_step = [&](int xl, int nbr) {
        steps.push_back({xl, nbr, {corr(xl, 0, 0, "op-B special X'"),
                                   corr(xl, ubit, 0, "op-B special B'")}});
      };
      if (!has_x2) {
        for (size_t k = 0; k + 1 < len; k += 2) pair_step(c[start + k], c[start + k + 1], false);
        if (len % 2 == 1) special_step(c[start + len - 1], c[(start + len) % c.size()]);
        continue;
      }
      if (shrink_pair_for >= 0) {
        // keep all pairings; the pair containing X2 drops its B'-layer, and
        // if X2 lands on the odd tail its special detour is skipped entirely
        for (size_t k = 0; k + 1 < len; k += 2) {
          bool touches = (start + k == start + x2_off) || (start + k + 1 == start + x2_off);
          pair_step(c[start + k], c[start + k + 1], touches);
        }
        if (len % 2 == 1 && x2_off != len - 1)
          special_step(c[start + len - 1], c[(start + len) % c.size()]);
      } else {
        // split the run around X2; X2 itself gets no replacement
        size_t l1 = x2_off;  // prefix before X2
        if (l1 % 2 == 0) {
          for (size_t k = 0; k + 1 < l1; k += 2) pair_step(c[start + k], c[start + k + 1], false);
        } else {
          special_step(c[start], c[start == 0 ? c.size() - 1 : start - 1]);
          for (size_t k = 1; k + 1 < l1; k += 2) pair_step(c[start + k], c[start + k + 1], false);
        }
        size_t start2 = start + x2_off + 1;
        size_t l2 = len - x2_off - 1;
        for (size_t k = 0; k + 1 < l2; k += 2) pair_step(c[start2 + k], c[start2 + k + 1], false);
        if (l2 % 2 == 1) special_step(c[start2 + l2 - 1], c[(start2 + l2) % c.size()]);
      }
    }
    return steps;
  };

  // odd chain from the lifted Hamilton cycle
  Cycle zo;
  for (int i : cert_prime.cycles.at(n)) zo.push_back(idv[i]);
  {
    auto steps = detour_steps(zo, -1, -1);
    if (2 * static_cast<int>(steps.size()) != 2 * count[CX])
      throw std::logic_error("op-B lift: odd detour capacity mismatch");
    for (int len = n + 2; len <= nh; len += 2) {
      Cycle c = zo;
      int t = (len - n) / 2;
      for (int s = 0; s < t; ++s) splice_edge(c, steps[s].a, steps[s].b, steps[s].mid, "op-B odd chain");
      put(len, std::move(c), "op-B odd chain");
    }
  }

  // even chain
  if (n == 3) {
    // the lone even length is 4: the square X - X' - B' - B on the lowest X
    int x1 = -1;
    for (int i = 0; i < nh && x1 < 0; ++i)
      if (cls[i] == CX) x1 = i;
    Cycle c = {x1, corr(x1, 0, 0, "op-B square"), corr(x1, ubit, 0, "op-B square"),
               corr(x1, ubit, vbit, "op-B square")};
    put(4, std::move(c), "op-B square");
  } else {
    Cycle ze;
    for (int i : cert_prime.cycles.at(n - 1)) ze.push_back(idv[i]);
    int missing_x = -1;
    {
      std::vector<char> present(nh, 0);
      for (int i : ze) present[i] = 1;
      for (int i = 0; i < nh; ++i)
        if (cls[i] == CX && !present[i]) {
          if (missing_x >= 0) throw std::logic_error("op-B lift: two X elements missing");
          missing_x = i;
        }
    }
    if (missing_x < 0) {
      auto steps = detour_steps(ze, -1, -1);
      for (int len = n + 1; len <= nh - 1; len += 2) {
        Cycle c = ze;
        int t = (len - (n - 1)) / 2;
        for (int s = 0; s < t; ++s)
          splice_edge(c, steps[s].a, steps[s].b, steps[s].mid, "op-B even chain");
        put(len, std::move(c), "op-B even chain");
      }
    } else {
      // plain chain stops two short; the last even length needs the B1 bridge
      auto steps = detour_steps(ze, -1, -1);  // used only up to |X|-1 splices
      for (int len = n + 1; len <= nh - 3; len += 2) {
        Cycle c = ze;
        int t = (len - (n - 1)) / 2;
        if (t > static_cast<int>(steps.size()))
          throw std::logic_error("op-B even chain: step overflow");
        for (int s = 0; s < t; ++s)
          splice_edge(c, steps[s].a, steps[s].b, steps[s].mid, "op-B even chain");
        put(len, std::move(c), "op-B even chain");
      }
      // length nh-1 via Case 1 / Case 2
      int b1 = corr(missing_x, ubit, vbit, "op-B bridge");
      size_t p1 = std::find(ze.begin(), ze.end(), b1) - ze.begin();
      if (p1 >= ze.size()) throw std::logic_error("op-B lift: B1 not on Z_e");
      int pred = ze[(p1 + ze.size() - 1) % ze.size()];
      int succ = ze[(p1 + 1) % ze.size()];
      Cycle c = ze;
      const char* phase;
      int x2;
      if (cls[succ] == CB || cls[pred] == CB) {
        phase = "op-B even completion case 1";
        int b2 = cls[succ] == CB ? succ : pred;
        x2 = corr(b2, 0, vbit, phase);
        splice_edge(c, b1, b2,
                    {corr(b1, ubit, 0, phase), corr(b1, 0, 0, phase),
                     corr(b2, 0, 0, phase), corr(b2, ubit, 0, phase)},
                    phase);
        auto csteps = detour_steps(ze, -1, x2);
        for (const auto& st : csteps) splice_edge(c, st.a, st.b, st.mid, phase);
      } else {
        phase = "op-B even completion case 2";
        if (cls[succ] != CU || cls[pred] != CU)
          throw std::logic_error("op-B lift: B1 neighbors not in U");
        int tar_u = rh.family.index_of(rh.family.sets[b1] & ~xbit);
        int u2 = (succ != tar_u) ? succ : pred;
        VertexSet diff = rh.family.sets[u2] & ~rh.family.sets[b1];
        if (popcount(diff) != 1 ||
            rh.family.sets[u2] != ((rh.family.sets[b1] & ~xbit) | diff))
          throw std::logic_error("op-B lift: U2 is not a w-slide of B1");
        int w = std::countr_zero(diff);
        if (w == ctx.step.u || w == ctx.step.v || !h.adjacent(w, ctx.step.x))
          throw std::logic_error("op-B lift: slide vertex w invalid");
        int b2 = detail::must_index(rh.family, rh.family.sets[b1] | diff, phase);
        x2 = corr(b2, 0, vbit, phase);
        splice_edge(c, b1, u2,
                    {missing_x, corr(missing_x, 0, 0, phase),
                     corr(b1, ubit, 0, phase), corr(b2, ubit, 0, phase)},
                    phase);
        auto csteps = detour_steps(ze, x2, -1);
        for (const auto& st : csteps) splice_edge(c, st.a, st.b, st.mid, phase);
      }
      put(nh - 1, std::move(c), phase);
    }
  }

  if (auto bad = validate_certificate(rh, cert))
    throw std::logic_error("op-B lift: certificate invalid: " + bad->message);
  return cert;
}

}  // namespace tars
