#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "tars/certificate_io.hpp"
#include "tars/constructions.hpp"
#include "test_util.hpp"

using namespace tars;

namespace {

std::set<int> searched_lengths(const Graph& g) {
  ReconGraph r = build_recon_graph(g);
  auto rep = check_pancyclic(r);
  REQUIRE(rep.inconclusive.empty());
  std::set<int> out;
  for (const auto& [len, cyc] : rep.certificate.cycles) out.insert(len);
  return out;
}

void require_full_certificate(const Graph& g, const PancyclicCertificate& cert) {
  ReconGraph r = build_recon_graph(g);
  auto bad = validate_certificate(r, cert);
  if (bad) INFO(bad->message);
  REQUIRE_FALSE(bad);
}

}  // namespace

TEST_CASE("boundary sets") {
  SECTION("P2 with x an endpoint: empty") {
    auto j = compute_boundary_J(path_graph(2), 0);
    REQUIRE(j.members.empty());
  }
  SECTION("P3 with x the center: empty") {
    auto j = compute_boundary_J(path_graph(3), 1);
    REQUIRE(j.members.empty());
  }
  SECTION("P3 with x an endpoint: exactly the far endpoint") {
    auto j = compute_boundary_J(path_graph(3), 0);
    REQUIRE(j.members == std::vector<VertexSet>{0b100});
  }
}

TEST_CASE("operation A lift") {
  SECTION("P4 from P2") {
    Graph p4 = path_graph(4);
    auto seq = find_reduction_sequence(p4);
    REQUIRE(seq.steps.size() == 1);
    LiftContext ctx = make_lift_context(p4, seq.steps[0]);
    PancyclicCertificate base = detail::p2_certificate(ctx.hprime);
    PancyclicCertificate lifted = lift_operation_A(ctx, base);
    REQUIRE(lifted.vertex_count == 9);
    require_full_certificate(p4, lifted);
    std::set<int> lengths;
    for (const auto& [len, cyc] : lifted.cycles) lengths.insert(len);
    REQUIRE(lengths == searched_lengths(p4));
  }
  SECTION("P5 exercises a nonempty boundary set") {
    Graph p5 = path_graph(5);
    PancyclicCertificate cert = tree_certificate(p5);
    // eps(P5): 3n + 2|J| with n = 5, |J| = 1
    REQUIRE(cert.vertex_count == 17);
    require_full_certificate(p5, cert);
  }
  SECTION("context type is enforced") {
    Graph star = star_graph(3);
    auto seq = find_reduction_sequence(star);
    LiftContext ctx = make_lift_context(star, seq.steps[0]);  // a B-step
    PancyclicCertificate dummy;
    REQUIRE_THROWS_AS(lift_operation_A(ctx, dummy), std::invalid_argument);
  }
}

TEST_CASE("operation B lift") {
  SECTION("3-star from P3, with the class partition identities") {
    Graph star = star_graph(3);
    auto seq = find_reduction_sequence(star);
    REQUIRE(seq.steps[0].kind == OpKind::OpB);
    LiftContext ctx = make_lift_context(star, seq.steps[0]);
    PancyclicCertificate inner = tree_certificate(ctx.hprime);
    REQUIRE(inner.vertex_count == 5);
    PancyclicCertificate lifted = lift_operation_B(ctx, inner);
    REQUIRE(lifted.vertex_count == 9);  // n + 2|X| = 5 + 4
    require_full_certificate(star, lifted);
    std::set<int> lengths;
    for (const auto& [len, cyc] : lifted.cycles) lengths.insert(len);
    REQUIRE(lengths == searched_lengths(star));
  }
  SECTION("P3 from P2 (the smallest lift)") {
    Graph p3 = path_graph(3);
    PancyclicCertificate cert = tree_certificate(p3);
    REQUIRE(cert.vertex_count == 5);
    require_full_certificate(p3, cert);
  }
}

TEST_CASE("tree certificates") {
  SECTION("P2 is the triangle") {
    PancyclicCertificate cert = tree_certificate(path_graph(2));
    REQUIRE(cert.vertex_count == 3);
    REQUIRE(cert.cycles.size() == 1);
  }
  SECTION("all trees on up to 7 vertices validate") {
    std::mt19937 rng(17);
    for (int n = 2; n <= 7; ++n)
      for (int rep = 0; rep < 12; ++rep) {
        Graph t = testing::random_tree(rng, n);
        PancyclicCertificate cert = tree_certificate(t);
        require_full_certificate(t, cert);
      }
  }
  SECTION("forests go through the product fold") {
    Graph f = graph_union(path_graph(2), path_graph(3));
    PancyclicCertificate cert = tree_certificate(f);
    REQUIRE(cert.vertex_count == 15);
    require_full_certificate(f, cert);
  }
  SECTION("cycles are rejected") {
    REQUIRE_THROWS_AS(tree_certificate(cycle_graph(4)), std::invalid_argument);
  }
}

TEST_CASE("product certificates") {
  SECTION("two paths: the 3x3 torus-like product") {
    Graph a = path_graph(2), b = path_graph(2);
    ReconGraph ra = build_recon_graph(a), rb = build_recon_graph(b);
    PancyclicCertificate ca = tree_certificate(a), cb = tree_certificate(b);
    PancyclicCertificate cert = product_certificate(ra, ca, rb, cb);
    REQUIRE(cert.vertex_count == 9);
    require_full_certificate(graph_union(a, b), cert);
  }
  SECTION("identity factor re-indexes only") {
    Graph a = path_graph(3), b(1);
    ReconGraph ra = build_recon_graph(a), rb = build_recon_graph(b);
    PancyclicCertificate ca = tree_certificate(a);
    PancyclicCertificate cb = detail::trivial_certificate(1);
    PancyclicCertificate cert = product_certificate(ra, ca, rb, cb);
    REQUIRE(cert.vertex_count == 5);
    require_full_certificate(graph_union(a, b), cert);
  }
  SECTION("the union family is the labeled product of the factor families") {
    for (const Graph& a : testing::all_labeled_graphs(3))
      for (const Graph& b : testing::all_labeled_graphs(2)) {
        ReconGraph ru = build_recon_graph(graph_union(a, b));
        ReconGraph ra = build_recon_graph(a), rb = build_recon_graph(b);
        REQUIRE(ru.size() == ra.size() * rb.size());
        // edges match the Cartesian-product rule under the pair map
        long long expect = static_cast<long long>(ra.size()) * rb.edge_count(Mode::TARS) +
                           static_cast<long long>(rb.size()) * ra.edge_count(Mode::TARS);
        REQUIRE(ru.edge_count(Mode::TARS) == expect);
      }
  }
  SECTION("larger uneven factors") {
    Graph a = path_graph(4), b = path_graph(3);
    ReconGraph ra = build_recon_graph(a), rb = build_recon_graph(b);
    PancyclicCertificate cert =
        product_certificate(ra, tree_certificate(a), rb, tree_certificate(b));
    REQUIRE(cert.vertex_count == 45);
    require_full_certificate(graph_union(a, b), cert);
  }
}

TEST_CASE("universal-vertex join lift") {
  SECTION("K3 from K2") {
    Graph k2 = complete_graph(2);
    PancyclicCertificate cert = join_k1_certificate(k2, tree_certificate(k2));
    REQUIRE(cert.vertex_count == 7);
    require_full_certificate(graph_join(k2, Graph(1)), cert);
    std::set<int> lengths;
    for (const auto& [len, cyc] : cert.cycles) lengths.insert(len);
    REQUIRE(lengths == searched_lengths(complete_graph(3)));
  }
  SECTION("K4 from K3") {
    Graph k3 = complete_graph(3);
    PancyclicCertificate inner = join_k1_certificate(complete_graph(2),
                                                     tree_certificate(complete_graph(2)));
    PancyclicCertificate cert = join_k1_certificate(k3, inner);
    REQUIRE(cert.vertex_count == 15);
    require_full_certificate(complete_graph(4), cert);
  }
  SECTION("P3 plus a universal vertex (the diamond's inner step)") {
    Graph p3 = path_graph(3);
    PancyclicCertificate cert = join_k1_certificate(p3, tree_certificate(p3));
    REQUIRE(cert.vertex_count == 5 + 8);
    require_full_certificate(graph_join(p3, Graph(1)), cert);
  }
  SECTION("edgeless side is refused (stars take the tree path)") {
    REQUIRE_THROWS_AS(join_k1_certificate(Graph(3), detail::trivial_certificate(1)),
                      std::invalid_argument);
  }
  SECTION("all-sliding inner cycles are bridged (2K2 factor)") {
    // the product certificate for 2K2 legitimately contains cycles without
    // any TAR edge; the lift must still produce every length
    Graph two_k2 = graph_union(complete_graph(2), complete_graph(2));
    ConstructionResult inner = construct_certificate(two_k2);
    REQUIRE(inner.status == ConstructStatus::Ok);
    PancyclicCertificate cert = join_k1_certificate(two_k2, inner.certificate);
    REQUIRE(cert.vertex_count == 9 + 16);
    require_full_certificate(graph_join(two_k2, Graph(1)), cert);
  }
  SECTION("the bowtie dispatches through the same bridge") {
    Graph bowtie = parse_graph6("D`{");
    ConstructionResult res = construct_certificate(bowtie);
    REQUIRE(res.status == ConstructStatus::Ok);
    REQUIRE(res.strategy == "join");
    require_full_certificate(bowtie, res.certificate);
  }
}

TEST_CASE("general join certificates") {
  SECTION("K23 runs the grid construction") {
    Graph a(3), b(2);  // edgeless sides
    PancyclicCertificate ca = detail::trivial_certificate(1);
    PancyclicCertificate cert = join_certificate(a, b, ca, ca);
    REQUIRE(cert.vertex_count == 23);
    require_full_certificate(graph_join(a, b), cert);
    std::set<int> lengths;
    for (const auto& [len, cyc] : cert.cycles) lengths.insert(len);
    REQUIRE(lengths == searched_lengths(graph_join(a, b)));
  }
  SECTION("P3 v 2K1 runs the grid with a richer bottom axis") {
    Graph a = path_graph(3), b(2);
    PancyclicCertificate cert =
        join_certificate(a, b, tree_certificate(a), detail::trivial_certificate(1));
    REQUIRE(cert.vertex_count == 27);
    require_full_certificate(graph_join(a, b), cert);
  }
  SECTION("2K1 v 2K1 is a 4-cycle, certified by search") {
    Graph a(2), b(2);
    PancyclicCertificate cert = join_certificate(a, b, detail::trivial_certificate(1),
                                                 detail::trivial_certificate(1));
    REQUIRE(cert.vertex_count == 11);
    require_full_certificate(graph_join(a, b), cert);
  }
  SECTION("complete sides peel") {
    Graph a = complete_graph(2), b(2);
    PancyclicCertificate cert = join_certificate(
        a, b, tree_certificate(a), detail::trivial_certificate(1));
    require_full_certificate(graph_join(a, b), cert);
  }
  SECTION("swapped factor order relabels correctly") {
    Graph a(2), b = path_graph(3);
    PancyclicCertificate cert =
        join_certificate(a, b, detail::trivial_certificate(1), tree_certificate(b));
    require_full_certificate(graph_join(a, b), cert);
  }
}

TEST_CASE("dispatcher") {
  SECTION("strategies") {
    std::vector<std::string> trace;
    REQUIRE(construct_certificate(path_graph(4)).strategy == "forest");
    REQUIRE(construct_certificate(complete_graph(4)).strategy == "threshold");
    REQUIRE(construct_certificate(graph_join(Graph(2), Graph(3))).strategy == "join");
    REQUIRE(construct_certificate(graph_union(path_graph(2), path_graph(2))).strategy ==
            "product");
    REQUIRE(construct_certificate(cycle_graph(5)).strategy == "searched");
  }
  SECTION("every result validates on assorted graphs") {
    for (const Graph& g : {cycle_graph(4), cycle_graph(5), complete_graph(4), star_graph(4),
                           graph_join(path_graph(3), complete_graph(2)),
                           graph_union(star_graph(3), path_graph(2))}) {
      ConstructionResult res = construct_certificate(g);
      REQUIRE(res.status == ConstructStatus::Ok);
      require_full_certificate(g, res.certificate);
    }
  }
  SECTION("achievable lengths match search on all order-4 seeds") {
    for (const Graph& g : testing::all_labeled_graphs(4)) {
      ConstructionResult res = construct_certificate(g);
      REQUIRE(res.status == ConstructStatus::Ok);
      require_full_certificate(g, res.certificate);
    }
  }
  SECTION("deterministic output bytes") {
    Graph g = star_graph(4);
    ConstructionResult a = construct_certificate(g);
    ConstructionResult b = construct_certificate(g);
    REQUIRE(certificate_to_string(g, Mode::TARS, a.certificate) ==
            certificate_to_string(g, Mode::TARS, b.certificate));
  }
}

TEST_CASE("certificate files round-trip") {
  Graph g = star_graph(3);
  ConstructionResult res = construct_certificate(g);
  std::string text = certificate_to_string(g, Mode::TARS, res.certificate);
  std::istringstream in(text);
  CertificateFile cf = load_certificate(in);
  REQUIRE(cf.seed == g);
  REQUIRE(cf.mode == Mode::TARS);
  REQUIRE(cf.certificate.cycles == res.certificate.cycles);
  ReconGraph r = build_recon_graph(cf.seed, cf.mode);
  REQUIRE_FALSE(validate_certificate(r, cf.certificate));
  SECTION("tampering is caught") {
    auto broken = cf.certificate;
    std::swap(broken.cycles[9][0], broken.cycles[9][3]);
    REQUIRE(validate_certificate(r, broken));
  }
}
