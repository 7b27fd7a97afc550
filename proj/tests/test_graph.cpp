#include <catch2/catch_amalgamated.hpp>

#include "tars/graph.hpp"
#include "test_util.hpp"

using namespace tars;

TEST_CASE("edge list parsing") {
  SECTION("smallest edge") {
    Graph g = parse_edge_list("n 2\n0 1\n");
    REQUIRE(g.order == 2);
    REQUIRE(g.edge_count() == 1);
    REQUIRE(g.adjacent(0, 1));
  }
  SECTION("star with center 0") {
    Graph g = parse_edge_list("n 4\n0 1\n0 2\n0 3\n");
    REQUIRE(g.order == 4);
    REQUIRE(g.edge_count() == 3);
    REQUIRE(g.degree(0) == 3);
  }
  SECTION("duplicate edges collapse") {
    Graph g = parse_edge_list("n 3\n0 1\n0 1\n");
    REQUIRE(g.order == 3);
    REQUIRE(g.edge_count() == 1);
  }
  SECTION("comments and blank lines") {
    Graph g = parse_edge_list("# a star\nn 3\n\n0 1 # pendant\n1 2\n");
    REQUIRE(g.edge_count() == 2);
  }
  SECTION("errors") {
    REQUIRE_THROWS_AS(parse_edge_list("0 1\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_edge_list("n 2\n0 5\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_edge_list("n 2\n1 1\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_edge_list("n 2\nnope\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_edge_list("n 99\n"), std::invalid_argument);
  }
}

TEST_CASE("graph6 decoding") {
  SECTION("K2") {
    Graph g = parse_graph6("A_");
    REQUIRE(g.order == 2);
    REQUIRE(g.adjacent(0, 1));
  }
  SECTION("K1") {
    Graph g = parse_graph6("@");
    REQUIRE(g.order == 1);
    REQUIRE(g.edge_count() == 0);
  }
  SECTION("order-5 star decodes and round-trips") {
    Graph g = parse_graph6("D?{");
    REQUIRE(g.order == 5);
    REQUIRE(encode_graph6(g) == "D?{");
  }
  SECTION("errors") {
    REQUIRE_THROWS_AS(parse_graph6(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_graph6("A"), std::invalid_argument);     // truncated payload
    REQUIRE_THROWS_AS(parse_graph6("A\x07"), std::invalid_argument);  // invalid character
  }
  SECTION("decode/encode is the identity on random graphs up to order 12") {
    std::mt19937 rng(20240901);
    for (int n = 0; n <= 12; ++n)
      for (int rep = 0; rep < 20; ++rep) {
        Graph g = testing::random_graph(rng, n, 0.4);
        std::string enc = encode_graph6(g);
        REQUIRE(parse_graph6(enc) == g);
      }
  }
}

TEST_CASE("union, join, Cartesian product") {
  Graph k1(1), k2 = complete_graph(2), p2 = complete_graph(2);
  SECTION("union basics") {
    Graph u = graph_union(k1, k1);
    REQUIRE(u.order == 2);
    REQUIRE(u.edge_count() == 0);
    Graph two_k2 = graph_union(p2, p2);
    REQUIRE(two_k2.order == 4);
    REQUIRE(two_k2.adjacent(0, 1));
    REQUIRE(two_k2.adjacent(2, 3));
    REQUIRE(two_k2.edge_count() == 2);
    REQUIRE(graph_union(p2, Graph(0)) == p2);
  }
  SECTION("join basics") {
    REQUIRE(graph_join(k1, k1) == complete_graph(2));
    Graph star = graph_join(Graph(4), k1);
    REQUIRE(star.order == 5);
    REQUIRE(star.degree(4) == 4);
    REQUIRE(star.edge_count() == 4);
    REQUIRE(graph_join(k2, k2) == complete_graph(4));
  }
  SECTION("products") {
    Graph c4 = cartesian_product(k2, k2);
    REQUIRE(c4.order == 4);
    REQUIRE(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) REQUIRE(c4.degree(v) == 2);
    Graph grid = cartesian_product(p2, path_graph(3));
    REQUIRE(grid.order == 6);
    REQUIRE(grid.edge_count() == 7);
    Graph g = parse_graph6("D?{");
    Graph same = cartesian_product(g, Graph(1));
    REQUIRE(same == g);
  }
  SECTION("edge-count identities on random pairs") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 30; ++rep) {
      Graph g = testing::random_graph(rng, 1 + rep % 5, 0.5);
      Graph h = testing::random_graph(rng, 1 + (rep / 5) % 4, 0.5);
      REQUIRE(graph_join(g, h).edge_count() ==
              g.edge_count() + h.edge_count() + g.order * h.order);
      if (g.order * h.order <= kMaxOrder)
        REQUIRE(cartesian_product(g, h).edge_count() ==
                g.order * h.edge_count() + h.order * g.edge_count());
    }
  }
}

TEST_CASE("components and induced subgraphs") {
  Graph g = parse_edge_list("n 5\n0 2\n2 4\n1 3\n");
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  REQUIRE(comps[0] == 0b10101u);
  REQUIRE(comps[1] == 0b01010u);
  std::vector<int> old_ids;
  Graph sub = induced_subgraph(g, comps[0], &old_ids);
  REQUIRE(sub.order == 3);
  REQUIRE(old_ids == std::vector<int>{0, 2, 4});
  REQUIRE(sub.adjacent(0, 1));
  REQUIRE(sub.adjacent(1, 2));
  REQUIRE_FALSE(sub.adjacent(0, 2));
  REQUIRE(is_forest(g));
  REQUIRE_FALSE(is_forest(cycle_graph(4)));
}
