#include <catch2/catch_amalgamated.hpp>

#include "tars/structure.hpp"
#include "test_util.hpp"

using namespace tars;

TEST_CASE("forest reduction") {
  SECTION("P2 is already a base") {
    auto seq = find_reduction_sequence(path_graph(2));
    REQUIRE(seq.steps.empty());
    REQUIRE(seq.base == path_graph(2));
  }
  SECTION("P4 reduces by one A-step") {
    auto seq = find_reduction_sequence(path_graph(4));
    REQUIRE(seq.steps.size() == 1);
    REQUIRE(seq.steps[0].kind == OpKind::OpA);
    REQUIRE(seq.base.order == 2);
    REQUIRE(seq.base.edge_count() == 1);
  }
  SECTION("star reduces by twin-leaf steps") {
    auto seq = find_reduction_sequence(star_graph(3));
    REQUIRE(seq.steps.size() == 2);
    REQUIRE(seq.steps[0].kind == OpKind::OpB);
    REQUIRE(seq.steps[1].kind == OpKind::OpB);
    REQUIRE(seq.base.order == 2);
  }
  SECTION("cycle input is rejected") {
    REQUIRE_THROWS_AS(find_reduction_sequence(cycle_graph(4)), std::invalid_argument);
  }
  SECTION("replay reproduces the base on random forests") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
      Graph t = testing::random_tree(rng, 2 + rep % 9);
      auto seq = find_reduction_sequence(t);
      REQUIRE(replay_reduction(t, seq.steps) == seq.base);
      for (VertexSet comp : components(seq.base)) REQUIRE(popcount(comp) <= 2);
    }
  }
  SECTION("isolated vertices pass through") {
    Graph f = graph_union(path_graph(3), Graph(2));
    auto seq = find_reduction_sequence(f);
    REQUIRE(seq.base.order == 4);  // P2 + two isolated vertices
    auto comps = components(seq.base);
    REQUIRE(comps.size() == 3);
  }
}

TEST_CASE("join decomposition") {
  SECTION("complete graph splits off vertex 0") {
    auto split = join_decompose(complete_graph(4));
    REQUIRE(split);
    REQUIRE(split->g1.order == 1);
    REQUIRE(split->g2 == complete_graph(3));
  }
  SECTION("C4 = 2K1 v 2K1") {
    auto split = join_decompose(cycle_graph(4));
    REQUIRE(split);
    REQUIRE(split->g1.order == 2);
    REQUIRE(split->g1.edge_count() == 0);
    REQUIRE(split->g2.order == 2);
    REQUIRE(split->g2.edge_count() == 0);
    // opposite corners end up on the same side
    REQUIRE(split->verts1 == std::vector<int>{0, 2});
  }
  SECTION("P4 is not a join") { REQUIRE_FALSE(join_decompose(path_graph(4))); }
  SECTION("split reassembles to the original") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 40; ++rep) {
      Graph g = testing::random_graph(rng, 2 + rep % 6, 0.6);
      auto split = join_decompose(g);
      if (!split) continue;
      Graph j = graph_join(split->g1, split->g2);
      std::vector<int> perm = split->verts1;
      perm.insert(perm.end(), split->verts2.begin(), split->verts2.end());
      for (int a = 0; a < j.order; ++a)
        for (int b = a + 1; b < j.order; ++b)
          REQUIRE(j.adjacent(a, b) == g.adjacent(perm[a], perm[b]));
    }
  }
}

TEST_CASE("threshold recognition") {
  SECTION("complete graphs are threshold") {
    auto seq = threshold_sequence(complete_graph(3));
    REQUIRE(seq);
    REQUIRE(seq->size() == 3);
    REQUIRE((*seq)[0].tag == ThresholdTag::Start);
    REQUIRE((*seq)[1].tag == ThresholdTag::Universal);
    REQUIRE((*seq)[2].tag == ThresholdTag::Universal);
  }
  SECTION("P4 is not threshold") { REQUIRE_FALSE(threshold_sequence(path_graph(4))); }
  SECTION("star: leaves first, center last") {
    auto seq = threshold_sequence(star_graph(3));
    REQUIRE(seq);
    std::vector<ThresholdTag> tags;
    for (const auto& s : *seq) tags.push_back(s.tag);
    REQUIRE(tags == std::vector<ThresholdTag>{ThresholdTag::Start, ThresholdTag::Isolated,
                                              ThresholdTag::Isolated, ThresholdTag::Universal});
    REQUIRE(seq->back().vertex == 0);  // the center
  }
  SECTION("replay rebuilds the graph up to the recorded vertex order") {
    std::mt19937 rng(5);
    int found = 0;
    for (int rep = 0; rep < 200; ++rep) {
      Graph g = testing::random_graph(rng, 1 + rep % 7, 0.5);
      auto seq = threshold_sequence(g);
      if (!seq) continue;
      ++found;
      Graph rebuilt = replay_threshold(*seq);
      REQUIRE(rebuilt.order == g.order);
      for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
          REQUIRE(rebuilt.adjacent(a, b) == g.adjacent((*seq)[a].vertex, (*seq)[b].vertex));
    }
    REQUIRE(found > 20);
  }
}
