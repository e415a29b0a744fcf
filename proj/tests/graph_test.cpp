#include <random>

#include "doctest.h"

#include "bandwidth/generators.hpp"
#include "bandwidth/graph.hpp"
#include "oracles.hpp"

using namespace bandwidth;

TEST_CASE("parse_graph reads the edge-list format") {
  SUBCASE("path P3") {
    Graph g = parse_graph("3 2\n0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
  }
  SUBCASE("single vertex") {
    Graph g = parse_graph("1 0");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("triangle") {
    Graph g = parse_graph("3 3\n0 1\n1 2\n0 2");
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(2, 0));
  }
  SUBCASE("comments, blank lines and duplicates") {
    Graph g = parse_graph("# header\n\n3 3\n  1 0\n# mid\n0 1\n2 1\n");
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
  }
}

TEST_CASE("parse_graph reports the offending line") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 1\n0 3\n") == 2);        // index >= n
  CHECK(line_of("3 1\n# c\n1 1\n") == 3);   // self-loop
  CHECK(line_of("3 1\n0 x\n") == 2);        // malformed
  CHECK(line_of("3 1\n0 1 2\n") == 2);      // extra token
  CHECK(line_of("2 1\n0 1\n1 0\n") == 3);   // more edges than declared
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("# only comments\n"), ParseError);
}

TEST_CASE("write_graph emits sorted edges and parses back") {
  Graph g(4, {{3, 2}, {0, 3}, {1, 0}});
  CHECK(write_graph(g) == "4 3\n0 1\n0 3\n2 3\n");
  CHECK(parse_graph(write_graph(g)) == g);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(generate(Family::path, {.size = 3})).size() == 1);

  auto two = connected_components(Graph(4, {{0, 2}, {1, 3}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].graph.vertex_count() == 2);
  CHECK(two[0].original == std::vector<Vertex>{0, 2});
  CHECK(two[1].original == std::vector<Vertex>{1, 3});
  CHECK(two[1].graph.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});

  auto singles = connected_components(Graph(3));
  CHECK(singles.size() == 3);
  for (const auto& c : singles) CHECK(c.graph.vertex_count() == 1);
}

TEST_CASE("spanning_tree is the BFS tree") {
  SUBCASE("K3 from 0") {
    RootedTree t = spanning_tree(generate(Family::complete, {.size = 3}), 0);
    CHECK(t.parent[1] == 0);
    CHECK(t.parent[2] == 0);
    CHECK(t.is_leaf(1));
    CHECK(t.is_leaf(2));
    CHECK_FALSE(t.is_leaf(0));
    CHECK(t.leaf_count() == 2);
  }
  SUBCASE("P3 from 0 is a chain") {
    RootedTree t = spanning_tree(generate(Family::path, {.size = 3}), 0);
    CHECK(t.parent[2] == 1);
    CHECK(t.leaf_count() == 1);
    CHECK(t.is_leaf(2));
    CHECK(t.preorder() == std::vector<Vertex>{0, 1, 2});
  }
  SUBCASE("star from the centre") {
    RootedTree t = spanning_tree(generate(Family::star, {.size = 4}), 0);
    CHECK(t.leaf_count() == 4);
  }
  SUBCASE("disconnected input") {
    CHECK_THROWS_AS(spanning_tree(Graph(3, {{0, 1}}), 0), Error);
  }
}

TEST_CASE("spanning_tree edges belong to the graph and span it") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_connected_graph(9, 0.3, rng);
    Vertex root = trial % 9;
    RootedTree t = spanning_tree(g, root);
    CHECK(t.preorder().size() == 9u);
    for (Vertex v = 0; v < 9; ++v) {
      if (v == root) {
        CHECK(t.parent[v] == -1);
      } else {
        CHECK(g.has_edge(v, t.parent[v]));
      }
      CHECK(t.is_leaf(v) == (v != root && t.children[v].empty()));
    }
  }
}

TEST_CASE("ordering_bandwidth") {
  Graph p3 = generate(Family::path, {.size = 3});
  CHECK(ordering_bandwidth(p3, Ordering::identity(3)) == 1);
  CHECK(ordering_bandwidth(p3, Ordering{{1, 3, 2}}) == 2);
  Graph k3 = generate(Family::complete, {.size = 3});
  testing::for_each_ordering(3, [&](const std::vector<int>& pos) {
    CHECK(ordering_bandwidth(k3, Ordering{pos}) == 2);
  });
  CHECK(ordering_bandwidth(Graph(4), Ordering::identity(4)) == 0);
  CHECK_THROWS_AS(ordering_bandwidth(p3, Ordering{{1, 1, 2}}), Error);
  CHECK_THROWS_AS(ordering_bandwidth(p3, Ordering{{1, 2}}), Error);
}

TEST_CASE("ordering_bandwidth is reversal invariant and within [0, n-1]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    Graph g = testing::random_connected_graph(n, 0.25, rng);
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    Ordering pi = Ordering::from_sequence(seq);
    const int bw = ordering_bandwidth(g, pi);
    CHECK(bw == ordering_bandwidth(g, pi.reversed()));
    CHECK(bw >= 0);
    CHECK(bw <= n - 1);
    CHECK(pi.vertices_by_position() == seq);
  }
}

TEST_CASE("generators") {
  CHECK(generate(Family::path, {.size = 4}).edges() ==
        std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(generate(Family::cycle, {.size = 3}) == generate(Family::complete, {.size = 3}));
  Graph star = generate(Family::star, {.size = 4});
  CHECK(star.vertex_count() == 5);
  CHECK(star.degree(0) == 4);
  Graph cat = generate(Family::caterpillar, {.size = 3, .legs = 2});
  CHECK(cat.vertex_count() == 9);
  CHECK(cat.edge_count() == 8u);
  CHECK(is_connected(cat));

  CHECK_THROWS_AS(generate(Family::path, {.size = 0}), Error);
  CHECK_THROWS_AS(generate(Family::cycle, {.size = 2}), Error);
  CHECK_THROWS_AS(generate(Family::random_gnp, {.size = 5, .edge_probability = 1.5}), Error);
  CHECK_THROWS_AS(generate(Family::random_gnp, {.size = 5, .edge_probability = 0.0}), Error);
}

TEST_CASE("random generators are deterministic, simple and connected") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorParams p{.size = 12, .edge_probability = 0.2, .seed = seed};
    Graph a = generate(Family::random_gnp, p);
    CHECK(a == generate(Family::random_gnp, p));
    CHECK(a.vertex_count() == 12);
    CHECK(is_connected(a));
    Graph t = generate(Family::random_tree, p);
    CHECK(t.edge_count() == 11u);
    CHECK(is_connected(t));
    for (Vertex v = 0; v < 12; ++v) CHECK_FALSE(a.has_edge(v, v));
  }
  GeneratorParams loose{.size = 12, .edge_probability = 0.05, .connected = false, .seed = 3};
  CHECK(generate(Family::random_gnp, loose).vertex_count() == 12);
}

TEST_CASE("diameter") {
  CHECK(diameter(generate(Family::path, {.size = 5})) == 4);
  CHECK(diameter(generate(Family::cycle, {.size = 6})) == 3);
  CHECK(diameter(Graph(1)) == 0);
  CHECK_THROWS_AS(diameter(Graph(2)), Error);
}
