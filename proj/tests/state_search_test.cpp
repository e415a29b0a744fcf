#include <map>
#include <random>

#include "doctest.h"

#include "bandwidth/assignment.hpp"
#include "bandwidth/generators.hpp"
#include "bandwidth/state_search.hpp"
#include "oracles.hpp"

using namespace bandwidth;

namespace {

std::vector<SegmentAssignment> accepted_assignments(const Graph& g, const RootedTree& t, int b) {
  std::vector<SegmentAssignment> out;
  AssignmentEnumerator e(t, g.vertex_count(), b, &g);
  e.for_each([&](const SegmentAssignment& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

// The assignment built top-down from an ordering, choosing the segment holding each vertex.
SegmentAssignment assignment_from_ordering(const RootedTree& t, const Ordering& pi, int b) {
  const int n = t.size();
  SegmentAssignment a{n, b, std::vector<Segment>(n)};
  const int root_seg = (pi.position[t.root] - 1) / (b + 1);
  a.phi[t.root] = {root_seg, root_seg + 2};
  for (Vertex v : t.preorder()) {
    if (v == t.root) continue;
    const int i = a.phi[t.parent[v]].lo;
    if (t.is_leaf(v)) {
      a.phi[v] = {i - 1, i + 3};
    } else {
      const int seg = (pi.position[v] - 1) / (b + 1);
      a.phi[v] = seg <= i ? Segment{i - 1, i + 1} : Segment{i + 1, i + 3};
    }
  }
  return a;
}

}  // namespace

TEST_CASE("extend_candidates on P2") {
  Graph g(2, {{0, 1}});
  SegmentAssignment phi{2, 1, {{0, 2}, {-1, 3}}};
  CHECK(extend_candidates(SearchState::empty(2), phi, g, 0) == std::vector<Vertex>{0, 1});
}

TEST_CASE("extend_candidates conditions") {
  // Path 0-1-2, b = 1, n = 6: base segments 0..2.
  Graph g = generate(Family::path, {.size = 3});
  SegmentAssignment phi{6, 1, {{0, 2}, {1, 3}, {0, 4}}};
  SearchState s = SearchState::empty(3);
  // Vertex 1 needs t inside (1, 3).
  CHECK_FALSE(is_extension_candidate(s, phi, g, 1, 0));
  // Vertex 0 at t = 0 leaves neighbour 1 undefined with phi(1).lo = 1 > 0.
  CHECK_FALSE(is_extension_candidate(s, phi, g, 0, 0));
  CHECK(is_extension_candidate(s, phi, g, 0, 1));

  SearchState one = extend(s, 0, 1);
  // A neighbour of a vertex in segment 1 may take segment 0 or 1 next, never 2.
  CHECK(is_extension_candidate(one, phi, g, 1, 1));
  CHECK_FALSE(is_extension_candidate(one, phi, g, 1, 2));
  SearchState high = extend(s, 1, 2);
  CHECK_FALSE(is_extension_candidate(high, phi, g, 2, 0));  // k = t + 2
  CHECK(is_extension_candidate(high, phi, g, 2, 1));
  CHECK_FALSE(is_extension_candidate(one, phi, g, 0, 1));  // already defined
}

TEST_CASE("extend") {
  SearchState s = SearchState::empty(3);
  SearchState a = extend(s, 0, 0);
  CHECK(a.count == 1);
  CHECK(a.assigned[0] == 0);
  CHECK(s.count == 0);
  SearchState c = extend(a, 2, 1);
  CHECK(c.assigned[0] == 0);
  CHECK(c.assigned[2] == 1);
  CHECK(c.count == 2);
  CHECK_THROWS_AS(extend(c, 0, 1), std::logic_error);
}

TEST_CASE("state keys") {
  SegmentAssignment phi{4, 1, {{0, 2}, {-1, 3}, {1, 3}, {0, 2}}};
  StateKey empty = encode_state(SearchState::empty(4), phi);
  for (auto w : empty.words) CHECK(w == 0u);
  SearchState a = extend(SearchState::empty(4), 1, 0);
  SearchState c = extend(SearchState::empty(4), 1, 1);
  CHECK_FALSE(encode_state(a, phi) == encode_state(c, phi));
  CHECK(state_code(a, phi, 1) == 2);
  CHECK(state_code(c, phi, 1) == 3);
  CHECK(decode_state(encode_state(c, phi), phi) == c);

  // Wide keys span several words.
  const int n = 30;
  SegmentAssignment wide{n, 1, std::vector<Segment>(n, Segment{-1, 3})};
  SearchState s = SearchState::empty(n);
  for (Vertex v = 0; v < n; v += 3) s = extend(s, v, v % 2);
  StateKey k = encode_state(s, wide);
  CHECK(k.words.size() == 2u);
  CHECK(decode_state(k, wide) == s);
}

TEST_CASE("K3 has no 1-ordering under any assignment") {
  Graph g = generate(Family::complete, {.size = 3});
  RootedTree t = spanning_tree(g, 0);
  auto all = accepted_assignments(g, t, 1);
  CHECK_FALSE(all.empty());
  for (const auto& phi : all) {
    SearchResult r = dfs_decide(phi, g);
    CHECK_FALSE(r.ordering.has_value());
    CHECK(r.stats.result == SearchOutcome::exhausted);
  }
}

TEST_CASE("P2 with b = 1 finds a 1-ordering") {
  Graph g(2, {{0, 1}});
  RootedTree t = spanning_tree(g, 0);
  for (const auto& phi : accepted_assignments(g, t, 1)) {
    SearchResult r = dfs_decide(phi, g);
    REQUIRE(r.ordering.has_value());
    CHECK(ordering_bandwidth(g, *r.ordering) == 1);
  }
}

TEST_CASE("search is sound, complete per assignment and within the state bound") {
  std::mt19937_64 rng(99);
  int with_witness = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5;
    Graph g = testing::random_connected_graph(n, 0.3, rng);
    RootedTree t = spanning_tree(g, trial % n);
    const double ceiling = per_run_state_ceiling(n, t.leaf_count());
    for (int b = 1; b < n; ++b) {
      auto orderings = testing::all_b_orderings(g, b);
      for (const auto& phi : accepted_assignments(g, t, b)) {
        bool expected = false;
        for (const auto& pos : orderings) {
          if (consistency_witness(phi, Ordering{pos})) {
            expected = true;
            break;
          }
        }
        SearchResult r = dfs_decide(phi, g);
        CHECK(r.ordering.has_value() == expected);
        if (r.ordering) {
          ++with_witness;
          CHECK(ordering_bandwidth(g, *r.ordering) <= b);
          CHECK(consistency_witness(phi, *r.ordering));
        }
        CHECK(static_cast<double>(r.stats.states_visited) <= ceiling);
        CHECK(r.stats.peak_visited == r.stats.states_visited);
      }
    }
  }
  CHECK(with_witness > 0);
}

TEST_CASE("states on the stack fill the first color-order segments") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6 + trial % 3;
    Graph g = testing::random_connected_graph(n, 0.3, rng);
    RootedTree t = spanning_tree(g, 0);
    const int b = 2;
    ColorOrder order = color_order(n, b);
    for (const auto& phi : accepted_assignments(g, t, b)) {
      SearchLimits limits;
      int observed = 0;
      limits.observer = [&](const SearchState& s) {
        ++observed;
        int defined = 0;
        std::map<int, int> used;
        for (Vertex v = 0; v < n; ++v) {
          if (!s.defined(v)) continue;
          ++defined;
          ++used[s.assigned[v]];
          CHECK(phi.phi[v].contains_base(s.assigned[v]));
        }
        CHECK(defined == s.count);
        std::map<int, int> expected;
        for (int k = 0; k < s.count; ++k) ++expected[order.step_base_segment[k]];
        CHECK(used == expected);
        CHECK(decode_state(encode_state(s, phi), phi) == s);
        for (auto [u, v] : g.edges()) {
          if (s.defined(u) && s.defined(v)) CHECK(std::abs(s.assigned[u] - s.assigned[v]) <= 1);
        }
      };
      SearchResult r = dfs_decide(phi, g, limits);
      CHECK(static_cast<std::uint64_t>(observed) == r.stats.states_visited);
    }
  }
}

TEST_CASE("search limits") {
  Graph g = generate(Family::cycle, {.size = 8});
  RootedTree t = spanning_tree(g, 0);
  auto all = accepted_assignments(g, t, 2);
  REQUIRE_FALSE(all.empty());

  SUBCASE("state cap") {
    SearchLimits limits;
    limits.max_states = 3;
    bool saw_budget = false;
    for (const auto& phi : all) {
      SearchResult r = dfs_decide(phi, g, limits);
      CHECK(r.stats.states_visited <= 3u);
      if (r.stats.result == SearchOutcome::budget_exhausted) {
        saw_budget = true;
        CHECK_FALSE(r.ordering.has_value());
      }
    }
    CHECK(saw_budget);
  }
  SUBCASE("deadline in the past") {
    Graph big = generate(Family::random_gnp, {.size = 16, .edge_probability = 0.2, .seed = 2});
    RootedTree bt = spanning_tree(big, 0);
    SearchLimits limits;
    limits.deadline = std::chrono::steady_clock::now();
    int cut = 0;
    for (const auto& phi : accepted_assignments(big, bt, 5)) {
      SearchResult r = dfs_decide(phi, big, limits);
      if (r.stats.result == SearchOutcome::budget_exhausted) ++cut;
      if (cut > 0) break;
    }
    CHECK(cut > 0);
  }
  SUBCASE("cancellation") {
    Graph big = generate(Family::random_gnp, {.size = 16, .edge_probability = 0.2, .seed = 2});
    RootedTree bt = spanning_tree(big, 0);
    std::atomic<bool> cancel{true};
    SearchLimits limits;
    limits.cancel = &cancel;
    int cut = 0;
    for (const auto& phi : accepted_assignments(big, bt, 5)) {
      if (dfs_decide(phi, big, limits).stats.result == SearchOutcome::cancelled) ++cut;
      if (cut > 0) break;
    }
    CHECK(cut > 0);
  }
}

TEST_CASE("graphs above 21 vertices use wide keys") {
  const int n = 24;
  Graph g = generate(Family::caterpillar, {.size = 8, .legs = 2});
  REQUIRE(g.vertex_count() == n);
  // Spine vertex s at position 3s+2 with its legs on either side.
  std::vector<Vertex> seq;
  for (int s = 0; s < 8; ++s) {
    seq.push_back(8 + 2 * s);
    seq.push_back(s);
    seq.push_back(8 + 2 * s + 1);
  }
  Ordering pi = Ordering::from_sequence(seq);
  const int b = ordering_bandwidth(g, pi);
  REQUIRE(b == 3);
  RootedTree t = spanning_tree(g, 0);
  SegmentAssignment phi = assignment_from_ordering(t, pi, b);
  REQUIRE(satisfies_tree_rules(phi, t));
  REQUIRE(consistency_witness(phi, pi));
  SearchResult r = dfs_decide(phi, g);
  REQUIRE(r.ordering.has_value());
  CHECK(ordering_bandwidth(g, *r.ordering) <= b);
  CHECK(consistency_witness(phi, *r.ordering));
  CHECK(static_cast<double>(r.stats.states_visited) <= per_run_state_ceiling(n, t.leaf_count()));
}

TEST_CASE("per_run_state_ceiling") {
  CHECK(per_run_state_ceiling(3, 1) == 36.0);
  CHECK(per_run_state_ceiling(5, 0) == 243.0);
  CHECK(per_run_state_ceiling(4, 4) == 256.0);
}
