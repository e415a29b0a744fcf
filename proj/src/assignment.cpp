#include "bandwidth/assignment.hpp"

#include <cmath>
#include <cstdlib>

namespace bandwidth {

AssignmentEnumerator::AssignmentEnumerator(const RootedTree& tree, int n, int b,
                                           const Graph* prune_graph)
    : tree_(tree), n_(n), b_(b), preorder_(tree.preorder()) {
  if (b < 1) throw Error("segment assignments need b >= 1");
  if (tree.size() != n || n < 2) throw Error("segment assignments need a spanning tree on n >= 2");
  current_.n = n;
  current_.b = b;
  current_.phi.assign(n, Segment{});
  earlier_neighbors_.assign(n, {});
  if (prune_graph != nullptr) {
    if (prune_graph->vertex_count() != n) throw Error("prune graph size mismatch");
    std::vector<int> rank(n);
    for (std::size_t k = 0; k < preorder_.size(); ++k) rank[preorder_[k]] = static_cast<int>(k);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : prune_graph->neighbors(v)) {
        if (rank[u] < rank[v]) earlier_neighbors_[v].push_back(u);
      }
    }
  }
}

bool AssignmentEnumerator::for_each(const Visitor& visit) {
  const Vertex root = tree_.root;
  for (int i = root_first_index(); i <= root_last_index(); ++i) {
    Segment s{i, i + 2};
    if (!segment_nonempty(s, b_, n_)) continue;
    current_.phi[root] = s;
    if (!assign_from(1, visit)) return false;
  }
  return true;
}

bool AssignmentEnumerator::consistent_with_earlier(Vertex v) const {
  for (Vertex u : earlier_neighbors_[v]) {
    if (!edge_compatible(current_.phi[u], current_.phi[v])) return false;
  }
  return true;
}

bool AssignmentEnumerator::assign_from(std::size_t k, const Visitor& visit) {
  if (k == preorder_.size()) {
    ++stats_.generated;
    return visit(current_);
  }
  const Vertex v = preorder_[k];
  const int i = current_.phi[tree_.parent[v]].lo;

  auto try_segment = [&](Segment s) {
    if (!segment_nonempty(s, b_, n_)) return true;
    current_.phi[v] = s;
    if (!consistent_with_earlier(v)) {
      ++stats_.pruned_partial;
      return true;
    }
    return assign_from(k + 1, visit);
  };

  if (tree_.is_leaf(v)) return try_segment({i - 1, i + 3});
  return try_segment({i - 1, i + 1}) && try_segment({i + 1, i + 3});
}

double assignment_count_ceiling(int n) { return (n + 1) * std::ldexp(1.0, n - 1); }

bool edge_compatible(const Segment& a, const Segment& b) noexcept {
  return a.hi >= b.lo && b.hi >= a.lo;
}

bool edge_filter(const SegmentAssignment& assignment, const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (!edge_compatible(assignment.phi[u], assignment.phi[v])) return false;
  }
  return true;
}

bool consistency_witness(const SegmentAssignment& assignment, const Ordering& pi) {
  if (pi.size() != static_cast<int>(assignment.phi.size())) return false;
  for (Vertex v = 0; v < pi.size(); ++v) {
    if (!segment_range(assignment.phi[v], assignment.b, assignment.n).contains(pi.position[v])) {
      return false;
    }
  }
  return true;
}

bool satisfies_tree_rules(const SegmentAssignment& assignment, const RootedTree& tree) {
  for (Vertex v = 0; v < tree.size(); ++v) {
    const Segment& s = assignment.phi[v];
    if (!segment_nonempty(s, assignment.b, assignment.n)) return false;
    if (tree.is_leaf(v)) {
      if (s.width() != 4) return false;
      const Segment& parent = assignment.phi[tree.parent[v]];
      if (s.lo != parent.lo - 1 || s.hi != parent.lo + 3) return false;
    } else {
      if (s.width() != 2) return false;
      if (v != tree.root && std::abs(s.lo - assignment.phi[tree.parent[v]].lo) != 1) return false;
    }
  }
  return true;
}

}  // namespace bandwidth
