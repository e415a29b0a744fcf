#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bandwidth/geometry.hpp"
#include "bandwidth/graph.hpp"

namespace bandwidth {

// Maps every vertex to a segment: inner tree vertices (and the root) get width-2 segments,
// tree leaves get width-4 segments centred on their parent's.
struct SegmentAssignment {
  int n = 0;
  int b = 1;
  std::vector<Segment> phi;

  const Segment& operator[](Vertex v) const { return phi[v]; }
  friend bool operator==(const SegmentAssignment&, const SegmentAssignment&) = default;
};

struct EnumerationStats {
  std::uint64_t generated = 0;       // complete assignments handed to the consumer
  std::uint64_t pruned_partial = 0;  // partial assignments cut by early edge checks
};

// Streams segment assignments over a rooted spanning tree. Vertices are assigned in tree
// preorder; an inner child takes the lower option (i-1, i+1) before (i+1, i+3). Assignments
// touching an empty segment are skipped.
//
// With a prune graph, a partial assignment is abandoned as soon as one of its edges fails
// edge_filter; the set of complete assignments that pass edge_filter is unchanged.
class AssignmentEnumerator {
 public:
  using Visitor = std::function<bool(const SegmentAssignment&)>;

  AssignmentEnumerator(const RootedTree& tree, int n, int b, const Graph* prune_graph = nullptr);

  // Visits assignments until exhaustion or until visit returns false. Returns true when the
  // stream was exhausted.
  bool for_each(const Visitor& visit);

  const EnumerationStats& stats() const noexcept { return stats_; }

  // Root segment indices i for which (i, i+2) is tried.
  int root_first_index() const noexcept { return -1; }
  int root_last_index() const noexcept { return base_segment_count(n_, b_) - 1; }

 private:
  bool assign_from(std::size_t k, const Visitor& visit);
  bool consistent_with_earlier(Vertex v) const;

  RootedTree tree_;
  int n_;
  int b_;
  std::vector<Vertex> preorder_;
  std::vector<std::vector<Vertex>> earlier_neighbors_;
  SegmentAssignment current_;
  EnumerationStats stats_;
};

// Upper bound (n+1) * 2^(n-1) on the number of generated assignments.
double assignment_count_ceiling(int n);

// Necessary condition for a consistent b-ordering: for every edge uv with phi(u) = (i, j)
// and phi(v) = (k, l), j >= k and l >= i.
bool edge_filter(const SegmentAssignment& assignment, const Graph& g);
bool edge_compatible(const Segment& a, const Segment& b) noexcept;

// True iff pi(v) lies in the positions of phi(v) for every vertex.
bool consistency_witness(const SegmentAssignment& assignment, const Ordering& pi);

// Structural rules of a segment assignment with respect to the tree.
bool satisfies_tree_rules(const SegmentAssignment& assignment, const RootedTree& tree);

}  // namespace bandwidth
