#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bandwidth {

using Vertex = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws Error on out-of-range endpoints or self-loops; duplicates are merged.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  // Neighbors in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Vertex -> 1-based position. A valid ordering is a bijection onto 1..n.
struct Ordering {
  std::vector<int> position;

  int size() const noexcept { return static_cast<int>(position.size()); }
  bool is_bijection() const;
  // Vertex placed at each position, index 0 holding position 1.
  std::vector<Vertex> vertices_by_position() const;
  Ordering reversed() const;

  static Ordering identity(int n);
  static Ordering from_sequence(const std::vector<Vertex>& vertices_in_order);

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;                 // -1 for the root
  std::vector<std::vector<Vertex>> children;  // ascending order

  int size() const noexcept { return static_cast<int>(parent.size()); }
  bool is_leaf(Vertex v) const { return v != root && children[v].empty(); }
  int leaf_count() const;
  // Root first, each subtree visited before the next sibling.
  std::vector<Vertex> preorder() const;
};

struct Component {
  Graph graph;
  std::vector<Vertex> original;  // local vertex -> vertex of the input graph
};

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
// "n m" header followed by lexicographically sorted edges.
std::string write_graph(const Graph& g);

bool is_connected(const Graph& g);
// Components ordered by their smallest original vertex.
std::vector<Component> connected_components(const Graph& g);
// Breadth-first spanning tree, neighbors explored in ascending order.
RootedTree spanning_tree(const Graph& g, Vertex root = 0);

// Largest |pi(u) - pi(v)| over edges, 0 for edgeless graphs.
int ordering_bandwidth(const Graph& g, const Ordering& pi);

// Eccentricity-based diameter; requires a connected graph.
int diameter(const Graph& g);

}  // namespace bandwidth
