#include "bandwidth/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bandwidth {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int n) : n_(n), adjacency_(n < 0 ? 0 : n) {
  if (n < 0) throw Error("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Ordering::is_bijection() const {
  const int n = size();
  std::vector<char> seen(n, 0);
  for (int p : position) {
    if (p < 1 || p > n || seen[p - 1]) return false;
    seen[p - 1] = 1;
  }
  return true;
}

std::vector<Vertex> Ordering::vertices_by_position() const {
  std::vector<Vertex> out(position.size(), -1);
  for (int v = 0; v < size(); ++v) out[position[v] - 1] = v;
  return out;
}

Ordering Ordering::reversed() const {
  Ordering r{position};
  for (int& p : r.position) p = size() + 1 - p;
  return r;
}

Ordering Ordering::identity(int n) {
  Ordering r{std::vector<int>(n)};
  std::iota(r.position.begin(), r.position.end(), 1);
  return r;
}

Ordering Ordering::from_sequence(const std::vector<Vertex>& vertices_in_order) {
  Ordering r{std::vector<int>(vertices_in_order.size(), 0)};
  for (std::size_t i = 0; i < vertices_in_order.size(); ++i) {
    r.position.at(vertices_in_order[i]) = static_cast<int>(i) + 1;
  }
  return r;
}

int RootedTree::leaf_count() const {
  int count = 0;
  for (Vertex v = 0; v < size(); ++v) count += is_leaf(v) ? 1 : 0;
  return count;
}

std::vector<Vertex> RootedTree::preorder() const {
  std::vector<Vertex> order;
  order.reserve(parent.size());
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long parse_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two integers");
    long long a = parse_integer(tokens[0], line_no);
    long long b = parse_integer(tokens[1], line_no);
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative size in header");
      if (a > (1 << 24)) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 20)));
    } else {
      if (static_cast<long long>(edges.size()) >= m) {
        throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
      }
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(n - 1));
      }
      if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(line_no, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<Component> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Component> out;
  for (Vertex start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    auto dist = bfs_distances(g, start);
    Component c;
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] >= 0) c.original.push_back(v);
    }
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < c.original.size(); ++i) {
      local[c.original[i]] = static_cast<int>(i);
      label[c.original[i]] = static_cast<int>(out.size());
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges()) {
      if (local[u] >= 0) edges.emplace_back(local[u], local[v]);
    }
    c.graph = Graph(static_cast<int>(c.original.size()), edges);
    out.push_back(std::move(c));
  }
  return out;
}

RootedTree spanning_tree(const Graph& g, Vertex root) {
  const int n = g.vertex_count();
  if (n < 1) throw Error("spanning tree of an empty graph");
  if (root < 0 || root >= n) throw Error("root " + std::to_string(root) + " out of range");
  RootedTree tree;
  tree.root = root;
  tree.parent.assign(n, -1);
  tree.children.assign(n, {});
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      ++reached;
      tree.parent[u] = v;
      tree.children[v].push_back(u);
      queue.push_back(u);
    }
  }
  if (reached != n) throw Error("graph is not connected");
  return tree;
}

int ordering_bandwidth(const Graph& g, const Ordering& pi) {
  if (pi.size() != g.vertex_count() || !pi.is_bijection()) {
    throw Error("ordering is not a bijection onto 1.." + std::to_string(g.vertex_count()));
  }
  int best = 0;
  for (auto [u, v] : g.edges()) {
    best = std::max(best, std::abs(pi.position[u] - pi.position[v]));
  }
  return best;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw Error("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace bandwidth
