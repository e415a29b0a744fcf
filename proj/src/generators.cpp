#include "bandwidth/generators.hpp"

#include <random>
#include <vector>

namespace bandwidth {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

constexpr int kMaxGnpAttempts = 10000;

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "gnp" || name == "random_gnp") return Family::random_gnp;
  if (name == "tree" || name == "random_tree") return Family::random_tree;
  if (name == "caterpillar") return Family::caterpillar;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::random_gnp: return "random_gnp";
    case Family::random_tree: return "random_tree";
    case Family::caterpillar: return "caterpillar";
  }
  return "unknown";
}

Graph generate(Family family, const GeneratorParams& params) {
  const int size = params.size;
  if (size < 1) throw Error(family_name(family) + ": size must be at least 1");
  EdgeList edges;
  std::mt19937_64 rng(params.seed);

  switch (family) {
    case Family::path:
      for (int v = 0; v + 1 < size; ++v) edges.emplace_back(v, v + 1);
      return Graph(size, edges);

    case Family::cycle:
      if (size < 3) throw Error("cycle: size must be at least 3");
      for (int v = 0; v < size; ++v) edges.emplace_back(v, (v + 1) % size);
      return Graph(size, edges);

    case Family::complete:
      for (int u = 0; u < size; ++u) {
        for (int v = u + 1; v < size; ++v) edges.emplace_back(u, v);
      }
      return Graph(size, edges);

    case Family::star:
      for (int leaf = 1; leaf <= size; ++leaf) edges.emplace_back(0, leaf);
      return Graph(size + 1, edges);

    case Family::random_gnp: {
      const double p = params.edge_probability;
      if (!(p >= 0.0 && p <= 1.0)) throw Error("random_gnp: probability must lie in [0, 1]");
      if (params.connected && size > 1 && p == 0.0) {
        throw Error("random_gnp: p = 0 cannot produce a connected graph");
      }
      std::bernoulli_distribution coin(p);
      for (int attempt = 0; attempt < kMaxGnpAttempts; ++attempt) {
        edges.clear();
        for (int u = 0; u < size; ++u) {
          for (int v = u + 1; v < size; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
          }
        }
        Graph g(size, edges);
        if (!params.connected || is_connected(g)) return g;
      }
      throw Error("random_gnp: no connected sample within the attempt limit");
    }

    case Family::random_tree:
      // Random recursive tree: vertex v attaches to a uniform earlier vertex.
      for (int v = 1; v < size; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
      }
      return Graph(size, edges);

    case Family::caterpillar: {
      if (params.legs < 0) throw Error("caterpillar: legs must be non-negative");
      const int total = size * (1 + params.legs);
      for (int s = 0; s + 1 < size; ++s) edges.emplace_back(s, s + 1);
      int next = size;
      for (int s = 0; s < size; ++s) {
        for (int l = 0; l < params.legs; ++l) edges.emplace_back(s, next++);
      }
      return Graph(total, edges);
    }
  }
  throw Error("unknown graph family");
}

}  // namespace bandwidth
