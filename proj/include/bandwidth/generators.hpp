#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bandwidth/graph.hpp"

namespace bandwidth {

enum class Family { path, cycle, complete, star, random_gnp, random_tree, caterpillar };

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family family);

struct GeneratorParams {
  // Vertex count; for star it is the number of leaves, for caterpillar the spine length.
  int size = 1;
  double edge_probability = 0.5;  // random_gnp
  int legs = 1;                   // caterpillar: leaves hung on each spine vertex
  bool connected = true;          // random_gnp: resample until connected
  std::uint64_t seed = 1;
};

// Deterministic for a fixed seed. Throws Error on invalid parameters.
Graph generate(Family family, const GeneratorParams& params);

}  // namespace bandwidth
