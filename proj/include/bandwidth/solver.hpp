#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandwidth/graph.hpp"

namespace bandwidth {

struct Budget {
  std::uint64_t max_states_per_run = std::uint64_t{1} << 26;
  std::uint64_t max_total_states = 0;  // 0: unlimited
  double max_seconds = 0.0;            // 0: unlimited
};

struct SolverOptions {
  Vertex root = 0;          // spanning tree root; per component, falls back to its first vertex
  int workers = 1;          // 1 keeps stream order and is fully deterministic
  bool prune_phase1 = true; // drop partial assignments already failing an edge check
};

enum class Decision { yes, no, unknown };
std::string to_string(Decision d);

struct DecideStats {
  std::uint64_t assignments_generated = 0;
  std::uint64_t assignments_accepted = 0;
  std::uint64_t dfs_runs = 0;
  std::uint64_t total_states = 0;
  std::uint64_t max_run_states = 0;
  std::uint64_t peak_visited = 0;
  std::uint64_t budget_exhausted_runs = 0;
  std::uint64_t run_bound_violations = 0;    // runs above 3^(n-L) 4^L
  int leaves = 0;
  double assignment_ceiling = 0.0;           // (n+1) 2^(n-1)
  double run_state_ceiling = 0.0;            // 3^(n-L) 4^L
  double total_state_ceiling = 0.0;          // 3(n+1) 4.8285^n
  bool total_bound_violated = false;
  double wall_seconds = 0.0;
};

struct DecideResult {
  Decision decision = Decision::unknown;
  std::optional<Ordering> ordering;
  DecideStats stats;
};

// Is there an ordering of bandwidth at most b? Requires a connected graph, n >= 2 and
// 1 <= b < n. "unknown" is reported only when a budget ran out before an answer.
DecideResult decide(const Graph& g, int b, const Budget& budget = {},
                    const SolverOptions& options = {});

// decide for any graph and any b >= 0: components are decided separately and their witnesses
// laid out as contiguous blocks. Counters are summed over the component calls.
DecideResult decide_graph(const Graph& g, int b, const Budget& budget = {},
                          const SolverOptions& options = {});

enum class SolveStatus { optimal, unknown };
std::string to_string(SolveStatus s);

struct SolveStats {
  std::uint64_t decide_calls = 0;
  std::uint64_t assignments_generated = 0;
  std::uint64_t assignments_accepted = 0;
  std::uint64_t dfs_runs = 0;
  std::uint64_t total_states = 0;
  std::uint64_t max_run_states = 0;
  std::uint64_t max_decide_states = 0;
  std::uint64_t run_bound_violations = 0;
  std::uint64_t assignment_bound_violations = 0;
  std::uint64_t total_bound_violations = 0;
  std::uint64_t oracle_nodes = 0;
  double wall_seconds = 0.0;

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct ComponentResult {
  std::vector<Vertex> vertices;  // original labels
  int bandwidth = 0;             // best known upper bound
  int lower = 0;                 // proven lower bound
  SolveStatus status = SolveStatus::optimal;

  friend bool operator==(const ComponentResult&, const ComponentResult&) = default;
};

struct SolveResult {
  int bandwidth = 0;  // bandwidth of the witness; exact when status is optimal
  int lower = 0;      // proven lower bound; equals bandwidth when optimal
  Ordering ordering;
  SolveStatus status = SolveStatus::optimal;
  SolveStats stats;
  std::vector<ComponentResult> components;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

// Exact bandwidth with a witness. Components are solved independently and laid out as
// contiguous blocks, larger components first.
SolveResult minimize_bandwidth(const Graph& g, const Budget& budget = {},
                               const SolverOptions& options = {});

inline constexpr int kDefaultOracleLimit = 10;

// Branch and bound over permutations; shares no code with the segment search.
SolveResult oracle_bandwidth(const Graph& g, int max_vertices = kDefaultOracleLimit);

// max(ceil(maxdeg / 2), ceil((n - 1) / diameter)) for a connected graph; 0 when n <= 1.
int lower_bound(const Graph& g);

}  // namespace bandwidth
