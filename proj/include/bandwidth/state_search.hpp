#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bandwidth/assignment.hpp"
#include "bandwidth/geometry.hpp"
#include "bandwidth/graph.hpp"

namespace bandwidth {

// Partial map vertex -> base segment index, filled one color-order position at a time.
struct SearchState {
  static constexpr int kUndefined = -1;

  std::vector<int> assigned;
  int count = 0;

  static SearchState empty(int n) { return {std::vector<int>(n, kUndefined), 0}; }
  bool defined(Vertex v) const { return assigned[v] != kUndefined; }

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

// Packed per-vertex codes: 0 when undefined, else 1 + (t - phi(v).lo). Inner vertices use
// codes 0..2 and leaves 0..4, so three bits per vertex suffice.
struct StateKey {
  static constexpr int kBitsPerVertex = 3;
  static constexpr int kVerticesPerWord = 64 / kBitsPerVertex;

  std::vector<std::uint64_t> words;

  friend bool operator==(const StateKey&, const StateKey&) = default;
  template <typename H>
  friend H AbslHashValue(H h, const StateKey& key) {
    return H::combine(std::move(h), key.words);
  }
};

int state_code(const SearchState& s, const SegmentAssignment& phi, Vertex v);
StateKey encode_state(const SearchState& s, const SegmentAssignment& phi);
SearchState decode_state(const StateKey& key, const SegmentAssignment& phi);

// Whether defining s(v) = t yields an extension that is again a state.
bool is_extension_candidate(const SearchState& s, const SegmentAssignment& phi, const Graph& g,
                            Vertex v, int t);
// Undefined vertices, ascending, that may take base segment t next.
std::vector<Vertex> extend_candidates(const SearchState& s, const SegmentAssignment& phi,
                                      const Graph& g, int t);
// Throws std::logic_error when v is already defined.
SearchState extend(const SearchState& s, Vertex v, int t);

enum class SearchOutcome { found, exhausted, budget_exhausted, cancelled };
std::string to_string(SearchOutcome outcome);

struct SearchLimits {
  std::uint64_t max_states = std::uint64_t{1} << 26;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  const std::atomic<bool>* cancel = nullptr;
  // Called once for every newly visited state; for tests and tracing.
  std::function<void(const SearchState&)> observer;
};

struct SearchStats {
  std::uint64_t states_visited = 0;  // distinct states, including the empty one
  int depth_max = 0;
  std::uint64_t peak_visited = 0;    // visited-set size at its largest
  SearchOutcome result = SearchOutcome::exhausted;
};

struct SearchResult {
  std::optional<Ordering> ordering;
  SearchStats stats;
};

// Depth-first search over states for one fixed assignment. Returns an ordering with bandwidth
// at most phi.b that is consistent with phi, or none when no such ordering exists. Each state is
// expanded at most once.
SearchResult dfs_decide(const SegmentAssignment& phi, const Graph& g,
                        const SearchLimits& limits = {});

// 3^(n-L) * 4^L: the most states one run can visit with L tree leaves.
double per_run_state_ceiling(int n, int leaves);

}  // namespace bandwidth
