#include "bandwidth/state_search.hpp"

#include <absl/container/flat_hash_set.h>

#include <cmath>
#include <stdexcept>

namespace bandwidth {

int state_code(const SearchState& s, const SegmentAssignment& phi, Vertex v) {
  return s.defined(v) ? 1 + s.assigned[v] - phi.phi[v].lo : 0;
}

StateKey encode_state(const SearchState& s, const SegmentAssignment& phi) {
  const int n = static_cast<int>(s.assigned.size());
  StateKey key;
  key.words.assign((n + StateKey::kVerticesPerWord - 1) / StateKey::kVerticesPerWord, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto code = static_cast<std::uint64_t>(state_code(s, phi, v));
    key.words[v / StateKey::kVerticesPerWord] |=
        code << (StateKey::kBitsPerVertex * (v % StateKey::kVerticesPerWord));
  }
  return key;
}

SearchState decode_state(const StateKey& key, const SegmentAssignment& phi) {
  const int n = static_cast<int>(phi.phi.size());
  SearchState s = SearchState::empty(n);
  for (Vertex v = 0; v < n; ++v) {
    const int code = static_cast<int>(
        (key.words.at(v / StateKey::kVerticesPerWord) >>
         (StateKey::kBitsPerVertex * (v % StateKey::kVerticesPerWord))) & 7u);
    if (code != 0) {
      s.assigned[v] = phi.phi[v].lo + code - 1;
      ++s.count;
    }
  }
  return s;
}

bool is_extension_candidate(const SearchState& s, const SegmentAssignment& phi, const Graph& g,
                            Vertex v, int t) {
  if (s.defined(v) || !phi.phi[v].contains_base(t)) return false;
  for (Vertex u : g.neighbors(v)) {
    if (s.defined(u)) {
      // A vertex placed later in the color order sits in the same or the next lower segment.
      const int k = s.assigned[u];
      if (t < k - 1 || t > k) return false;
    } else if (phi.phi[u].lo > t) {
      return false;
    }
  }
  return true;
}

std::vector<Vertex> extend_candidates(const SearchState& s, const SegmentAssignment& phi,
                                      const Graph& g, int t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (is_extension_candidate(s, phi, g, v, t)) out.push_back(v);
  }
  return out;
}

SearchState extend(const SearchState& s, Vertex v, int t) {
  if (s.defined(v)) throw std::logic_error("vertex " + std::to_string(v) + " is already defined");
  SearchState next = s;
  next.assigned[v] = t;
  ++next.count;
  return next;
}

std::string to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::exhausted: return "exhausted";
    case SearchOutcome::budget_exhausted: return "budget_exhausted";
    case SearchOutcome::cancelled: return "cancelled";
  }
  return "unknown";
}

double per_run_state_ceiling(int n, int leaves) {
  return std::pow(3.0, n - leaves) * std::pow(4.0, leaves);
}

namespace {

// Key of up to 21 vertices in a single word.
struct NarrowKeys {
  using Key = std::uint64_t;
  static Key make(int /*n*/) { return 0; }
  static void set(Key& key, Vertex v, std::uint64_t code) {
    key |= code << (StateKey::kBitsPerVertex * v);
  }
  static void clear(Key& key, Vertex v) { key &= ~(std::uint64_t{7} << (StateKey::kBitsPerVertex * v)); }
};

struct WideKeys {
  using Key = StateKey;
  static Key make(int n) {
    return {std::vector<std::uint64_t>(
        (n + StateKey::kVerticesPerWord - 1) / StateKey::kVerticesPerWord, 0)};
  }
  static void set(Key& key, Vertex v, std::uint64_t code) {
    key.words[v / StateKey::kVerticesPerWord] |=
        code << (StateKey::kBitsPerVertex * (v % StateKey::kVerticesPerWord));
  }
  static void clear(Key& key, Vertex v) {
    key.words[v / StateKey::kVerticesPerWord] &=
        ~(std::uint64_t{7} << (StateKey::kBitsPerVertex * (v % StateKey::kVerticesPerWord)));
  }
};

constexpr std::uint64_t kPollInterval = 1024;

template <typename Keys>
SearchResult run_search(const SegmentAssignment& phi, const Graph& g, const SearchLimits& limits) {
  using Key = typename Keys::Key;
  const int n = g.vertex_count();
  const ColorOrder order = color_order(n, phi.b);

  SearchResult result;
  SearchStats& stats = result.stats;
  SearchState state = SearchState::empty(n);
  Key key = Keys::make(n);
  absl::flat_hash_set<Key> visited;
  visited.insert(key);
  stats.states_visited = 1;
  if (limits.observer) limits.observer(state);

  std::vector<Vertex> chosen(n, -1);
  std::vector<Vertex> cursor(n + 1, 0);
  int depth = 0;

  auto finish = [&](SearchOutcome outcome) {
    stats.result = outcome;
    stats.peak_visited = visited.size();
    return result;
  };

  while (true) {
    if (depth == n) {
      std::vector<Vertex> by_position(n);
      for (int k = 0; k < n; ++k) by_position[order.sequence[k] - 1] = chosen[k];
      Ordering pi = Ordering::from_sequence(by_position);
      if (ordering_bandwidth(g, pi) > phi.b || !consistency_witness(phi, pi)) {
        throw std::logic_error("state search produced an invalid ordering");
      }
      result.ordering = std::move(pi);
      return finish(SearchOutcome::found);
    }

    const int t = order.step_base_segment[depth];
    bool advanced = false;
    for (Vertex v = cursor[depth]; v < n; ++v) {
      if (!is_extension_candidate(state, phi, g, v, t)) continue;
      Key next = key;
      Keys::set(next, v, static_cast<std::uint64_t>(1 + t - phi.phi[v].lo));
      if (visited.contains(next)) continue;
      if (stats.states_visited >= limits.max_states) {
        return finish(SearchOutcome::budget_exhausted);
      }
      visited.insert(next);

      cursor[depth] = v + 1;
      state.assigned[v] = t;
      ++state.count;
      key = std::move(next);
      chosen[depth] = v;
      ++depth;
      cursor[depth] = 0;
      ++stats.states_visited;
      if (depth > stats.depth_max) stats.depth_max = depth;
      if (limits.observer) limits.observer(state);
      advanced = true;
      break;
    }

    if (advanced) {
      if (stats.states_visited % kPollInterval == 0) {
        if (limits.cancel != nullptr && limits.cancel->load(std::memory_order_relaxed)) {
          return finish(SearchOutcome::cancelled);
        }
        if (limits.deadline && std::chrono::steady_clock::now() >= *limits.deadline) {
          return finish(SearchOutcome::budget_exhausted);
        }
      }
      continue;
    }

    if (depth == 0) return finish(SearchOutcome::exhausted);
    --depth;
    const Vertex v = chosen[depth];
    state.assigned[v] = SearchState::kUndefined;
    --state.count;
    Keys::clear(key, v);
  }
}

}  // namespace

SearchResult dfs_decide(const SegmentAssignment& phi, const Graph& g, const SearchLimits& limits) {
  const int n = g.vertex_count();
  if (n < 1 || static_cast<int>(phi.phi.size()) != n) {
    throw Error("assignment does not match the graph");
  }
  if (n <= StateKey::kVerticesPerWord) return run_search<NarrowKeys>(phi, g, limits);
  return run_search<WideKeys>(phi, g, limits);
}

}  // namespace bandwidth
