#include "bandwidth/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "bandwidth/assignment.hpp"
#include "bandwidth/mc_analysis.hpp"
#include "bandwidth/state_search.hpp"

namespace bandwidth {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(SolveStatus s) {
  return s == SolveStatus::optimal ? "optimal" : "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_for(const Budget& budget, Clock::time_point start) {
  if (budget.max_seconds <= 0.0) return std::nullopt;
  return start + std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(budget.max_seconds));
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared between the workers of one decide call.
struct DecideShared {
  std::atomic<bool> found{false};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> total_states{0};
  std::mutex mutex;
  std::optional<Ordering> witness;
  bool out_of_budget = false;
};

struct WorkerStats {
  std::uint64_t generated = 0;
  std::uint64_t accepted = 0;
  std::uint64_t runs = 0;
  std::uint64_t max_run_states = 0;
  std::uint64_t peak_visited = 0;
  std::uint64_t exhausted_runs = 0;
  std::uint64_t violations = 0;
};

void run_worker(const Graph& g, int b, const RootedTree& tree, const Budget& budget,
                const SolverOptions& options, std::optional<Clock::time_point> deadline,
                int worker, int workers, double run_ceiling, DecideShared& shared,
                WorkerStats& out) {
  AssignmentEnumerator enumerator(tree, g.vertex_count(), b,
                                  options.prune_phase1 ? &g : nullptr);
  std::uint64_t index = 0;
  enumerator.for_each([&](const SegmentAssignment& phi) {
    if (shared.stop.load(std::memory_order_relaxed)) return false;
    if (deadline && Clock::now() >= *deadline) {
      std::lock_guard lock(shared.mutex);
      shared.out_of_budget = true;
      shared.stop = true;
      return false;
    }
    if (index++ % static_cast<std::uint64_t>(workers) != static_cast<std::uint64_t>(worker)) {
      return true;
    }
    ++out.generated;
    if (!edge_filter(phi, g)) return true;
    ++out.accepted;

    SearchLimits limits;
    limits.max_states = budget.max_states_per_run;
    if (budget.max_total_states > 0) {
      const std::uint64_t used = shared.total_states.load();
      if (used >= budget.max_total_states) {
        std::lock_guard lock(shared.mutex);
        shared.out_of_budget = true;
        shared.stop = true;
        return false;
      }
      limits.max_states = std::min(limits.max_states, budget.max_total_states - used);
    }
    limits.deadline = deadline;
    limits.cancel = &shared.stop;

    SearchResult run = dfs_decide(phi, g, limits);
    ++out.runs;
    shared.total_states += run.stats.states_visited;
    out.max_run_states = std::max(out.max_run_states, run.stats.states_visited);
    out.peak_visited = std::max(out.peak_visited, run.stats.peak_visited);
    if (static_cast<double>(run.stats.states_visited) > run_ceiling) ++out.violations;

    switch (run.stats.result) {
      case SearchOutcome::found: {
        std::lock_guard lock(shared.mutex);
        if (!shared.found) {
          shared.found = true;
          shared.witness = std::move(run.ordering);
        }
        shared.stop = true;
        return false;
      }
      case SearchOutcome::budget_exhausted: {
        ++out.exhausted_runs;
        std::lock_guard lock(shared.mutex);
        shared.out_of_budget = true;
        // A later assignment may still produce a witness unless time itself ran out.
        if (deadline && Clock::now() >= *deadline) {
          shared.stop = true;
          return false;
        }
        return true;
      }
      case SearchOutcome::cancelled:
        return false;
      case SearchOutcome::exhausted:
        return true;
    }
    return true;
  });
}

DecideResult decide_until(const Graph& g, int b, const Budget& budget,
                          const SolverOptions& options, std::optional<Clock::time_point> deadline) {
  const auto start = Clock::now();
  const int n = g.vertex_count();
  if (n < 2) throw Error("decide needs at least two vertices");
  if (b < 1 || b >= n) throw Error("decide needs 1 <= b < n");
  if (!is_connected(g)) throw Error("decide needs a connected graph; use minimize_bandwidth");
  if (options.root < 0 || options.root >= n) throw Error("root out of range");

  const RootedTree tree = spanning_tree(g, options.root);
  DecideResult result;
  DecideStats& stats = result.stats;
  stats.leaves = tree.leaf_count();
  stats.assignment_ceiling = assignment_count_ceiling(n);
  stats.run_state_ceiling = per_run_state_ceiling(n, stats.leaves);
  stats.total_state_ceiling = mc::total_state_bound(n, mc::kReferenceKappa).value();

  const int workers = std::max(1, options.workers);
  DecideShared shared;
  std::vector<WorkerStats> per_worker(workers);
  if (workers == 1) {
    run_worker(g, b, tree, budget, options, deadline, 0, 1, stats.run_state_ceiling, shared,
               per_worker[0]);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        run_worker(g, b, tree, budget, options, deadline, w, workers, stats.run_state_ceiling,
                   shared, per_worker[w]);
      });
    }
  }

  for (const auto& w : per_worker) {
    stats.assignments_generated += w.generated;
    stats.assignments_accepted += w.accepted;
    stats.dfs_runs += w.runs;
    stats.max_run_states = std::max(stats.max_run_states, w.max_run_states);
    stats.peak_visited = std::max(stats.peak_visited, w.peak_visited);
    stats.budget_exhausted_runs += w.exhausted_runs;
    stats.run_bound_violations += w.violations;
  }
  stats.total_states = shared.total_states.load();
  stats.total_bound_violated = static_cast<double>(stats.total_states) > stats.total_state_ceiling;

  if (shared.found) {
    result.decision = Decision::yes;
    result.ordering = std::move(shared.witness);
  } else if (shared.out_of_budget) {
    result.decision = Decision::unknown;
  } else {
    result.decision = Decision::no;
  }
  stats.wall_seconds = seconds_since(start);
  return result;
}

void accumulate(SolveStats& into, const DecideStats& d) {
  ++into.decide_calls;
  into.assignments_generated += d.assignments_generated;
  into.assignments_accepted += d.assignments_accepted;
  into.dfs_runs += d.dfs_runs;
  into.total_states += d.total_states;
  into.max_run_states = std::max(into.max_run_states, d.max_run_states);
  into.max_decide_states = std::max(into.max_decide_states, d.total_states);
  into.run_bound_violations += d.run_bound_violations;
  if (static_cast<double>(d.assignments_generated) > d.assignment_ceiling) {
    ++into.assignment_bound_violations;
  }
  if (d.total_bound_violated) ++into.total_bound_violations;
}

struct ComponentSolution {
  int bandwidth = 0;
  int lower = 0;
  SolveStatus status = SolveStatus::optimal;
  std::vector<Vertex> sequence;  // local vertices in position order
};

ComponentSolution solve_component(const Graph& g, const Budget& budget,
                                  const SolverOptions& options,
                                  std::optional<Clock::time_point> deadline, SolveStats& stats) {
  const int n = g.vertex_count();
  ComponentSolution out;
  out.sequence.resize(n);
  std::iota(out.sequence.begin(), out.sequence.end(), 0);
  if (n <= 1) return out;

  // Any ordering is an (n-1)-ordering.
  int lo = lower_bound(g);
  int hi = n - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    DecideResult d = decide_until(g, mid, budget, options, deadline);
    accumulate(stats, d.stats);
    if (d.decision == Decision::yes) {
      hi = mid;
      out.sequence = d.ordering->vertices_by_position();
    } else if (d.decision == Decision::no) {
      lo = mid + 1;
    } else {
      out.status = SolveStatus::unknown;
      break;
    }
  }
  // The kept ordering may beat hi when the search stopped before any yes.
  out.bandwidth = std::min(hi, ordering_bandwidth(g, Ordering::from_sequence(out.sequence)));
  out.lower = lo;
  return out;
}

}  // namespace

DecideResult decide(const Graph& g, int b, const Budget& budget, const SolverOptions& options) {
  return decide_until(g, b, budget, options, deadline_for(budget, Clock::now()));
}

DecideResult decide_graph(const Graph& g, int b, const Budget& budget,
                          const SolverOptions& options) {
  const auto start = Clock::now();
  const auto deadline = deadline_for(budget, start);
  if (b < 0) throw Error("b must be non-negative");
  auto components = connected_components(g);
  std::stable_sort(components.begin(), components.end(), [](const auto& x, const auto& y) {
    return x.graph.vertex_count() > y.graph.vertex_count();
  });

  DecideResult result;
  result.decision = Decision::yes;
  std::vector<Vertex> sequence;
  for (const Component& c : components) {
    const int size = c.graph.vertex_count();
    std::vector<Vertex> local(size);
    std::iota(local.begin(), local.end(), 0);
    if (size > 1 && b == 0) {
      result.decision = Decision::no;
      break;
    }
    if (size > 1 && b < size - 1) {
      SolverOptions sub = options;
      auto it = std::find(c.original.begin(), c.original.end(), options.root);
      sub.root = it == c.original.end() ? 0 : static_cast<Vertex>(it - c.original.begin());
      DecideResult d = decide_until(c.graph, b, budget, sub, deadline);
      DecideStats& s = result.stats;
      s.assignments_generated += d.stats.assignments_generated;
      s.assignments_accepted += d.stats.assignments_accepted;
      s.dfs_runs += d.stats.dfs_runs;
      s.total_states += d.stats.total_states;
      s.max_run_states = std::max(s.max_run_states, d.stats.max_run_states);
      s.peak_visited = std::max(s.peak_visited, d.stats.peak_visited);
      s.budget_exhausted_runs += d.stats.budget_exhausted_runs;
      s.run_bound_violations += d.stats.run_bound_violations;
      s.total_bound_violated = s.total_bound_violated || d.stats.total_bound_violated;
      if (s.leaves == 0) {
        s.leaves = d.stats.leaves;
        s.assignment_ceiling = d.stats.assignment_ceiling;
        s.run_state_ceiling = d.stats.run_state_ceiling;
        s.total_state_ceiling = d.stats.total_state_ceiling;
      }
      if (d.decision == Decision::no) {
        result.decision = Decision::no;
        break;
      }
      if (d.decision == Decision::unknown) {
        result.decision = Decision::unknown;
        continue;
      }
      local = d.ordering->vertices_by_position();
    }
    for (Vertex v : local) sequence.push_back(c.original[v]);
  }
  if (result.decision == Decision::yes) {
    result.ordering = Ordering::from_sequence(sequence);
    if (ordering_bandwidth(g, *result.ordering) > b) {
      throw std::logic_error("composed witness exceeds b");
    }
  }
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

SolveResult minimize_bandwidth(const Graph& g, const Budget& budget, const SolverOptions& options) {
  const auto start = Clock::now();
  const auto deadline = deadline_for(budget, start);
  SolveResult result;
  auto components = connected_components(g);
  std::stable_sort(components.begin(), components.end(), [](const auto& a, const auto& b) {
    return a.graph.vertex_count() > b.graph.vertex_count();
  });

  std::vector<Vertex> sequence;
  sequence.reserve(g.vertex_count());
  for (const Component& c : components) {
    SolverOptions local = options;
    auto it = std::find(c.original.begin(), c.original.end(), options.root);
    local.root = it == c.original.end() ? 0 : static_cast<Vertex>(it - c.original.begin());

    ComponentSolution s = solve_component(c.graph, budget, local, deadline, result.stats);
    for (Vertex v : s.sequence) sequence.push_back(c.original[v]);
    result.bandwidth = std::max(result.bandwidth, s.bandwidth);
    result.lower = std::max(result.lower, s.lower);
    if (s.status == SolveStatus::unknown) result.status = SolveStatus::unknown;
    result.components.push_back({c.original, s.bandwidth, s.lower, s.status});
  }
  result.ordering = Ordering::from_sequence(sequence);
  if (ordering_bandwidth(g, result.ordering) != result.bandwidth) {
    throw std::logic_error("composed ordering does not realise the reported bandwidth");
  }
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

SolveResult oracle_bandwidth(const Graph& g, int max_vertices) {
  const auto start = Clock::now();
  const int n = g.vertex_count();
  if (n > max_vertices) {
    throw Error("oracle refuses n = " + std::to_string(n) + " (limit " +
                std::to_string(max_vertices) + ")");
  }
  SolveResult result;
  result.ordering = Ordering::identity(n);
  int best = ordering_bandwidth(g, result.ordering);

  std::vector<int> pos(n, 0);             // 0 while unplaced
  std::vector<int> unplaced_nbrs(n);
  for (Vertex v = 0; v < n; ++v) unplaced_nbrs[v] = g.degree(v);
  std::vector<Vertex> placed;
  placed.reserve(n);
  std::uint64_t nodes = 0;

  // Place position p; every edge must end up strictly shorter than best.
  auto place = [&](auto&& self, int p) -> void {
    ++nodes;
    if (p > n) {
      Ordering pi{pos};
      best = ordering_bandwidth(g, pi);
      result.ordering = std::move(pi);
      return;
    }
    for (Vertex v = 0; v < n && best > 0; ++v) {
      if (pos[v] != 0) continue;
      bool ok = true;
      for (Vertex u : g.neighbors(v)) {
        if (pos[u] != 0 && p - pos[u] >= best) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pos[v] = p;
      for (Vertex u : g.neighbors(v)) --unplaced_nbrs[u];
      // A placed vertex still waiting for a neighbour needs one within best-1 positions.
      bool feasible = true;
      for (Vertex u : placed) {
        if (unplaced_nbrs[u] > 0 && p + 1 - pos[u] >= best) {
          feasible = false;
          break;
        }
      }
      if (feasible && unplaced_nbrs[v] > 0 && best <= 1) feasible = false;
      if (feasible) {
        placed.push_back(v);
        self(self, p + 1);
        placed.pop_back();
      }
      for (Vertex u : g.neighbors(v)) ++unplaced_nbrs[u];
      pos[v] = 0;
    }
  };
  if (n > 0) place(place, 1);

  result.bandwidth = best;
  result.lower = best;
  result.stats.oracle_nodes = nodes;
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

int lower_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) throw Error("lower_bound needs a connected graph");
  const int degree_bound = (g.max_degree() + 1) / 2;
  const int diam = diameter(g);
  const int distance_bound = (n - 1 + diam - 1) / diam;
  return std::max(degree_bound, distance_bound);
}

}  // namespace bandwidth
