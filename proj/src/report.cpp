#include "bandwidth/report.hpp"

namespace bandwidth {

using nlohmann::json;

void to_json(json& j, const Ordering& pi) { j = pi.position; }
void from_json(const json& j, Ordering& pi) { j.get_to(pi.position); }

void to_json(json& j, const SearchStats& s) {
  j = json{{"states_visited", s.states_visited},
           {"depth_max", s.depth_max},
           {"peak_visited", s.peak_visited},
           {"result", to_string(s.result)}};
}

void to_json(json& j, const DecideStats& s) {
  j = json{{"assignments_generated", s.assignments_generated},
           {"assignments_accepted", s.assignments_accepted},
           {"assignment_ceiling", s.assignment_ceiling},
           {"dfs_runs", s.dfs_runs},
           {"states_visited", s.total_states},
           {"max_run_states", s.max_run_states},
           {"peak_visited", s.peak_visited},
           {"run_state_ceiling", s.run_state_ceiling},
           {"total_state_ceiling", s.total_state_ceiling},
           {"leaves", s.leaves},
           {"budget_exhausted_runs", s.budget_exhausted_runs},
           {"run_bound_violations", s.run_bound_violations},
           {"total_bound_violated", s.total_bound_violated},
           {"wall_seconds", s.wall_seconds}};
}

void to_json(json& j, const SolveStats& s) {
  j = json{{"decide_calls", s.decide_calls},
           {"assignments_generated", s.assignments_generated},
           {"assignments_accepted", s.assignments_accepted},
           {"dfs_runs", s.dfs_runs},
           {"states_visited", s.total_states},
           {"max_run_states", s.max_run_states},
           {"max_decide_states", s.max_decide_states},
           {"run_bound_violations", s.run_bound_violations},
           {"assignment_bound_violations", s.assignment_bound_violations},
           {"total_bound_violations", s.total_bound_violations},
           {"oracle_nodes", s.oracle_nodes},
           {"wall_seconds", s.wall_seconds}};
}

void from_json(const json& j, SolveStats& s) {
  j.at("decide_calls").get_to(s.decide_calls);
  j.at("assignments_generated").get_to(s.assignments_generated);
  j.at("assignments_accepted").get_to(s.assignments_accepted);
  j.at("dfs_runs").get_to(s.dfs_runs);
  j.at("states_visited").get_to(s.total_states);
  j.at("max_run_states").get_to(s.max_run_states);
  j.at("max_decide_states").get_to(s.max_decide_states);
  j.at("run_bound_violations").get_to(s.run_bound_violations);
  j.at("assignment_bound_violations").get_to(s.assignment_bound_violations);
  j.at("total_bound_violations").get_to(s.total_bound_violations);
  j.at("oracle_nodes").get_to(s.oracle_nodes);
  j.at("wall_seconds").get_to(s.wall_seconds);
}

namespace {

SolveStatus status_from(const std::string& text) {
  if (text == "optimal") return SolveStatus::optimal;
  if (text == "unknown") return SolveStatus::unknown;
  throw Error("unknown status '" + text + "'");
}

}  // namespace

void to_json(json& j, const ComponentResult& c) {
  j = json{{"vertices", c.vertices},
           {"bandwidth", c.bandwidth},
           {"lower", c.lower},
           {"status", to_string(c.status)}};
}

void from_json(const json& j, ComponentResult& c) {
  j.at("vertices").get_to(c.vertices);
  j.at("bandwidth").get_to(c.bandwidth);
  j.at("lower").get_to(c.lower);
  c.status = status_from(j.at("status").get<std::string>());
}

void to_json(json& j, const SolveResult& r) {
  j = json{{"bandwidth", r.bandwidth},
           {"lower", r.lower},
           {"ordering", r.ordering},
           {"status", to_string(r.status)},
           {"stats", r.stats},
           {"components", r.components}};
}

void from_json(const json& j, SolveResult& r) {
  j.at("bandwidth").get_to(r.bandwidth);
  j.at("lower").get_to(r.lower);
  j.at("ordering").get_to(r.ordering);
  r.status = status_from(j.at("status").get<std::string>());
  j.at("stats").get_to(r.stats);
  j.at("components").get_to(r.components);
}

namespace mc {

json report(const McWeights& w, const McBound& bound) {
  json residuals = json::object();
  json roots = json::object();
  for (int i = 0; i < kConstraintCount; ++i) {
    const auto name = constraint_name(static_cast<Constraint>(i));
    residuals[name] = bound.residuals[i];
    roots[name] = bound.roots[i];
  }
  json binding = json::array();
  for (Constraint c : bound.binding) binding.push_back(constraint_name(c));
  return json{{"alpha", w.alpha},
              {"beta", w.beta},
              {"kappa", bound.kappa},
              {"residuals", residuals},
              {"roots", roots},
              {"binding", binding}};
}

}  // namespace mc

}  // namespace bandwidth
