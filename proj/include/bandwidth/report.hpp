#pragma once

#include "json.hpp"

#include "bandwidth/mc_analysis.hpp"
#include "bandwidth/solver.hpp"
#include "bandwidth/state_search.hpp"

namespace bandwidth {

void to_json(nlohmann::json& j, const Ordering& pi);
void from_json(const nlohmann::json& j, Ordering& pi);

void to_json(nlohmann::json& j, const SearchStats& s);
void to_json(nlohmann::json& j, const DecideStats& s);

void to_json(nlohmann::json& j, const SolveStats& s);
void from_json(const nlohmann::json& j, SolveStats& s);
void to_json(nlohmann::json& j, const ComponentResult& c);
void from_json(const nlohmann::json& j, ComponentResult& c);
void to_json(nlohmann::json& j, const SolveResult& r);
void from_json(const nlohmann::json& j, SolveResult& r);

namespace mc {
// {alpha, beta, kappa, residuals, roots, binding}
nlohmann::json report(const McWeights& w, const McBound& bound);
}  // namespace mc

}  // namespace bandwidth
