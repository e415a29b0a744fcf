#pragma once

#include <array>
#include <string>
#include <vector>

namespace bandwidth::mc {

// Vertex weights for a child whose parent took the lower (alpha) or upper (beta) half of its
// segment. Weight 1 covers every other unanalyzed vertex.
struct McWeights {
  double alpha = 1.0;
  double beta = 1.0;

  bool valid() const noexcept { return alpha > 0.0 && alpha <= 1.0 && beta > 0.0 && beta <= 1.0; }
};

// The branching constraints after substituting T(w) = kappa^w:
//   leaf:   max(4k^-1, 4k^-a, 4k^-b)                 <= 1
//   case 1: 2k^-1 + 2k^-(2-b) + k^-(2-a)            <= 1   (parent undefined)
//   case 2: k^-a + k^-(1+a-b) + 2k^-1               <= 1   (parent in lower half)
//   case 3: 2k^-b + 2k^-1 + k^-(1+b-a)              <= 1   (parent in upper half)
enum class Constraint { leaf = 0, parent_undefined = 1, parent_lower = 2, parent_upper = 3 };
inline constexpr int kConstraintCount = 4;
std::string constraint_name(Constraint c);

// Left-hand side minus one for each constraint; satisfied when <= 0.
std::array<double, kConstraintCount> constraint_residuals(double kappa, const McWeights& w);

struct McBound {
  double kappa = 0.0;
  std::array<double, kConstraintCount> roots{};      // smallest kappa satisfying each constraint
  std::array<double, kConstraintCount> residuals{};  // evaluated at kappa
  std::vector<Constraint> binding;                   // roots within binding_tolerance of kappa
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kBindingTolerance = 1e-3;
// Branching base used as the ceiling for measured state counts.
inline constexpr double kReferenceKappa = 4.8285;

// Smallest kappa > 1 meeting all four constraints, by bisection on log(kappa) per constraint.
// Throws std::invalid_argument for weights outside (0, 1].
McBound kappa_for(const McWeights& w, double tol = kDefaultTolerance);

struct OptimizeParams {
  double alpha_min = 0.005;
  double alpha_max = 1.0;
  double beta_min = 0.005;
  double beta_max = 1.0;
  double grid_step = 0.005;
  double refine_step = 1e-4;
  double refine_radius = 0.01;  // half-width of the refinement window around the grid optimum
  double tol = 1e-9;
};

struct OptimizeResult {
  McWeights weights;
  McBound bound;
};

// Coarse grid over [alpha_min, alpha_max] x [beta_min, beta_max], then a fine grid around the
// best coarse point.
OptimizeResult optimize_weights(const OptimizeParams& params = {});

// 3(n+1) kappa^n, kept in log space.
struct StateCountBound {
  double log_value = 0.0;
  double value() const;
};
StateCountBound total_state_bound(int n, double kappa);

}  // namespace bandwidth::mc
