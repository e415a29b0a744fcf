#include "bandwidth/mc_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace bandwidth::mc {

namespace {

// Sum of c_i * exp(-e_i * x) with positive exponents: strictly decreasing in x = log(kappa).
double lhs(Constraint c, double x, const McWeights& w) {
  const double a = w.alpha;
  const double b = w.beta;
  switch (c) {
    case Constraint::leaf:
      return 4.0 * std::exp(-std::min({1.0, a, b}) * x);
    case Constraint::parent_undefined:
      return 2.0 * std::exp(-x) + 2.0 * std::exp(-(2.0 - b) * x) + std::exp(-(2.0 - a) * x);
    case Constraint::parent_lower:
      return std::exp(-a * x) + std::exp(-(1.0 + a - b) * x) + 2.0 * std::exp(-x);
    case Constraint::parent_upper:
      return 2.0 * std::exp(-b * x) + 2.0 * std::exp(-x) + std::exp(-(1.0 + b - a) * x);
  }
  return 0.0;
}

constexpr int kMaxIterations = 400;

// Root of lhs(x) = 1 in kappa units. Stops once the kappa bracket is narrower than tol, or
// tol * kappa for very large roots.
double solve_root(Constraint c, const McWeights& w, double tol) {
  double lo = 0.0;  // lhs(0) >= 4 > 1
  double hi = 1.0;
  while (lhs(c, hi, w) > 1.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw std::runtime_error("no root bracket for " + constraint_name(c));
  }
  if (!(lhs(c, lo, w) > 1.0 && lhs(c, hi, w) <= 1.0)) {
    throw std::logic_error("invalid bisection bracket for " + constraint_name(c));
  }
  for (int it = 0; it < kMaxIterations; ++it) {
    const double k_lo = std::exp(lo);
    const double k_hi = std::exp(hi);
    if (k_hi - k_lo <= tol * std::max(1.0, k_lo / 1e6)) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (lhs(c, mid, w) > 1.0 ? lo : hi) = mid;
  }
  return std::exp(hi);
}

}  // namespace

std::string constraint_name(Constraint c) {
  switch (c) {
    case Constraint::leaf: return "leaf";
    case Constraint::parent_undefined: return "case1";
    case Constraint::parent_lower: return "case2";
    case Constraint::parent_upper: return "case3";
  }
  return "?";
}

std::array<double, kConstraintCount> constraint_residuals(double kappa, const McWeights& w) {
  if (!(kappa > 1.0)) throw std::invalid_argument("kappa must exceed 1");
  const double x = std::log(kappa);
  std::array<double, kConstraintCount> out{};
  for (int i = 0; i < kConstraintCount; ++i) out[i] = lhs(static_cast<Constraint>(i), x, w) - 1.0;
  return out;
}

McBound kappa_for(const McWeights& w, double tol) {
  if (!w.valid()) throw std::invalid_argument("weights must lie in (0, 1]");
  McBound bound;
  for (int i = 0; i < kConstraintCount; ++i) {
    bound.roots[i] = solve_root(static_cast<Constraint>(i), w, tol);
  }
  bound.kappa = *std::max_element(bound.roots.begin(), bound.roots.end());
  bound.residuals = constraint_residuals(bound.kappa, w);
  for (int i = 0; i < kConstraintCount; ++i) {
    if (bound.kappa - bound.roots[i] <= kBindingTolerance) {
      bound.binding.push_back(static_cast<Constraint>(i));
    }
  }
  return bound;
}

namespace {

// Evaluation points lo, lo+step, ... up to hi inclusive (within rounding).
std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> out;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-6));
  for (long i = 0; i <= count; ++i) out.push_back(std::min(hi, lo + static_cast<double>(i) * step));
  if (out.empty()) out.push_back(lo);
  return out;
}

OptimizeResult grid_search(const std::vector<double>& alphas, const std::vector<double>& betas,
                      double tol, OptimizeResult best) {
  for (double a : alphas) {
    for (double b : betas) {
      McWeights w{a, b};
      if (!w.valid()) continue;
      McBound bound = kappa_for(w, tol);
      if (best.bound.kappa == 0.0 || bound.kappa < best.bound.kappa) best = {w, std::move(bound)};
    }
  }
  return best;
}

}  // namespace

OptimizeResult optimize_weights(const OptimizeParams& p) {
  if (!(p.grid_step > 0.0 && p.refine_step > 0.0)) {
    throw std::invalid_argument("grid steps must be positive");
  }
  if (p.alpha_min > p.alpha_max || p.beta_min > p.beta_max) {
    throw std::invalid_argument("empty weight range");
  }
  OptimizeResult best = grid_search(grid(p.alpha_min, p.alpha_max, p.grid_step),
                               grid(p.beta_min, p.beta_max, p.grid_step), p.tol, {});
  if (best.bound.kappa == 0.0) throw std::invalid_argument("weight range contains no valid pair");

  const double a0 = best.weights.alpha;
  const double b0 = best.weights.beta;
  const double a_lo = std::max(p.alpha_min, a0 - p.refine_radius);
  const double b_lo = std::max(p.beta_min, b0 - p.refine_radius);
  return grid_search(grid(a_lo, std::min(p.alpha_max, a0 + p.refine_radius), p.refine_step),
                grid(b_lo, std::min(p.beta_max, b0 + p.refine_radius), p.refine_step), p.tol,
                std::move(best));
}

double StateCountBound::value() const { return std::exp(log_value); }

StateCountBound total_state_bound(int n, double kappa) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return {std::log(3.0 * (n + 1)) + n * std::log(kappa)};
}

}  // namespace bandwidth::mc
