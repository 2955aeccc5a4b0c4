#pragma once

#include "cdlab/model.hpp"

#include <functional>
#include <span>

namespace cdlab {

/// sqrt( sum_i (u_i - u_{i-1})^2 / h ) with zero boundary values.
double h1_seminorm(const GridFunction& u);

/// Exact L2 norm of the piecewise-linear identification.
double l2_norm(const GridFunction& u);

/// Element-average variance seminorm:
/// |u|^2 = (1/n) sum_i avg_i^2 - (int_0^1 u)^2, avg_i = (u_{i-1}+u_i)/2.
double star_seminorm(const GridFunction& u);

/// sqrt( d^2 |u|_1^2 + |u|_*^2 ), the explicit representation.
double optimal_trial_norm(const GridFunction& u, double d);

/// sqrt( F^T (S/h)^{-1} F ) via one Riesz solve in the |.|_1 inner product.
/// coeffs holds the functional's values on the hat basis.
double dual_norm(std::span<const double> coeffs, const Mesh& mesh);

/// Same norm through its definition: F_j = b_d(phi_j, u) = ((d/h) S U + C U)_j,
/// then dual_norm(F).
double optimal_trial_norm_via_sup(const GridFunction& u, double d);

double discrete_inf_distance(const GridFunction& u, const GridFunction& reference);
double discrete_inf_distance(const GridFunction& u,
                             const std::function<double(double)>& reference);

} // namespace cdlab
