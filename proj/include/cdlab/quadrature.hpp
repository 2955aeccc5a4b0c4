#pragma once

#include "cdlab/model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cdlab {

enum class RuleKind { trapezoid, cavalieri_simpson, gauss3 };

/// Elementwise rule tabulated on the reference interval [0,1].
struct QuadratureRule {
    RuleKind kind;
    std::string name;
    std::vector<double> ref_nodes;
    std::vector<double> weights;
    int exactness_degree; // 1, 3, 5
};

QuadratureRule make_rule(RuleKind kind);

/// h * sum of interior nodal values; assumes theta vanishes at 0 and 1.
double composite_trapezoid(const std::function<double(double)>& theta, const Mesh& mesh);

double element_integrate(const QuadratureRule& rule,
                         const std::function<double(double)>& g,
                         double a, double b);

/// Composite gauss3 with dyadic bisection until two successive refinement
/// levels agree within tol. Throws no_convergence past 2^20 subintervals.
double oracle_integrate(const std::function<double(double)>& g,
                        double a, double b, double tol);

} // namespace cdlab
