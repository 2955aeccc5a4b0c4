#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace cdlab {

/// Uniform partition of [0,1] into n subintervals.
struct Mesh {
    int n = 0;
    double h = 0.0;
    std::vector<double> nodes; // x_j = j*h, j = 0..n
};

Mesh make_uniform_mesh(int n);

/// -eps u'' + u' = f on (0,1), u(0) = u(1) = 0. Convection coefficient is
/// fixed at 1; there is no knob for it.
struct Problem {
    double epsilon = 0.0;
    std::function<double(double)> source;
    /// (sup|f'|, sup|f''|) when known analytically.
    std::optional<std::pair<double, double>> source_deriv_bounds;
    std::optional<std::function<double(double)>> exact;
};

/// f(x) = 2x with closed-form solution. Only e^{negative} appears in the
/// stored formula, so it is safe for arbitrarily small epsilon.
Problem test_problem_f2x(double epsilon);

/// f = 0, u = 0.
Problem test_problem_fzero(double epsilon);

/// Interior nodal values u_1..u_{n-1}; boundary values implicitly zero.
/// Identified with the continuous piecewise-linear interpolant.
struct GridFunction {
    Mesh mesh;
    std::vector<double> values;
};

GridFunction interpolate_exact(const Problem& problem, const Mesh& mesh);

/// Analytic derivative sup-bounds when present, otherwise estimated by
/// divided differences on a 10*n point grid.
std::pair<double, double> source_deriv_bounds_or_estimate(const Problem& problem,
                                                          const Mesh& mesh);

} // namespace cdlab
