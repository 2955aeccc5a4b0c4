#include "cdlab/model.hpp"

#include "cdlab/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cdlab {

Mesh make_uniform_mesh(int n)
{
    if (n < 2)
        throw std::invalid_argument("make_uniform_mesh: n must be >= 2, got " + std::to_string(n));
    Mesh mesh;
    mesh.n = n;
    mesh.h = 1.0 / n;
    mesh.nodes.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        mesh.nodes[static_cast<std::size_t>(j)] = static_cast<double>(j) * mesh.h;
    mesh.nodes.back() = 1.0;
    return mesh;
}

Problem test_problem_f2x(double epsilon)
{
    if (!(epsilon > 0.0))
        throw std::invalid_argument("test_problem_f2x: epsilon must be positive");
    Problem p;
    p.epsilon = epsilon;
    p.source = [](double x) { return 2.0 * x; };
    p.source_deriv_bounds = std::pair{2.0, 0.0};
    // u(x) = x^2 + 2 eps x - (1+2 eps)(e^{(x-1)/eps} - e^{-1/eps})/(1 - e^{-1/eps}).
    // The layer factor uses only negative exponents.
    p.exact = [epsilon](double x) {
        const double denom = 1.0 - std::exp(-1.0 / epsilon);
        const double layer = (std::exp((x - 1.0) / epsilon) - std::exp(-1.0 / epsilon)) / denom;
        return x * x + 2.0 * epsilon * x - (1.0 + 2.0 * epsilon) * layer;
    };
    return p;
}

Problem test_problem_fzero(double epsilon)
{
    if (!(epsilon > 0.0))
        throw std::invalid_argument("test_problem_fzero: epsilon must be positive");
    Problem p;
    p.epsilon = epsilon;
    p.source = [](double) { return 0.0; };
    p.source_deriv_bounds = std::pair{0.0, 0.0};
    p.exact = [](double) { return 0.0; };
    return p;
}

GridFunction interpolate_exact(const Problem& problem, const Mesh& mesh)
{
    if (!problem.exact)
        throw unsupported_problem("interpolate_exact: problem has no exact solution");
    GridFunction u;
    u.mesh = mesh;
    u.values.resize(static_cast<std::size_t>(mesh.n) - 1);
    for (int j = 1; j < mesh.n; ++j)
        u.values[static_cast<std::size_t>(j - 1)] = (*problem.exact)(mesh.nodes[static_cast<std::size_t>(j)]);
    return u;
}

std::pair<double, double> source_deriv_bounds_or_estimate(const Problem& problem,
                                                          const Mesh& mesh)
{
    if (problem.source_deriv_bounds)
        return *problem.source_deriv_bounds;
    const int m = 10 * mesh.n;
    const double dx = 1.0 / m;
    double sup1 = 0.0;
    double sup2 = 0.0;
    double fm = problem.source(0.0);
    double f0 = problem.source(dx);
    for (int i = 1; i < m; ++i) {
        const double fp = problem.source((i + 1) * dx);
        sup1 = std::max(sup1, std::abs((fp - fm) / (2.0 * dx)));
        sup2 = std::max(sup2, std::abs((fp - 2.0 * f0 + fm) / (dx * dx)));
        fm = f0;
        f0 = fp;
    }
    return {sup1, sup2};
}

} // namespace cdlab
