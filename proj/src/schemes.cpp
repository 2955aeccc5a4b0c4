#include "cdlab/schemes.hpp"

#include "cdlab/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace cdlab {

double artificial_diffusion(double epsilon, double h, const DiffusionRule& rule)
{
    if (!(epsilon > 0.0) || !(h > 0.0))
        throw std::invalid_argument("artificial_diffusion: epsilon and h must be positive");
    switch (rule.kind) {
    case DiffusionRule::Kind::central:
        return epsilon;
    case DiffusionRule::Kind::standard_upwind:
        return epsilon + 0.5 * h;
    case DiffusionRule::Kind::ias_sg:
        return h / (2.0 * peclet_coefficients(epsilon, h).g0);
    case DiffusionRule::Kind::from_bubble:
        return epsilon + rule.bubble->b1 * h;
    case DiffusionRule::Kind::custom: {
        const double pe = h / (2.0 * epsilon);
        const double p = rule.phi(pe);
        if (p < 0.0)
            throw invalid_diffusion("artificial_diffusion: custom Phi returned a negative value");
        return epsilon * (1.0 + p);
    }
    }
    throw std::invalid_argument("artificial_diffusion: unknown rule");
}

TridiagonalSystem assemble_system_matrix(double d, const Mesh& mesh)
{
    if (!(d > 0.0))
        throw std::invalid_argument("assemble_system_matrix: d must be positive");
    const double r = d / mesh.h;
    return make_tridiag(static_cast<std::size_t>(mesh.n) - 1, -r - 0.5, 2.0 * r, -r + 0.5);
}

TridiagonalSystem exponential_pg_matrix(double epsilon, const Mesh& mesh)
{
    const PecletCoefficients c = peclet_coefficients(epsilon, mesh.h);
    return make_tridiag(static_cast<std::size_t>(mesh.n) - 1, -c.l_d / c.g0, 1.0 / c.g0,
                        -c.u_d / c.g0);
}

std::vector<double> assemble_rhs_pointwise(const Problem& problem, const Mesh& mesh)
{
    std::vector<double> rhs(static_cast<std::size_t>(mesh.n) - 1);
    for (int j = 1; j < mesh.n; ++j)
        rhs[static_cast<std::size_t>(j - 1)] =
            mesh.h * problem.source(mesh.nodes[static_cast<std::size_t>(j)]);
    return rhs;
}

namespace {

// Dual-vector entry j split over the two supporting elements, with the
// integration variable shifted into [0,h]:
//   int_0^h f(x_{j-1}+s) (s/h + B(s)) ds  +  int_0^h f(x_j+s) (1 - s/h - B(s)) ds
std::vector<double> assemble_rhs_bubble_impl(
    const Problem& problem, const Mesh& mesh, const BubbleSpec& spec,
    const std::function<double(const std::function<double(double)>&)>& integrate)
{
    const double h = mesh.h;
    std::vector<double> rhs(static_cast<std::size_t>(mesh.n) - 1);
    for (int j = 1; j < mesh.n; ++j) {
        const double xl = mesh.nodes[static_cast<std::size_t>(j - 1)];
        const double xj = mesh.nodes[static_cast<std::size_t>(j)];
        auto left = [&](double s) {
            return problem.source(xl + s) * (s / h + evaluate_bubble(spec, s));
        };
        auto right = [&](double s) {
            return problem.source(xj + s) * (1.0 - s / h - evaluate_bubble(spec, s));
        };
        rhs[static_cast<std::size_t>(j - 1)] = integrate(left) + integrate(right);
    }
    return rhs;
}

} // namespace

std::vector<double> assemble_rhs_bubble(const Problem& problem, const Mesh& mesh,
                                        const BubbleSpec& spec, const QuadratureRule& rule)
{
    if (spec.h != mesh.h)
        throw std::invalid_argument("assemble_rhs_bubble: bubble width does not match the mesh");
    return assemble_rhs_bubble_impl(problem, mesh, spec, [&](const auto& g) {
        return element_integrate(rule, g, 0.0, mesh.h);
    });
}

std::vector<double> assemble_rhs_bubble_oracle(const Problem& problem, const Mesh& mesh,
                                               const BubbleSpec& spec, double tol)
{
    if (spec.h != mesh.h)
        throw std::invalid_argument("assemble_rhs_bubble_oracle: bubble width does not match the mesh");
    return assemble_rhs_bubble_impl(problem, mesh, spec, [&](const auto& g) {
        return oracle_integrate(g, 0.0, mesh.h, tol);
    });
}

GridFunction solve_scheme(const SchemeConfig& config, const Problem& problem, const Mesh& mesh)
{
    const bool exponential_matrix =
        config.diffusion.kind == DiffusionRule::Kind::ias_sg ||
        (config.diffusion.kind == DiffusionRule::Kind::from_bubble &&
         config.diffusion.bubble->kind == BubbleKind::exponential);

    TridiagonalSystem matrix =
        exponential_matrix
            ? exponential_pg_matrix(problem.epsilon, mesh)
            : assemble_system_matrix(
                  artificial_diffusion(problem.epsilon, mesh.h, config.diffusion), mesh);

    std::vector<double> rhs;
    switch (config.rhs.kind) {
    case RhsRule::Kind::pointwise:
        rhs = assemble_rhs_pointwise(problem, mesh);
        break;
    case RhsRule::Kind::bubble_quadrature:
        rhs = assemble_rhs_bubble(problem, mesh, *config.rhs.bubble, *config.rhs.rule);
        break;
    case RhsRule::Kind::bubble_oracle:
        rhs = assemble_rhs_bubble_oracle(problem, mesh, *config.rhs.bubble, config.rhs.tol);
        break;
    }

    GridFunction u;
    u.mesh = mesh;
    u.values = solve(matrix, rhs);
    return u;
}

} // namespace cdlab
