#pragma once

#include "cdlab/bubbles.hpp"
#include "cdlab/model.hpp"
#include "cdlab/quadrature.hpp"
#include "cdlab/tridiag.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cdlab {

/// Choice of artificial diffusion eps_h = eps (1 + Phi(Pe)).
struct DiffusionRule {
    enum class Kind { central, standard_upwind, ias_sg, from_bubble, custom };

    Kind kind = Kind::central;
    std::optional<BubbleSpec> bubble;       // from_bubble
    std::function<double(double)> phi;      // custom

    static DiffusionRule central() { return {Kind::central, {}, {}}; }
    static DiffusionRule standard_upwind() { return {Kind::standard_upwind, {}, {}}; }
    static DiffusionRule ias_sg() { return {Kind::ias_sg, {}, {}}; }
    static DiffusionRule from_bubble(BubbleSpec spec)
    {
        return {Kind::from_bubble, std::move(spec), {}};
    }
    static DiffusionRule custom(std::function<double(double)> f)
    {
        return {Kind::custom, {}, std::move(f)};
    }
};

double artificial_diffusion(double epsilon, double h, const DiffusionRule& rule);

/// tridiag(-d/h - 1/2, 2d/h, -d/h + 1/2) of size (n-1); equals (d/h) S + C.
TridiagonalSystem assemble_system_matrix(double d, const Mesh& mesh);

/// (1/g0) tridiag(-l_d, 1, -u_d) assembled from the stable Peclet
/// coefficients. Reduces exactly to tridiag(-1, 1, 0) once e^{-h/eps}
/// underflows.
TridiagonalSystem exponential_pg_matrix(double epsilon, const Mesh& mesh);

std::vector<double> assemble_rhs_pointwise(const Problem& problem, const Mesh& mesh);

/// Entry j approximates the dual-vector integral of f (phi_j + B_j - B_{j+1})
/// as two element integrals with the argument shifted into [0,h].
std::vector<double> assemble_rhs_bubble(const Problem& problem, const Mesh& mesh,
                                        const BubbleSpec& spec, const QuadratureRule& rule);

/// Same integrals evaluated with the adaptive oracle to tolerance tol.
std::vector<double> assemble_rhs_bubble_oracle(const Problem& problem, const Mesh& mesh,
                                               const BubbleSpec& spec, double tol);

struct RhsRule {
    enum class Kind { pointwise, bubble_quadrature, bubble_oracle };

    Kind kind = Kind::pointwise;
    std::optional<BubbleSpec> bubble;
    std::optional<QuadratureRule> rule;
    double tol = 1e-12;

    static RhsRule pointwise() { return {}; }
    static RhsRule bubble_quadrature(BubbleSpec spec, QuadratureRule r)
    {
        return {Kind::bubble_quadrature, std::move(spec), std::move(r), 0.0};
    }
    static RhsRule bubble_oracle(BubbleSpec spec, double tol)
    {
        return {Kind::bubble_oracle, std::move(spec), {}, tol};
    }
};

struct SchemeConfig {
    DiffusionRule diffusion;
    RhsRule rhs;
};

GridFunction solve_scheme(const SchemeConfig& config, const Problem& problem, const Mesh& mesh);

} // namespace cdlab
