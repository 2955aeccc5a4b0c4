#include "cdlab/quadrature.hpp"

#include "cdlab/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace cdlab {

namespace {

// Legendre roots of degree 3 mapped to [0,1], 17 significant digits.
constexpr double kGauss3Nodes[3] = {
    0.11270166537925831,
    0.5,
    0.88729833462074169,
};
constexpr double kGauss3Weights[3] = {
    0.27777777777777778,
    0.44444444444444444,
    0.27777777777777778,
};

} // namespace

QuadratureRule make_rule(RuleKind kind)
{
    QuadratureRule r;
    r.kind = kind;
    switch (kind) {
    case RuleKind::trapezoid:
        r.name = "trapezoid";
        r.ref_nodes = {0.0, 1.0};
        r.weights = {0.5, 0.5};
        r.exactness_degree = 1;
        break;
    case RuleKind::cavalieri_simpson:
        r.name = "cavalieri_simpson";
        r.ref_nodes = {0.0, 0.5, 1.0};
        r.weights = {1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0};
        r.exactness_degree = 3;
        break;
    case RuleKind::gauss3:
        r.name = "gauss3";
        r.ref_nodes = {kGauss3Nodes[0], kGauss3Nodes[1], kGauss3Nodes[2]};
        r.weights = {kGauss3Weights[0], kGauss3Weights[1], kGauss3Weights[2]};
        r.exactness_degree = 5;
        break;
    }
    return r;
}

double composite_trapezoid(const std::function<double(double)>& theta, const Mesh& mesh)
{
    double sum = 0.0;
    for (int i = 1; i < mesh.n; ++i)
        sum += theta(mesh.nodes[static_cast<std::size_t>(i)]);
    return mesh.h * sum;
}

double element_integrate(const QuadratureRule& rule,
                         const std::function<double(double)>& g,
                         double a, double b)
{
    if (!(a < b))
        throw std::invalid_argument("element_integrate: requires a < b");
    const double len = b - a;
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.ref_nodes.size(); ++k)
        sum += rule.weights[k] * g(a + len * rule.ref_nodes[k]);
    return len * sum;
}

double oracle_integrate(const std::function<double(double)>& g,
                        double a, double b, double tol)
{
    if (tol < 1e-14)
        throw std::invalid_argument("oracle_integrate: tol must be >= 1e-14");
    const QuadratureRule rule = make_rule(RuleKind::gauss3);

    auto composite = [&](long subintervals) {
        const double len = (b - a) / static_cast<double>(subintervals);
        double sum = 0.0;
        for (long i = 0; i < subintervals; ++i) {
            const double xa = a + static_cast<double>(i) * len;
            for (int k = 0; k < 3; ++k)
                sum += rule.weights[static_cast<std::size_t>(k)] *
                       g(xa + len * rule.ref_nodes[static_cast<std::size_t>(k)]);
        }
        return len * sum;
    };

    double prev = composite(1);
    for (long n = 2; n <= (1L << 20); n *= 2) {
        const double cur = composite(n);
        if (std::abs(cur - prev) <= tol)
            return cur;
        prev = cur;
    }
    throw no_convergence("oracle_integrate: refinement cap exceeded");
}

} // namespace cdlab
