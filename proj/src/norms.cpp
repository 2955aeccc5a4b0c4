#include "cdlab/norms.hpp"

#include "cdlab/errors.hpp"
#include "cdlab/tridiag.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cdlab {

namespace {

inline double boundary_padded(const GridFunction& u, int i)
{
    if (i == 0 || i == u.mesh.n)
        return 0.0;
    return u.values[static_cast<std::size_t>(i - 1)];
}

} // namespace

double h1_seminorm(const GridFunction& u)
{
    double acc = 0.0;
    for (int i = 1; i <= u.mesh.n; ++i) {
        const double d = boundary_padded(u, i) - boundary_padded(u, i - 1);
        acc += d * d;
    }
    return std::sqrt(acc / u.mesh.h);
}

double l2_norm(const GridFunction& u)
{
    double acc = 0.0;
    for (int i = 1; i <= u.mesh.n; ++i) {
        const double a = boundary_padded(u, i - 1);
        const double b = boundary_padded(u, i);
        acc += (a * a + a * b + b * b);
    }
    return std::sqrt(acc * u.mesh.h / 3.0);
}

double star_seminorm(const GridFunction& u)
{
    const int n = u.mesh.n;
    double sum_sq = 0.0;
    double sum = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double avg = 0.5 * (boundary_padded(u, i - 1) + boundary_padded(u, i));
        sum_sq += avg * avg;
        sum += avg;
    }
    const double total = u.mesh.h * sum; // int_0^1 u
    double sq = sum_sq / n - total * total;
    if (sq < 0.0) {
        if (sq < -1e-12)
            throw numerical_inconsistency("star_seminorm: variance form came out negative");
        sq = 0.0;
    }
    return std::sqrt(sq);
}

double optimal_trial_norm(const GridFunction& u, double d)
{
    if (!(d > 0.0))
        throw std::invalid_argument("optimal_trial_norm: d must be positive");
    const double h1 = h1_seminorm(u);
    const double star = star_seminorm(u);
    return std::sqrt(d * d * h1 * h1 + star * star);
}

double dual_norm(std::span<const double> coeffs, const Mesh& mesh)
{
    const std::size_t m = static_cast<std::size_t>(mesh.n) - 1;
    if (coeffs.size() != m)
        throw std::invalid_argument("dual_norm: coefficient length must be n-1");
    const TridiagonalSystem gram = make_tridiag(m, -1.0 / mesh.h, 2.0 / mesh.h, -1.0 / mesh.h);
    const std::vector<double> riesz = solve(gram, coeffs);
    double dot = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        dot += coeffs[i] * riesz[i];
    return std::sqrt(std::max(dot, 0.0));
}

double optimal_trial_norm_via_sup(const GridFunction& u, double d)
{
    if (!(d > 0.0))
        throw std::invalid_argument("optimal_trial_norm_via_sup: d must be positive");
    const int n = u.mesh.n;
    const double h = u.mesh.h;
    std::vector<double> coeffs(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j < n; ++j) {
        const double um = boundary_padded(u, j - 1);
        const double uj = boundary_padded(u, j);
        const double up = boundary_padded(u, j + 1);
        // b_d(phi_j, u) = (d/h)(S U)_j + (C U)_j
        coeffs[static_cast<std::size_t>(j - 1)] =
            (d / h) * (-um + 2.0 * uj - up) + 0.5 * (up - um);
    }
    return dual_norm(coeffs, u.mesh);
}

double discrete_inf_distance(const GridFunction& u, const GridFunction& reference)
{
    if (u.mesh.n != reference.mesh.n)
        throw std::invalid_argument("discrete_inf_distance: mesh mismatch");
    double m = 0.0;
    for (std::size_t j = 0; j < u.values.size(); ++j)
        m = std::max(m, std::abs(u.values[j] - reference.values[j]));
    return m;
}

double discrete_inf_distance(const GridFunction& u,
                             const std::function<double(double)>& reference)
{
    double m = 0.0;
    for (int j = 1; j < u.mesh.n; ++j)
        m = std::max(m, std::abs(u.values[static_cast<std::size_t>(j - 1)] -
                                 reference(u.mesh.nodes[static_cast<std::size_t>(j)])));
    return m;
}

} // namespace cdlab
