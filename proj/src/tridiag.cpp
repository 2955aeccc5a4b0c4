#include "cdlab/tridiag.hpp"

#include "cdlab/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace cdlab {

TridiagonalSystem make_tridiag(std::size_t m, double lo, double mid, double up)
{
    TridiagonalSystem s;
    s.lower.assign(m - 1, lo);
    s.main.assign(m, mid);
    s.upper.assign(m - 1, up);
    return s;
}

std::vector<double> apply(const TridiagonalSystem& system, std::span<const double> v)
{
    const std::size_t m = system.size();
    if (v.size() != m)
        throw std::invalid_argument("tridiag apply: vector length mismatch");
    std::vector<double> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        double acc = system.main[i] * v[i];
        if (i > 0)
            acc += system.lower[i - 1] * v[i - 1];
        if (i + 1 < m)
            acc += system.upper[i] * v[i + 1];
        out[i] = acc;
    }
    return out;
}

std::vector<double> solve(const TridiagonalSystem& system, std::span<const double> rhs)
{
    const std::size_t m = system.size();
    if (rhs.size() != m)
        throw std::invalid_argument("tridiag solve: rhs length mismatch");

    std::vector<double> c(m - 1); // modified upper diagonal
    std::vector<double> x(rhs.begin(), rhs.end());

    double pivot = system.main[0];
    if (std::abs(pivot) < 1e-300)
        throw singular_system("tridiag solve: zero pivot at row 0");
    if (m > 1)
        c[0] = system.upper[0] / pivot;
    x[0] /= pivot;

    for (std::size_t i = 1; i < m; ++i) {
        pivot = system.main[i] - system.lower[i - 1] * c[i - 1];
        if (std::abs(pivot) < 1e-300)
            throw singular_system("tridiag solve: zero pivot at row " + std::to_string(i));
        if (i + 1 < m)
            c[i] = system.upper[i] / pivot;
        x[i] = (x[i] - system.lower[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;)
        x[i] -= c[i] * x[i + 1];
    return x;
}

} // namespace cdlab
