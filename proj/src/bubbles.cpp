#include "cdlab/bubbles.hpp"

#include <cmath>
#include <stdexcept>

namespace cdlab {

PecletCoefficients peclet_coefficients(double epsilon, double h)
{
    if (!(epsilon > 0.0) || !(h > 0.0))
        throw std::invalid_argument("peclet_coefficients: epsilon and h must be positive");
    PecletCoefficients c{};
    c.pe = h / (2.0 * epsilon);
    const double t = std::exp(-h / epsilon);
    c.g0 = -std::expm1(-h / epsilon) / (1.0 + t);
    c.l_d = 0.5 * (1.0 + c.g0);
    c.u_d = 0.5 * (1.0 - c.g0);
    c.l0 = c.l_d / c.g0;
    c.u0 = c.u_d / c.g0;
    return c;
}

BubbleSpec quadratic_bubble(double beta, double h)
{
    if (!(beta > 0.0) || !(h > 0.0))
        throw std::invalid_argument("quadratic_bubble: beta and h must be positive");
    BubbleSpec s{};
    s.kind = BubbleKind::quadratic;
    s.h = h;
    s.epsilon = 0.0;
    s.beta = beta;
    s.b1 = 2.0 * beta / 3.0;
    s.midpoint = beta;
    s.l0 = 0.0;
    return s;
}

BubbleSpec exponential_bubble(double epsilon, double h)
{
    if (!(epsilon > 0.0) || !(h > 0.0))
        throw std::invalid_argument("exponential_bubble: epsilon and h must be positive");
    const PecletCoefficients c = peclet_coefficients(epsilon, h);
    BubbleSpec s{};
    s.kind = BubbleKind::exponential;
    s.h = h;
    s.epsilon = epsilon;
    s.beta = 0.0;
    s.b1 = 1.0 / (2.0 * c.g0) - epsilon / h;
    s.l0 = c.l0;
    s.midpoint = c.l0 * (-std::expm1(-h / (2.0 * epsilon))) - 0.5;
    return s;
}

double evaluate_bubble(const BubbleSpec& spec, double x)
{
    if (x < 0.0 || x > spec.h)
        throw std::invalid_argument("evaluate_bubble: x outside [0,h]");
    if (x == 0.0 || x == spec.h)
        return 0.0;
    switch (spec.kind) {
    case BubbleKind::quadratic:
        return (4.0 * spec.beta / (spec.h * spec.h)) * x * (spec.h - x);
    case BubbleKind::exponential:
        return spec.l0 * (-std::expm1(-x / spec.epsilon)) - x / spec.h;
    }
    return 0.0;
}

} // namespace cdlab
