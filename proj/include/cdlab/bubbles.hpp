#pragma once

namespace cdlab {

/// Underflow-safe quantities attached to the local Peclet number h/(2 eps).
/// Everything is derived from t = e^{-h/eps}, which degrades gracefully to 0
/// for convection-dominated meshes; e^{+h/eps} never appears.
struct PecletCoefficients {
    double pe;  // h / (2 eps)
    double g0;  // tanh(pe) = (1 - t) / (1 + t)
    double l_d; // (1 + g0) / 2
    double u_d; // (1 - g0) / 2
    double l0;  // l_d / g0
    double u0;  // u_d / g0
};

PecletCoefficients peclet_coefficients(double epsilon, double h);

enum class BubbleKind { quadratic, exponential };

/// Generating bubble B on [0,h] with B(0) = B(h) = 0 and
/// (1/h) * integral of B = b1 > 0. Translates are produced by shifting the
/// evaluation argument, never materialized globally.
struct BubbleSpec {
    BubbleKind kind;
    double h;
    double epsilon; // exponential kind only
    double beta;    // quadratic kind only
    double b1;
    double midpoint; // B(h/2)
    double l0;       // cached for the exponential evaluator
};

/// B(x) = (4 beta / h^2) x (h - x); b1 = 2 beta / 3.
BubbleSpec quadratic_bubble(double beta, double h);

/// Solution of -eps B'' - B' = 1/h, B(0) = B(h) = 0:
/// B(x) = l0 (1 - e^{-x/eps}) - x/h; b1 = 1/(2 g0) - eps/h.
BubbleSpec exponential_bubble(double epsilon, double h);

double evaluate_bubble(const BubbleSpec& spec, double x);

} // namespace cdlab
