#pragma once

#include "cdlab/model.hpp"
#include "cdlab/schemes.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cdlab {

/// String-identified scheme description; the concrete SchemeConfig (bubble
/// widths etc.) is instantiated per (epsilon, mesh).
struct SchemeSpec {
    std::string scheme;        // central | upwind | ias | quadratic-bubble | exp-bubble
    std::string rhs;           // pointwise | trapezoid | cs | gauss3 | oracle
    double beta = 0.75;        // quadratic-bubble parameter
    double oracle_tol = 1e-12; // oracle rhs tolerance

    SchemeConfig instantiate(double epsilon, const Mesh& mesh) const;
    /// Diffusion coefficient d the scheme's matrix corresponds to.
    double diffusion_coefficient(double epsilon, double h) const;
};

struct ReportRow {
    std::string scheme;
    std::string quadrature;
    double epsilon;
    int n;
    double h;
    double error_inf;
    double error_star;
    std::optional<double> observed_order;
};

struct ExperimentReport {
    std::string problem_id;
    std::string timestamp;
    std::string version;
    std::vector<ReportRow> rows;
};

/// Built-in registry ("f2x", "fzero") plus problems loaded from JSON files
/// carrying a tabulated source. Throws std::invalid_argument for unknown ids.
Problem lookup_problem(const std::string& id, double epsilon);

/// Registers a tabulated-source problem from a JSON file of the form
/// {"name": ..., "values": [...]} with values at uniformly spaced points on
/// [0,1], linearly interpolated. Returns the registered name.
std::string register_problem_file(const std::string& path);

ExperimentReport run_convergence(const std::string& problem_id, double epsilon,
                                 const std::vector<SchemeSpec>& configs,
                                 const std::vector<int>& n_list);

struct ComparisonResult {
    double d;                // shared diffusion coefficient
    double norm_difference;  // ||u_B - u_A||_{*,h}
    double dual_difference;  // dual norm of F_B - F_A
    double equality_gap;     // |norm_difference - dual_difference|
    std::optional<double> bound;      // h^2(sup|f''|/12 + sup|f'|/6) + M h ||f||_L2
    std::optional<bool> bound_holds;
};

ComparisonResult compare_solutions(const std::string& problem_id, double epsilon, int n,
                                   const SchemeSpec& config_a, const SchemeSpec& config_b);

void write_csv(const ExperimentReport& report, std::ostream& out);
void write_json(const ExperimentReport& report, std::ostream& out);
ExperimentReport parse_csv(std::istream& in);

} // namespace cdlab
