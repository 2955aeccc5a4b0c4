#include "cdlab/experiment.hpp"

#include "cdlab/errors.hpp"
#include "cdlab/norms.hpp"
#include "cdlab/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <tuple>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cdlab {

namespace {

constexpr const char* kToolVersion = "0.1.0";

std::map<std::string, std::vector<double>>& tabulated_registry()
{
    static std::map<std::string, std::vector<double>> registry;
    return registry;
}

QuadratureRule rule_for(const std::string& rhs)
{
    if (rhs == "trapezoid")
        return make_rule(RuleKind::trapezoid);
    if (rhs == "cs")
        return make_rule(RuleKind::cavalieri_simpson);
    if (rhs == "gauss3")
        return make_rule(RuleKind::gauss3);
    throw std::invalid_argument("unknown rhs rule id: " + rhs);
}

std::string iso_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> assemble_rhs_for(const SchemeConfig& config, const Problem& problem,
                                     const Mesh& mesh)
{
    switch (config.rhs.kind) {
    case RhsRule::Kind::pointwise:
        return assemble_rhs_pointwise(problem, mesh);
    case RhsRule::Kind::bubble_quadrature:
        return assemble_rhs_bubble(problem, mesh, *config.rhs.bubble, *config.rhs.rule);
    case RhsRule::Kind::bubble_oracle:
        return assemble_rhs_bubble_oracle(problem, mesh, *config.rhs.bubble, config.rhs.tol);
    }
    throw std::invalid_argument("unknown rhs kind");
}

double bubble_sup(const BubbleSpec& spec)
{
    double m = spec.midpoint;
    for (int i = 1; i < 2048; ++i)
        m = std::max(m, evaluate_bubble(spec, spec.h * i / 2048.0));
    return m;
}

} // namespace

SchemeConfig SchemeSpec::instantiate(double epsilon, const Mesh& mesh) const
{
    std::optional<BubbleSpec> bubble;
    DiffusionRule diffusion;
    if (scheme == "central") {
        diffusion = DiffusionRule::central();
    } else if (scheme == "upwind") {
        diffusion = DiffusionRule::standard_upwind();
        bubble = quadratic_bubble(0.75, mesh.h); // beta = 3/4 matches eps_h = eps + h/2
    } else if (scheme == "ias") {
        diffusion = DiffusionRule::ias_sg();
        bubble = exponential_bubble(epsilon, mesh.h);
    } else if (scheme == "quadratic-bubble") {
        bubble = quadratic_bubble(beta, mesh.h);
        diffusion = DiffusionRule::from_bubble(*bubble);
    } else if (scheme == "exp-bubble") {
        bubble = exponential_bubble(epsilon, mesh.h);
        diffusion = DiffusionRule::from_bubble(*bubble);
    } else {
        throw std::invalid_argument("unknown scheme id: " + scheme);
    }

    RhsRule rhs_rule;
    if (rhs == "pointwise") {
        rhs_rule = RhsRule::pointwise();
    } else if (rhs == "oracle") {
        if (!bubble)
            throw std::invalid_argument("rhs 'oracle' needs a bubble scheme");
        rhs_rule = RhsRule::bubble_oracle(*bubble, oracle_tol);
    } else {
        if (!bubble)
            throw std::invalid_argument("rhs '" + rhs + "' needs a bubble scheme");
        rhs_rule = RhsRule::bubble_quadrature(*bubble, rule_for(rhs));
    }
    return {diffusion, rhs_rule};
}

double SchemeSpec::diffusion_coefficient(double epsilon, double h) const
{
    if (scheme == "central")
        return epsilon;
    if (scheme == "upwind")
        return epsilon + 0.5 * h;
    if (scheme == "ias" || scheme == "exp-bubble")
        return artificial_diffusion(epsilon, h, DiffusionRule::ias_sg());
    if (scheme == "quadratic-bubble")
        return epsilon + quadratic_bubble(beta, h).b1 * h;
    throw std::invalid_argument("unknown scheme id: " + scheme);
}

Problem lookup_problem(const std::string& id, double epsilon)
{
    if (id == "f2x")
        return test_problem_f2x(epsilon);
    if (id == "fzero")
        return test_problem_fzero(epsilon);
    auto it = tabulated_registry().find(id);
    if (it == tabulated_registry().end())
        throw std::invalid_argument("unknown problem id: " + id);
    const std::vector<double> table = it->second;
    Problem p;
    p.epsilon = epsilon;
    p.source = [table](double x) {
        const double m = static_cast<double>(table.size()) - 1.0;
        const double t = std::clamp(x, 0.0, 1.0) * m;
        const std::size_t i = std::min(static_cast<std::size_t>(t), table.size() - 2);
        const double frac = t - static_cast<double>(i);
        return table[i] * (1.0 - frac) + table[i + 1] * frac;
    };
    return p;
}

std::string register_problem_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open problem file: " + path);
    nlohmann::json j;
    in >> j;
    const std::string name = j.at("name").get<std::string>();
    const auto values = j.at("values").get<std::vector<double>>();
    if (values.size() < 2)
        throw std::invalid_argument("problem file needs at least two tabulated values");
    tabulated_registry()[name] = values;
    return name;
}

ExperimentReport run_convergence(const std::string& problem_id, double epsilon,
                                 const std::vector<SchemeSpec>& configs,
                                 const std::vector<int>& n_list)
{
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 2)
            throw std::invalid_argument("run_convergence: each n must be >= 2");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("run_convergence: n list must be strictly increasing");
    }
    const Problem problem = lookup_problem(problem_id, epsilon);

    ExperimentReport report;
    report.problem_id = problem_id;
    report.timestamp = iso_timestamp();
    report.version = kToolVersion;

    for (const SchemeSpec& spec : configs) {
        std::optional<double> prev_star;
        std::optional<double> prev_inf;
        std::optional<int> prev_n;
        for (int n : n_list) {
            const Mesh mesh = make_uniform_mesh(n);
            const SchemeConfig config = spec.instantiate(epsilon, mesh);
            const GridFunction u = solve_scheme(config, problem, mesh);

            ReportRow row;
            row.scheme = spec.scheme;
            row.quadrature = spec.rhs;
            row.epsilon = epsilon;
            row.n = n;
            row.h = mesh.h;
            if (problem.exact) {
                row.error_inf = discrete_inf_distance(u, *problem.exact);
                GridFunction diff = interpolate_exact(problem, mesh);
                for (std::size_t k = 0; k < diff.values.size(); ++k)
                    diff.values[k] -= u.values[k];
                const double d = spec.diffusion_coefficient(epsilon, mesh.h);
                row.error_star = optimal_trial_norm(diff, d);
            } else {
                row.error_inf = std::numeric_limits<double>::quiet_NaN();
                row.error_star = std::numeric_limits<double>::quiet_NaN();
            }
            // Order between consecutive n pairs, reported on the finer row.
            const double e_ref = std::isnan(row.error_star) ? row.error_inf : row.error_star;
            const double e_prev = prev_star.has_value() && !std::isnan(*prev_star)
                                      ? *prev_star
                                      : (prev_inf ? *prev_inf : 0.0);
            if (prev_n && e_prev > 0.0 && e_ref > 0.0)
                row.observed_order =
                    std::log(e_prev / e_ref) / std::log(static_cast<double>(n) / *prev_n);
            prev_star = row.error_star;
            prev_inf = row.error_inf;
            prev_n = n;
            report.rows.push_back(std::move(row));
        }
    }
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                         return std::tie(a.scheme, a.quadrature, a.n) <
                                std::tie(b.scheme, b.quadrature, b.n);
                     });
    return report;
}

ComparisonResult compare_solutions(const std::string& problem_id, double epsilon, int n,
                                   const SchemeSpec& config_a, const SchemeSpec& config_b)
{
    const Mesh mesh = make_uniform_mesh(n);
    const double da = config_a.diffusion_coefficient(epsilon, mesh.h);
    const double db = config_b.diffusion_coefficient(epsilon, mesh.h);
    if (std::abs(da - db) > 1e-12 * std::max(std::abs(da), std::abs(db)))
        throw incomparable_configs("compare_solutions: configs have different diffusion, " +
                                   format_double(da) + " vs " + format_double(db));

    const Problem problem = lookup_problem(problem_id, epsilon);
    const SchemeConfig a = config_a.instantiate(epsilon, mesh);
    const SchemeConfig b = config_b.instantiate(epsilon, mesh);

    const GridFunction ua = solve_scheme(a, problem, mesh);
    const GridFunction ub = solve_scheme(b, problem, mesh);
    const std::vector<double> fa = assemble_rhs_for(a, problem, mesh);
    const std::vector<double> fb = assemble_rhs_for(b, problem, mesh);

    GridFunction diff = ub;
    std::vector<double> fdiff(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
        diff.values[i] -= ua.values[i];
        fdiff[i] = fb[i] - fa[i];
    }

    ComparisonResult result;
    result.d = da;
    result.norm_difference = optimal_trial_norm(diff, da);
    result.dual_difference = dual_norm(fdiff, mesh);
    result.equality_gap = std::abs(result.norm_difference - result.dual_difference);

    const std::optional<BubbleSpec> bubble =
        b.rhs.bubble ? b.rhs.bubble : (a.rhs.bubble ? a.rhs.bubble : b.diffusion.bubble);
    if (problem.source_deriv_bounds && bubble) {
        const auto [sup_f1, sup_f2] = *problem.source_deriv_bounds;
        const double f_l2 = std::sqrt(
            oracle_integrate([&](double x) { const double v = problem.source(x); return v * v; },
                             0.0, 1.0, 1e-13));
        const double h = mesh.h;
        result.bound = h * h * (sup_f2 / 12.0 + sup_f1 / 6.0) + bubble_sup(*bubble) * h * f_l2;
        result.bound_holds = result.norm_difference <= *result.bound;
    }
    return result;
}

void write_csv(const ExperimentReport& report, std::ostream& out)
{
    out << "scheme,quadrature,epsilon,n,h,error_inf,error_star,observed_order\n";
    for (const ReportRow& row : report.rows) {
        out << row.scheme << ',' << row.quadrature << ',' << format_double(row.epsilon) << ','
            << row.n << ',' << format_double(row.h) << ',' << format_double(row.error_inf) << ','
            << format_double(row.error_star) << ',';
        if (row.observed_order)
            out << format_double(*row.observed_order);
        out << '\n';
    }
}

void write_json(const ExperimentReport& report, std::ostream& out)
{
    nlohmann::json j;
    j["metadata"] = {{"problem", report.problem_id},
                     {"timestamp", report.timestamp},
                     {"version", report.version}};
    j["rows"] = nlohmann::json::array();
    for (const ReportRow& row : report.rows) {
        nlohmann::json r = {{"scheme", row.scheme},     {"quadrature", row.quadrature},
                            {"epsilon", row.epsilon},   {"n", row.n},
                            {"h", row.h},               {"error_inf", row.error_inf},
                            {"error_star", row.error_star}};
        if (row.observed_order)
            r["observed_order"] = *row.observed_order;
        j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << '\n';
}

ExperimentReport parse_csv(std::istream& in)
{
    ExperimentReport report;
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string field;
        ReportRow row;
        std::getline(ss, row.scheme, ',');
        std::getline(ss, row.quadrature, ',');
        std::getline(ss, field, ',');
        row.epsilon = std::strtod(field.c_str(), nullptr);
        std::getline(ss, field, ',');
        row.n = std::stoi(field);
        std::getline(ss, field, ',');
        row.h = std::strtod(field.c_str(), nullptr);
        std::getline(ss, field, ',');
        row.error_inf = std::strtod(field.c_str(), nullptr);
        std::getline(ss, field, ',');
        row.error_star = std::strtod(field.c_str(), nullptr);
        if (std::getline(ss, field, ',') && !field.empty())
            row.observed_order = std::strtod(field.c_str(), nullptr);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace cdlab
