// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion runs in seconds.

#include "cdlab/experiment.hpp"
#include "cdlab/norms.hpp"
#include "cdlab/quadrature.hpp"
#include "cdlab/schemes.hpp"

#include "dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace cdlab;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "")
{
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

GridFunction random_grid_function(int n, std::mt19937& rng)
{
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    GridFunction u;
    u.mesh = make_uniform_mesh(n);
    u.values.resize(static_cast<std::size_t>(n) - 1);
    for (auto& v : u.values)
        v = unif(rng);
    return u;
}

void criterion1_paper_table()
{
    const Problem p = test_problem_f2x(1e-6);
    const Mesh mesh = make_uniform_mesh(800);
    const GridFunction tfd =
        solve_scheme({DiffusionRule::standard_upwind(), RhsRule::pointwise()}, p, mesh);
    const double err_tfd = discrete_inf_distance(tfd, *p.exact);

    const auto bubble = quadratic_bubble(0.75, mesh.h);
    const GridFunction csfd = solve_scheme(
        {DiffusionRule::from_bubble(bubble),
         RhsRule::bubble_quadrature(bubble, make_rule(RuleKind::cavalieri_simpson))},
        p, mesh);
    const double err_csfd = discrete_inf_distance(csfd, *p.exact);
    // diagnostic: the same error with the final interior node (the only node
    // touching the layer) left out
    double err_csfd_trunc = 0.0;
    for (std::size_t j = 0; j + 1 < csfd.values.size(); ++j) {
        const double x = static_cast<double>(j + 1) * mesh.h;
        err_csfd_trunc = std::max(err_csfd_trunc, std::abs(csfd.values[j] - (*p.exact)(x)));
    }

    const bool ok_tfd = std::abs(err_tfd - 0.0012) <= 0.1 * 0.0012;
    const bool ok_csfd = err_csfd >= 0.64e-6 / 2.0 && err_csfd <= 0.64e-6 * 2.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "T-FD %.4g (target 0.0012), CS-FD %.4g (target 6.4e-07; %.4g without the "
                  "final layer node)",
                  err_tfd, err_csfd, err_csfd_trunc);
    report(1, "reference error table, f=2x, eps=1e-6, n=800", ok_tfd && ok_csfd, detail);
}

void criterion2_plateau()
{
    const double eps = 1e-6;
    const Problem p = test_problem_f2x(eps);
    bool ok = true;
    std::string detail;
    for (int n : {100, 200, 400, 800, 1600}) {
        const Mesh mesh = make_uniform_mesh(n);
        const auto bubble = exponential_bubble(eps, mesh.h);
        const GridFunction u = solve_scheme(
            {DiffusionRule::from_bubble(bubble),
             RhsRule::bubble_quadrature(bubble, make_rule(RuleKind::gauss3))},
            p, mesh);
        const double err = discrete_inf_distance(u, interpolate_exact(p, mesh));
        ok = ok && err >= 0.5e-6 && err <= 5e-6;
        detail += (detail.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(err);
    }
    report(2, "underflow plateau, exp bubble + gauss3, errors in [0.5e-6, 5e-6]", ok, detail);
}

void criterion3_nodal_exactness()
{
    bool ok = true;
    double worst = 0.0;
    for (double eps : {0.5, 0.1, 0.05}) {
        const Problem p = test_problem_f2x(eps);
        for (int n : {4, 8, 16, 32}) {
            const Mesh mesh = make_uniform_mesh(n);
            const auto bubble = exponential_bubble(eps, mesh.h);
            const GridFunction u = solve_scheme(
                {DiffusionRule::from_bubble(bubble), RhsRule::bubble_oracle(bubble, 1e-12)}, p,
                mesh);
            const double err = discrete_inf_distance(u, *p.exact);
            worst = std::max(worst, err);
            ok = ok && err <= 1e-9;
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "max nodal deviation %.3g", worst);
    report(3, "nodal exactness of the exponential PG scheme with oracle rhs", ok, detail);
}

void criterion4_matrix_equivalence()
{
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(unif(rng) * 60);
        const Mesh mesh = make_uniform_mesh(n);
        const double eps = std::pow(10.0, -4.0 * unif(rng));
        const BubbleSpec bubble = (trial % 2 == 0)
                                      ? quadratic_bubble(0.1 + 2.0 * unif(rng), mesh.h)
                                      : exponential_bubble(eps, mesh.h);
        const double b1 = bubble.b1;
        const double d_phi = artificial_diffusion(
            eps, mesh.h, DiffusionRule::custom([b1](double pe) { return 2.0 * b1 * pe; }));
        const double d_b1 = artificial_diffusion(eps, mesh.h, DiffusionRule::from_bubble(bubble));
        const auto ma = assemble_system_matrix(d_phi, mesh);
        const auto mb = assemble_system_matrix(d_b1, mesh);
        auto close = [](double a, double b) {
            return std::abs(a - b) <= 1e-13 * std::max({std::abs(a), std::abs(b), 1.0});
        };
        ok = ok && close(ma.lower[0], mb.lower[0]) && close(ma.main[0], mb.main[0]) &&
             close(ma.upper[0], mb.upper[0]);
    }
    // beta = 3/4 on dyadic (eps, h): entries are exact rationals
    const Mesh mesh = make_uniform_mesh(8); // h = 0.125
    const double eps = 0.25;
    const auto bubble = quadratic_bubble(0.75, mesh.h);
    const auto m = assemble_system_matrix(
        artificial_diffusion(eps, mesh.h, DiffusionRule::from_bubble(bubble)), mesh);
    const double r = eps / mesh.h; // = 2 exactly
    ok = ok && m.lower[0] == -r - 1.0 && m.main[0] == 2.0 * r + 1.0 && m.upper[0] == -r;
    report(4, "FD matrix equals PG FE matrix (Phi route vs b1 route)", ok);
}

void criterion5_trapezoid_identity()
{
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        // random cubic source
        const double c0 = unif(rng), c1 = unif(rng), c2 = unif(rng), c3 = unif(rng);
        Problem p;
        p.epsilon = 0.1;
        p.source = [=](double x) { return c0 + x * (c1 + x * (c2 + x * c3)); };
        const Mesh mesh = make_uniform_mesh(4 + trial % 7);
        const auto pointwise = assemble_rhs_pointwise(p, mesh);
        for (const auto& bubble : {quadratic_bubble(0.3 + unif(rng) * unif(rng) + 1.0, mesh.h),
                                   exponential_bubble(0.02 + 0.3 * std::abs(unif(rng)), mesh.h)}) {
            const auto tr = assemble_rhs_bubble(p, mesh, bubble, make_rule(RuleKind::trapezoid));
            for (std::size_t i = 0; i < tr.size(); ++i)
                ok = ok && std::abs(tr[i] - pointwise[i]) <=
                               1e-14 * std::max(1.0, std::abs(pointwise[i]));
        }
    }
    report(5, "trapezoid-assembled bubble rhs equals h f(x_j)", ok);
}

void criterion6_norm_identity()
{
    std::mt19937 rng(606);
    bool ok = true;
    double worst = 0.0;
    for (int n : {4, 8, 16}) {
        for (double d : {1e-3, 1e-1, 1.0}) {
            for (int trial = 0; trial < 100; ++trial) {
                const GridFunction u = random_grid_function(n, rng);
                const double a = optimal_trial_norm(u, d);
                const double b = optimal_trial_norm_via_sup(u, d);
                const double gap = std::abs(a - b) / std::max(a, b);
                worst = std::max(worst, gap);
                ok = ok && gap <= 1e-10;
            }
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "worst relative gap %.3g", worst);
    report(6, "explicit vs sup-based optimal trial norm", ok, detail);
}

void criterion7_difference_identity()
{
    std::mt19937 rng(707);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool ok = true;
    const int n = 16;
    const Mesh mesh = make_uniform_mesh(n);
    const double d = 0.15;
    const auto matrix = assemble_system_matrix(d, mesh);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> f1(static_cast<std::size_t>(n) - 1), f2(f1.size()), df(f1.size());
        for (std::size_t i = 0; i < f1.size(); ++i) {
            f1[i] = gauss(rng);
            f2[i] = gauss(rng);
            df[i] = f2[i] - f1[i];
        }
        const auto u1 = solve(matrix, f1);
        const auto u2 = solve(matrix, f2);
        GridFunction diff;
        diff.mesh = mesh;
        diff.values.resize(u1.size());
        for (std::size_t i = 0; i < u1.size(); ++i)
            diff.values[i] = u2[i] - u1[i];
        const double a = optimal_trial_norm(diff, d);
        const double b = dual_norm(df, mesh);
        ok = ok && std::abs(a - b) <= 1e-10 * std::max(a, b);
    }
    report(7, "difference identity ||u2-u1||_{*,h} = ||F2-F1||_dual", ok);
}

void criterion8_closeness_bound()
{
    bool ok = true;
    for (double eps : {0.5, 0.1}) {
        for (int n = 8; n <= 128; n *= 2) {
            const auto r = compare_solutions("f2x", eps, n, SchemeSpec{"upwind", "pointwise"},
                                             SchemeSpec{"quadratic-bubble", "oracle"});
            ok = ok && r.bound.has_value() && r.norm_difference <= *r.bound;
        }
    }
    report(8, "FE-FD closeness bound h^2(|f''|/12 + |f'|/6) + M h ||f||", ok);
}

void criterion9_order_improvement()
{
    const double eps = 0.1;
    auto orders = [&](const char* rhs) {
        std::vector<double> errs;
        for (int n = 8; n <= 128; n *= 2) {
            const Mesh mesh = make_uniform_mesh(n);
            const Problem p = test_problem_f2x(eps);
            const SchemeSpec spec{"exp-bubble", rhs};
            const GridFunction u = solve_scheme(spec.instantiate(eps, mesh), p, mesh);
            GridFunction diff = interpolate_exact(p, mesh);
            for (std::size_t k = 0; k < diff.values.size(); ++k)
                diff.values[k] -= u.values[k];
            errs.push_back(optimal_trial_norm(diff, spec.diffusion_coefficient(eps, mesh.h)));
        }
        std::vector<double> slopes;
        for (std::size_t i = 1; i < errs.size(); ++i)
            slopes.push_back(std::log2(errs[i - 1] / errs[i]));
        return slopes;
    };
    const auto tr = orders("trapezoid");
    const auto cs = orders("cs");
    bool ok = true;
    for (double s : tr)
        ok = ok && s >= 1.7;
    for (double s : cs)
        ok = ok && s >= 2.7;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "trapezoid slopes %.2f %.2f %.2f %.2f, CS slopes %.2f %.2f %.2f %.2f", tr[0],
                  tr[1], tr[2], tr[3], cs[0], cs[1], cs[2], cs[3]);
    report(9, "rhs quadrature upgrades the optimal-norm order (>=1.7 / >=2.7)", ok, detail);
}

void criterion10_quadrature_orders()
{
    auto composite = [](const QuadratureRule& r, int pieces) {
        double acc = 0.0;
        for (int i = 0; i < pieces; ++i)
            acc += element_integrate(r, [](double x) { return std::exp(x); },
                                     static_cast<double>(i) / pieces,
                                     static_cast<double>(i + 1) / pieces);
        return acc;
    };
    const double exact = std::exp(1.0) - 1.0;
    bool ok = true;
    const struct {
        RuleKind kind;
        double order;
        double tol;
    } cases[] = {{RuleKind::trapezoid, 2.0, 0.3},
                 {RuleKind::cavalieri_simpson, 4.0, 0.3},
                 {RuleKind::gauss3, 6.0, 0.3}};
    for (const auto& c : cases) {
        const QuadratureRule r = make_rule(c.kind);
        const double e1 = std::abs(composite(r, 4) - exact);
        const double e2 = std::abs(composite(r, 8) - exact);
        const double slope = std::log2(e1 / e2);
        ok = ok && std::abs(slope - c.order) <= c.tol;
    }
    report(10, "composite quadrature orders 2/4/6 on e^x", ok);
}

void criterion11_underflow_limit()
{
    const double eps = 1e-8;
    const Mesh mesh = make_uniform_mesh(100);
    const auto matrix = exponential_pg_matrix(eps, mesh);
    bool matrix_ok = true;
    for (double v : matrix.lower)
        matrix_ok = matrix_ok && v == -1.0;
    for (double v : matrix.main)
        matrix_ok = matrix_ok && v == 1.0;
    for (double v : matrix.upper)
        matrix_ok = matrix_ok && v == 0.0;

    const Problem p = test_problem_f2x(eps);
    const auto bubble = exponential_bubble(eps, mesh.h);
    const GridFunction u = solve_scheme(
        {DiffusionRule::from_bubble(bubble), RhsRule::bubble_oracle(bubble, 1e-12)}, p, mesh);
    bool sol_ok = true;
    for (int j = 1; j < mesh.n; ++j) {
        const double xj = mesh.nodes[static_cast<std::size_t>(j)];
        sol_ok = sol_ok && std::abs(u.values[static_cast<std::size_t>(j - 1)] - xj * xj) <= 1e-10;
    }
    report(11, "underflow limit: matrix tridiag(-1,1,0) and u_j = x_j^2", matrix_ok && sol_ok);
}

void criterion12_solver_oracle()
{
    std::mt19937 rng(1212);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + static_cast<std::size_t>(98.0 * (unif(rng) + 1.0) / 2.0);
        TridiagonalSystem t;
        t.lower.resize(m - 1);
        t.upper.resize(m - 1);
        t.main.resize(m);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            t.lower[i] = unif(rng);
            t.upper[i] = unif(rng);
        }
        for (std::size_t i = 0; i < m; ++i)
            t.main[i] = 2.5 + std::abs(unif(rng));
        std::vector<double> rhs(m);
        for (auto& v : rhs)
            v = unif(rng);
        const auto x = solve(t, rhs);
        const auto ref = testutil::dense_solve(testutil::densify(t), rhs);
        for (std::size_t i = 0; i < m; ++i)
            ok = ok &&
                 std::abs(x[i] - ref[i]) <= 1e-11 * std::max({std::abs(x[i]), std::abs(ref[i]), 1.0});
    }
    report(12, "Thomas solve matches the dense elimination oracle", ok);
}

} // namespace

int main()
{
    criterion1_paper_table();
    criterion2_plateau();
    criterion3_nodal_exactness();
    criterion4_matrix_equivalence();
    criterion5_trapezoid_identity();
    criterion6_norm_identity();
    criterion7_difference_identity();
    criterion8_closeness_bound();
    criterion9_order_improvement();
    criterion10_quadrature_orders();
    criterion11_underflow_limit();
    criterion12_solver_oracle();

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
