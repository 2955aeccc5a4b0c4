#include "cdlab/errors.hpp"
#include "cdlab/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CommonOptions {
    std::string problem = "f2x";
    std::string problem_file;
    double eps = 1e-6;
    std::string format = "csv";
    std::string out;
    bool warn_underflow = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt)
{
    cmd->add_option("--problem", opt.problem, "Problem id (f2x, fzero, or registered name)");
    cmd->add_option("--problem-file", opt.problem_file,
                    "JSON file with a tabulated source to register");
    cmd->add_option("--eps", opt.eps, "Diffusion coefficient")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out, "Output file (default stdout)");
    cmd->add_flag("--warn-underflow", opt.warn_underflow,
                  "Warn when h/eps exceeds the double-precision underflow threshold");
}

void add_scheme_options(CLI::App* cmd, cdlab::SchemeSpec& spec, const std::string& suffix = "")
{
    cmd->add_option("--scheme" + suffix, spec.scheme, "Scheme id")
        ->check(CLI::IsMember({"central", "upwind", "ias", "quadratic-bubble", "exp-bubble"}));
    cmd->add_option("--rhs" + suffix, spec.rhs, "Right-hand-side rule")
        ->check(CLI::IsMember({"pointwise", "trapezoid", "cs", "gauss3", "oracle"}));
    cmd->add_option("--beta" + suffix, spec.beta, "Quadratic bubble parameter")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--oracle-tol" + suffix, spec.oracle_tol, "Oracle rhs tolerance");
}

void maybe_warn_underflow(const CommonOptions& opt, int n)
{
    const double ratio = 1.0 / (n * opt.eps);
    if (opt.warn_underflow && ratio > 36.05)
        std::cerr << "warning: h/eps = " << ratio
                  << " exceeds 36.05; e^{-h/eps} underflows and the exponential scheme "
                     "plateaus. Prefer h <= 30*eps.\n";
}

int emit(const cdlab::ExperimentReport& report, const CommonOptions& opt)
{
    std::ostringstream buf;
    if (opt.format == "json")
        cdlab::write_json(report, buf);
    else
        cdlab::write_csv(report, buf);
    if (opt.out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream file(opt.out);
        if (!file) {
            std::cerr << "error: cannot open output file " << opt.out << '\n';
            return 2;
        }
        file << buf.str();
    }
    return 0;
}

std::vector<int> parse_n_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"1D convection-diffusion discretization lab"};
    app.require_subcommand(1);

    CommonOptions opt;
    cdlab::SchemeSpec spec{"upwind", "pointwise"};
    cdlab::SchemeSpec spec_b{"upwind", "pointwise"};
    int n = 800;
    std::string n_list_text = "100,200,400,800,1600";

    CLI::App* solve = app.add_subcommand("solve", "Single solve, one report row");
    add_common(solve, opt);
    add_scheme_options(solve, spec);
    solve->add_option("--n", n, "Subinterval count")->check(CLI::Range(2, 1 << 24));

    CLI::App* conv = app.add_subcommand("convergence", "Sweep over a list of n values");
    add_common(conv, opt);
    add_scheme_options(conv, spec);
    conv->add_option("--n-list", n_list_text, "Comma-separated strictly increasing n values");

    CLI::App* compare = app.add_subcommand("compare", "Compare two schemes sharing a matrix");
    add_common(compare, opt);
    add_scheme_options(compare, spec, "-a");
    add_scheme_options(compare, spec_b, "-b");
    compare->add_option("--n", n, "Subinterval count")->check(CLI::Range(2, 1 << 24));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (!opt.problem_file.empty())
            cdlab::register_problem_file(opt.problem_file);

        if (solve->parsed()) {
            maybe_warn_underflow(opt, n);
            const auto report = cdlab::run_convergence(opt.problem, opt.eps, {spec}, {n});
            return emit(report, opt);
        }
        if (conv->parsed()) {
            const auto n_list = parse_n_list(n_list_text);
            for (int nv : n_list)
                maybe_warn_underflow(opt, nv);
            const auto report = cdlab::run_convergence(opt.problem, opt.eps, {spec}, n_list);
            return emit(report, opt);
        }
        if (compare->parsed()) {
            maybe_warn_underflow(opt, n);
            const auto r = cdlab::compare_solutions(opt.problem, opt.eps, n, spec, spec_b);
            char bound_text[40] = "";
            if (r.bound)
                std::snprintf(bound_text, sizeof(bound_text), "%.17g", *r.bound);
            char line[320];
            std::snprintf(line, sizeof(line),
                          "d,norm_difference,dual_difference,equality_gap,bound,bound_holds\n"
                          "%.17g,%.17g,%.17g,%.17g,%s,%s\n",
                          r.d, r.norm_difference, r.dual_difference, r.equality_gap, bound_text,
                          r.bound_holds ? (*r.bound_holds ? "true" : "false") : "");
            if (opt.out.empty()) {
                std::cout << line;
            } else {
                std::ofstream file(opt.out);
                file << line;
            }
            return 0;
        }
    } catch (const cdlab::singular_system& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const cdlab::no_convergence& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
