// Command-line front end: solve, rate, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lavrentiev/experiment.hpp"
#include "lavrentiev/output.hpp"
#include "lavrentiev/verify.hpp"

namespace {

constexpr int kExitSolver = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

lavr::ProblemSpec problem_from(const std::string& problem)
{
    lavr::ProblemSpec spec;
    if (problem == "f1") {
        spec.solution = lavr::Solution::F1;
    } else if (problem == "f2") {
        spec.solution = lavr::Solution::F2;
    } else if (problem.rfind("file:", 0) == 0) {
        const std::string path = problem.substr(5);
        std::ifstream is(path);
        if (!is)
            throw UsageError("cannot read problem file '" + path + "'");
        spec.solution = lavr::Solution::Custom;
        spec.custom = lavr::read_csv(is);
    } else {
        throw UsageError("unknown problem '" + problem + "' (expected f1, f2 or file:PATH)");
    }
    return spec;
}

lavr::AlphaRule alpha_rule_from(const std::string& rule, double c)
{
    return {rule == "twofifths" ? lavr::AlphaRuleKind::TwoFifths : lavr::AlphaRuleKind::SqrtDelta, c};
}

lavr::SmoothingRule smoothing_from(const std::string& s)
{
    return s == "minimal" ? lavr::SmoothingRule::MinimalRate : lavr::SmoothingRule::CubicLevel;
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto end = comma == std::string::npos ? s.size() : comma;
        if (end > start)
            out.push_back(s.substr(start, end - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lavrent'ev regularization for the autoconvolution equation"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "reconstruct x0 from synthetic noisy data");
    std::string problem = "f1", method = "pc", alpha_rule = "sqrt", noise = "sup",
                smoothing = "cubic", out_dir;
    double delta = 0.0, sigma = 0.0, c = 1.0, smoothness = 2.0;
    std::optional<double> alpha;
    std::optional<int> m, smoothing_m;
    int fine_n = lavr::UniformGrid::kDefaultCells;
    std::uint64_t seed = 42;
    bool no_plot = false;
    solve->add_option("--problem", problem, "f1, f2 or file:PATH (CSV t,value)");
    solve->add_option("--delta", delta, "noise level")->required();
    solve->add_option("--method", method)->check(CLI::IsMember({"pc", "pc-smooth", "cubic"}));
    solve->add_option("--sigma", sigma, "weight exponent");
    auto* alpha_opt = solve->add_option("--alpha", alpha, "regularization parameter");
    solve->add_option("--alpha-rule", alpha_rule)
        ->check(CLI::IsMember({"sqrt", "twofifths"}))
        ->excludes(alpha_opt);
    solve->add_option("--c", c, "constant in the alpha rule");
    solve->add_option("--m", m, "discretization level");
    solve->add_option("--fine-n", fine_n, "fine grid cells");
    solve->add_option("--seed", seed);
    solve->add_option("--noise", noise)->check(CLI::IsMember({"sup", "l2"}));
    solve->add_option("--smoothness", smoothness, "bound on ||x0||_C1 (l2 noise)");
    solve->add_option("--smoothing", smoothing, "post-smoothing level rule")
        ->check(CLI::IsMember({"cubic", "minimal"}));
    solve->add_option("--smoothing-m", smoothing_m, "post-smoothing knot intervals");
    solve->add_flag("--no-plot", no_plot);
    solve->add_option("--out", out_dir)->required();

    // rate
    auto* rate = app.add_subcommand("rate", "convergence-rate study over noise levels");
    std::string rate_problem = "f1", deltas_arg = "0.04,0.02,0.01,0.005,0.0025",
                methods_arg = "pc,pc-smooth,cubic", rate_rule = "sqrt", rate_smoothing = "cubic",
                rate_out;
    int repeats = 3, rate_fine_n = lavr::UniformGrid::kDefaultCells;
    unsigned workers = 0;
    double rate_c = 1.0, rate_sigma = 0.0;
    std::uint64_t rate_seed = 42;
    rate->add_option("--problem", rate_problem)->check(CLI::IsMember({"f1", "f2"}));
    rate->add_option("--deltas", deltas_arg, "comma-separated, strictly decreasing");
    rate->add_option("--methods", methods_arg, "comma-separated subset of pc,pc-smooth,cubic");
    rate->add_option("--repeats", repeats);
    rate->add_option("--seed", rate_seed);
    rate->add_option("--alpha-rule", rate_rule)->check(CLI::IsMember({"sqrt", "twofifths"}));
    rate->add_option("--c", rate_c);
    rate->add_option("--sigma", rate_sigma);
    rate->add_option("--fine-n", rate_fine_n);
    rate->add_option("--smoothing", rate_smoothing)->check(CLI::IsMember({"cubic", "minimal"}));
    rate->add_option("--workers", workers, "worker threads (0 = all cores)");
    rate->add_option("--out", rate_out)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check the numerical bounds and print pass/fail");
    std::string suite;
    verify->add_option("--suite", suite)->check(CLI::IsMember({"projector", "operator", "initval", "solver"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) {
            lavr::ProblemSpec spec = problem_from(problem);
            spec.fine_n = fine_n;
            spec.sigma = sigma;
            spec.noise.kind = noise == "l2" ? lavr::NoiseKind::L2Norm : lavr::NoiseKind::SupNorm;
            spec.noise.delta = delta;
            spec.noise.seed = seed;
            spec.noise.smoothness_bound = smoothness;
            lavr::RunOptions options;
            options.alpha_rule = alpha_rule_from(alpha_rule, c);
            options.alpha = alpha;
            options.m = m;
            options.smoothing = smoothing_from(smoothing);
            options.smoothing_m = smoothing_m;

            const lavr::RunResult run = lavr::run_single(spec, lavr::parse_method(method), options);
            lavr::write_run(out_dir, run, !no_plot);
            std::printf("method=%s m=%d alpha=%.6g x_star=%.6g l2_error=%.6g residual=%.3g time=%.3fs\n",
                        method.c_str(), run.m, run.alpha, run.x_star, run.l2_error,
                        run.solve.residual_sigma, run.wall_time);
        } else if (*rate) {
            lavr::ProblemSpec spec = problem_from(rate_problem);
            spec.fine_n = rate_fine_n;
            spec.sigma = rate_sigma;
            spec.noise.seed = rate_seed;
            std::vector<double> deltas;
            for (const auto& d : split(deltas_arg))
                deltas.push_back(std::stod(d));
            std::vector<lavr::Method> methods;
            for (const auto& name : split(methods_arg))
                methods.push_back(lavr::parse_method(name));
            lavr::RunOptions options;
            options.alpha_rule = alpha_rule_from(rate_rule, rate_c);
            options.smoothing = smoothing_from(rate_smoothing);

            const auto result = lavr::rate_study(spec, deltas, methods, repeats, options, workers);
            lavr::write_rate(rate_out, result);
            lavr::write_rate_csv(std::cout, result);
            for (const auto& [mth, slope] : result.fitted_slopes)
                std::printf("slope %-9s %.4f\n", lavr::to_string(mth).c_str(), slope);
            if (!result.failures.empty())
                return kExitSolver;
        } else if (*verify) {
            const auto suites = suite.empty() ? lavr::verify_suite_names() : std::vector{suite};
            bool all = true;
            for (const auto& s : suites) {
                for (const auto& check : lavr::verify_suite(s)) {
                    std::printf("[%s] %s/%s: %.6g %s %.6g\n", check.passed ? "PASS" : "FAIL",
                                s.c_str(), check.name.c_str(), check.value,
                                check.upper ? "<=" : ">=", check.bound);
                    all = all && check.passed;
                }
            }
            return all ? 0 : kExitSolver;
        }
    } catch (const lavr::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
