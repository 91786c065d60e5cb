#include "lavrentiev/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lavrentiev/autoconv.hpp"
#include "lavrentiev/experiment.hpp"
#include "lavrentiev/projector.hpp"
#include "lavrentiev/random.hpp"
#include "lavrentiev/solver.hpp"

namespace lavr {

namespace {

constexpr std::uint64_t kSeed = 2024;

BoundCheck at_most(std::string name, double value, double bound)
{
    return {std::move(name), value, bound, true, value <= bound};
}

BoundCheck at_least(std::string name, double value, double bound)
{
    return {std::move(name), value, bound, false, value >= bound};
}

std::vector<BoundCheck> operator_suite()
{
    const UniformGrid grid(1000);
    std::vector<BoundCheck> out;
    for (double sigma : {0.0, 1.0}) {
        const Weight w(sigma);
        double worst_f = -1e300, worst_d = -1e300;
        for (int trial = 0; trial < 1000; ++trial) {
            const GridFunction x = random_fourier(grid, derive_seed(kSeed, 2 * trial));
            const GridFunction v = random_fourier(grid, derive_seed(kSeed, 2 * trial + 1));
            const double nx = weighted_norm(x, w);
            worst_f = std::max(worst_f, weighted_norm(forward(x), w) - nx * nx);
            worst_d = std::max(worst_d, weighted_norm(frechet_apply(x, v), w) -
                                            2.0 * nx * weighted_norm(v, w));
        }
        const std::string tag = "sigma=" + std::to_string(static_cast<int>(sigma));
        out.push_back(at_most("|F(x)| - |x|^2, " + tag, worst_f, 1e-8));
        out.push_back(at_most("|F'(u)v| - 2|u||v|, " + tag, worst_d, 1e-8));
    }

    double worst_taylor = 0.0, worst_neg = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const GridFunction x = random_fourier(grid, derive_seed(kSeed + 1, 2 * trial));
        const GridFunction v = random_fourier(grid, derive_seed(kSeed + 1, 2 * trial + 1));
        for (double eps : {1e-3, 1e-4}) {
            const GridFunction rem =
                forward(x + eps * v) - forward(x) - eps * frechet_apply(x, v) - eps * eps * forward(v);
            worst_taylor = std::max(worst_taylor, sup_norm(rem));
        }
        std::vector<double> abs_x(x.values().begin(), x.values().end());
        for (double& a : abs_x)
            a = std::abs(a);
        worst_neg = std::min(worst_neg, forward(GridFunction(grid, abs_x)).min());
    }
    out.push_back(at_most("second-order remainder equals eps^2 F(v)", worst_taylor, 1e-10));
    out.push_back(at_least("F(x) >= 0 for x >= 0", worst_neg, 0.0));
    return out;
}

std::vector<BoundCheck> projector_suite()
{
    std::vector<BoundCheck> out;
    for (int m : {10, 100}) {
        out.push_back(at_most("gap |Q_m - Q_m^sigma|, sigma=1, m=" + std::to_string(m),
                              projector_gap(m, 1.0, 200, kSeed), 2.0 / m + 1e-6));
        out.push_back(at_most("|Q_m| in sigma-norm, sigma=1, m=" + std::to_string(m),
                              unweighted_projector_norm(m, 1.0, 200, kSeed), 1.0 + 2.0 / m));
    }

    const UniformGrid grid;
    const GridFunction x = GridFunction::sample(grid, f2);
    for (double sigma : {0.0, 1.0}) {
        std::vector<double> inv_m, err;
        for (int m : {10, 20, 40, 80}) {
            const GridFunction q = pc_eval(pc_project(x, m, sigma), grid);
            inv_m.push_back(1.0 / m);
            err.push_back(weighted_norm(x - q, Weight(sigma)));
        }
        out.push_back(at_least("pc approximation order, sigma=" + std::to_string(static_cast<int>(sigma)),
                               fit_slope(inv_m, err), 0.9));
    }

    double worst = -1e300;
    for (int trial = 0; trial < 50; ++trial) {
        const GridFunction y = random_fourier(grid, derive_seed(kSeed + 2, trial));
        for (double sigma : {0.0, 1.0, 3.0})
            worst = std::max(worst, pc_norm(pc_project(y, 25, sigma), Weight(sigma)) -
                                        weighted_norm(y, Weight(sigma)));
    }
    out.push_back(at_most("|Q_m^sigma x| - |x|", worst, 1e-8));
    return out;
}

std::vector<BoundCheck> initval_suite()
{
    std::vector<BoundCheck> out;
    const std::vector<double> deltas{0.04, 0.01, 0.0025, 0.001};
    double worst_ratio = 0.0;
    std::vector<double> l2_err;
    for (double delta : deltas) {
        double l2_sum = 0.0;
        for (std::uint64_t s = 0; s < 5; ++s) {
            ProblemSpec spec;
            spec.noise.delta = delta;
            spec.noise.seed = kSeed + s;
            const auto data = generate_data(spec);
            const double est = estimate_x0_sup(data.y_delta, delta,
                                               choose_m(delta, Space::PiecewiseConstant));
            worst_ratio = std::max(worst_ratio, std::abs(est - 2.0) / std::sqrt(delta));

            spec.noise.kind = NoiseKind::L2Norm;
            const auto l2_data = generate_data(spec);
            l2_sum += std::abs(estimate_x0_l2(l2_data.y_delta, delta, 2.0) - 2.0);
        }
        l2_err.push_back(l2_sum / 5.0);
    }
    out.push_back(at_most("sup-noise |x*-x0(0)| / sqrt(delta)", worst_ratio, 4.25));
    out.push_back(at_least("l2-noise estimator order in delta", fit_slope(deltas, l2_err), 0.35));
    return out;
}

std::vector<BoundCheck> solver_suite()
{
    std::vector<BoundCheck> out;
    const UniformGrid grid(1000);
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        SolveParams p;
        p.m = 2 + static_cast<int>(unit(rng) * 399);
        p.alpha = std::pow(10.0, -1.5 + 2.5 * unit(rng));
        p.sigma = 3.0 * unit(rng);
        const double shift = 2.0 + 2.0 * unit(rng);
        const GridFunction x0 = GridFunction::sample(grid, [&](double t) { return shift - t; });
        const GridFunction noise = 0.01 * random_fourier(grid, derive_seed(kSeed + 3, trial), 5);
        const GridFunction y = clip_nonneg(forward(x0) + noise);
        const GridFunction xs = GridFunction::constant(grid, shift * (0.8 + 0.4 * unit(rng)));
        const SolveResult res = solve_pc(y, xs, p);
        const PcCoeffs yp = pc_project(y, p.m, p.sigma);
        const auto r = pc_system_residual(*res.pc, y, xs, p);
        for (int i = 0; i < p.m; ++i)
            worst = std::max(worst, std::abs(r[i]) / (1.0 + std::abs(yp[i])));
    }
    out.push_back(at_most("explicit solver scaled residual", worst, 1e-10));

    ProblemSpec spec;
    spec.noise.delta = 0.0;
    RunOptions exact;
    exact.alpha = 1e-4;
    exact.m = 400;
    out.push_back(at_most("noiseless pc error, m=400", run_single(spec, Method::Pc, exact).l2_error, 5e-2));
    exact.m = 10;
    out.push_back(at_most("noiseless cubic error, m=10", run_single(spec, Method::Cubic, exact).l2_error, 5e-2));

    spec.noise.delta = 0.01;
    const auto data = generate_data(spec);
    const GridFunction xs = GridFunction::constant(data.y_delta.grid(), 1.5);
    double prev = 1e300, worst_increase = -1e300;
    for (double alpha : {1e-2, 1.0, 1e2, 1e4}) {
        SolveParams p;
        p.alpha = alpha;
        p.m = 100;
        const double d = weighted_norm(solve_pc(data.y_delta, xs, p).reconstruction - xs, Weight(0.0));
        worst_increase = std::max(worst_increase, d - prev);
        prev = d;
    }
    out.push_back(at_most("distance to x* nonincreasing in alpha", worst_increase, 1e-10));
    return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() { return {"projector", "operator", "initval", "solver"}; }

std::vector<BoundCheck> verify_suite(const std::string& suite)
{
    if (suite == "projector")
        return projector_suite();
    if (suite == "operator")
        return operator_suite();
    if (suite == "initval")
        return initval_suite();
    if (suite == "solver")
        return solver_suite();
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace lavr
