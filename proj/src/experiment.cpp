#include "lavrentiev/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "lavrentiev/autoconv.hpp"

namespace lavr {

double f1(double t) { return t * t - 2.0 * t + 2.0; }
double f2(double t) { return 2.0 + std::cos(4.0 * std::numbers::pi * t); }

void ProblemSpec::validate() const
{
    if (fine_n < 100)
        throw std::invalid_argument("ProblemSpec: fine_n must be >= 100");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("ProblemSpec: sigma must be >= 0");
    if (solution == Solution::Custom && custom.t.size() < 2)
        throw std::invalid_argument("ProblemSpec: custom solution needs samples");
    noise.validate();
}

ProblemData generate_data(const ProblemSpec& spec)
{
    spec.validate();
    const UniformGrid grid = spec.grid();
    GridFunction x0 = [&] {
        switch (spec.solution) {
        case Solution::F1:
            return GridFunction::sample(grid, f1);
        case Solution::F2:
            return GridFunction::sample(grid, f2);
        case Solution::Custom:
            break;
        }
        return resample_linear(spec.custom.t, spec.custom.value, grid);
    }();
    GridFunction y0 = forward(x0);

    std::mt19937_64 rng(spec.noise.seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<double> xi(grid.size());
    for (double& v : xi)
        v = uniform(rng);
    GridFunction noise(grid, std::move(xi));
    const double size = spec.noise.kind == NoiseKind::SupNorm ? sup_norm(noise)
                                                              : weighted_norm(noise, Weight(0.0));
    noise *= spec.noise.delta / size;

    GridFunction y_delta = clip_nonneg(y0 + noise);
    return {std::move(x0), std::move(y0), std::move(y_delta)};
}

double choose_alpha(double delta, AlphaRule rule)
{
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("choose_alpha: delta must lie in (0, 1]");
    if (!(rule.c > 0.0))
        throw std::invalid_argument("choose_alpha: c must be > 0");
    return rule.kind == AlphaRuleKind::SqrtDelta ? rule.c * std::sqrt(delta)
                                                 : rule.c * std::pow(delta, 0.4);
}

int choose_m(double delta, Space space)
{
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("choose_m: delta must lie in (0, 1]");
    // relative slack so that e.g. 1/0.0025 does not round up to 401
    constexpr double kSlack = 1.0 - 1e-12;
    const double level =
        space == Space::PiecewiseConstant ? 1.0 / delta : std::pow(20.0 / delta, 0.25);
    return std::max(2, static_cast<int>(std::ceil(level * kSlack)));
}

std::string to_string(Method method)
{
    switch (method) {
    case Method::Pc:
        return "pc";
    case Method::PcSmoothed:
        return "pc-smooth";
    case Method::Cubic:
        return "cubic";
    }
    return "?";
}

Method parse_method(const std::string& name)
{
    if (name == "pc")
        return Method::Pc;
    if (name == "pc-smooth")
        return Method::PcSmoothed;
    if (name == "cubic")
        return Method::Cubic;
    throw std::invalid_argument("unknown method '" + name + "' (expected pc, pc-smooth or cubic)");
}

RunResult run_single(const ProblemSpec& spec, Method method, const RunOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    spec.validate();
    const double delta = spec.noise.delta;
    const bool noiseless = delta == 0.0;
    if (noiseless && !(options.alpha && options.m))
        throw std::invalid_argument("noiseless runs need an explicit alpha and m");

    ProblemData data = generate_data(spec);
    const UniformGrid grid = spec.grid();

    // Noiseless data: the estimator of x₀(0) is evaluated at the finest level
    // the grid resolves.
    NoiseModel estimator = spec.noise;
    if (noiseless)
        estimator.delta = 1.0 / spec.fine_n;
    const int m_estimate = choose_m(estimator.delta, Space::PiecewiseConstant);
    const GridFunction x_star = reference_element(data.y_delta, estimator, m_estimate, grid);

    SolveParams p;
    p.sigma = spec.sigma;
    p.alpha = options.alpha ? *options.alpha : choose_alpha(delta, options.alpha_rule);
    const Space space = method == Method::Cubic ? Space::CubicSpline : Space::PiecewiseConstant;
    p.m = options.m ? *options.m : choose_m(delta, space);

    RunResult out{method, delta, spec.sigma, p.m, 0, p.alpha, x_star[0], data.x0,
                  SolveResult{data.x0, std::nullopt, std::nullopt, 0.0, 0, 0.0}, 0.0, 0.0};

    if (method == Method::Cubic) {
        out.solve = solve_spline(data.y_delta, x_star, p);
    } else {
        out.solve = solve_pc(data.y_delta, x_star, p);
        if (method == Method::PcSmoothed) {
            if (options.smoothing_m) {
                out.smoothing_m = *options.smoothing_m;
            } else {
                const double d = noiseless ? 1.0 / p.m : delta;
                out.smoothing_m = options.smoothing == SmoothingRule::MinimalRate
                                      ? smoothing_intervals(d)
                                      : choose_m(d, Space::CubicSpline);
            }
            SplineFunction smooth = post_smooth(*out.solve.pc, out.smoothing_m, grid);
            out.solve.reconstruction = spline_eval(smooth, grid);
            out.solve.spline = std::move(smooth);
        }
    }
    out.l2_error = weighted_norm(out.solve.reconstruction - data.x0, Weight(0.0));
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

double fit_slope(std::span<const double> deltas, std::span<const double> errors)
{
    if (deltas.size() != errors.size())
        throw std::invalid_argument("fit_slope: size mismatch");
    if (deltas.size() < 2)
        throw std::invalid_argument("need ≥ 2 deltas");
    const std::size_t n = deltas.size();
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += -std::log(deltas[i]);
        sy += -std::log(errors[i]);
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = -std::log(deltas[i]) - mx;
        sxy += dx * (-std::log(errors[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_slope: deltas must be distinct");
    return sxy / sxx;
}

RateStudyResult rate_study(const ProblemSpec& spec_template, std::span<const double> deltas,
                           std::span<const Method> methods, int repeats,
                           const RunOptions& options, unsigned workers)
{
    if (deltas.size() < 2)
        throw std::invalid_argument("need ≥ 2 deltas");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0 && deltas[i] <= 1.0))
            throw std::invalid_argument("rate_study: every delta must lie in (0, 1]");
        if (i > 0 && !(deltas[i] < deltas[i - 1]))
            throw std::invalid_argument("rate_study: deltas must be strictly decreasing");
    }
    if (repeats < 1)
        throw std::invalid_argument("rate_study: repeats must be >= 1");
    if (methods.empty())
        throw std::invalid_argument("rate_study: no methods given");
    spec_template.validate();

    struct Job {
        std::size_t delta_index;
        std::size_t method_index;
        int repeat;
    };
    struct Outcome {
        std::optional<RunResult> run;
        std::string error;
    };
    std::vector<Job> jobs;
    for (std::size_t d = 0; d < deltas.size(); ++d)
        for (std::size_t k = 0; k < methods.size(); ++k)
            for (int r = 0; r < repeats; ++r)
                jobs.push_back({d, k, r});
    std::vector<Outcome> outcomes(jobs.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            ProblemSpec spec = spec_template;
            spec.noise.delta = deltas[jobs[j].delta_index];
            spec.noise.seed = spec_template.noise.seed + static_cast<std::uint64_t>(jobs[j].repeat);
            try {
                outcomes[j].run = run_single(spec, methods[jobs[j].method_index], options);
            } catch (const std::exception& e) {
                outcomes[j].error = e.what();
            }
        }
    };
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
    }

    RateStudyResult result;
    std::size_t j = 0;
    std::map<Method, std::pair<std::vector<double>, std::vector<double>>> series;
    for (std::size_t d = 0; d < deltas.size(); ++d) {
        for (std::size_t k = 0; k < methods.size(); ++k) {
            RateRow row{deltas[d], methods[k], 0, 0.0, 0.0, 0.0, 0.0, 0};
            for (int r = 0; r < repeats; ++r, ++j) {
                const Outcome& o = outcomes[j];
                if (!o.run) {
                    const std::uint64_t seed = spec_template.noise.seed + static_cast<std::uint64_t>(r);
                    result.failures.push_back({deltas[d], methods[k], seed, o.error});
                    std::cerr << "warning: " << to_string(methods[k]) << " at delta=" << deltas[d]
                              << " seed=" << seed << " failed: " << o.error << '\n';
                    continue;
                }
                row.m = o.run->m;
                row.alpha = o.run->alpha;
                row.l2_error += o.run->l2_error;
                row.residual += o.run->solve.residual_sigma;
                row.wall_time += o.run->wall_time;
                ++row.samples;
            }
            if (row.samples == 0)
                continue;
            row.l2_error /= row.samples;
            row.residual /= row.samples;
            row.wall_time /= row.samples;
            result.rows.push_back(row);
            series[row.method].first.push_back(row.delta);
            series[row.method].second.push_back(row.l2_error);
        }
    }
    for (const auto& [method, s] : series) {
        if (s.first.size() < 2) {
            std::cerr << "warning: too few successful cells to fit a slope for "
                      << to_string(method) << '\n';
            continue;
        }
        result.fitted_slopes[method] = fit_slope(s.first, s.second);
    }
    return result;
}

}  // namespace lavr
