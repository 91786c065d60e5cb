#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lavrentiev/grid.hpp"
#include "lavrentiev/initval.hpp"
#include "lavrentiev/solver.hpp"

namespace lavr {

enum class Solution { F1, F2, Custom };

/// x₀(t) = t² − 2t + 2
double f1(double t);
/// x₀(t) = 2 + cos(4πt)
double f2(double t);

struct ProblemSpec {
    Solution solution = Solution::F1;
    Samples custom;  // used when solution == Custom
    int fine_n = UniformGrid::kDefaultCells;
    NoiseModel noise;
    double sigma = 0.0;

    void validate() const;
    UniformGrid grid() const { return UniformGrid(fine_n); }
};

struct ProblemData {
    GridFunction x0;
    GridFunction y0;
    GridFunction y_delta;
};

/// Samples x₀, computes y₀ = F(x₀) and y^δ = max(y₀ + δξ, 0) with ξ uniform
/// on [−1,1] from the seed, rescaled to ‖ξ‖∞ = 1 (or ‖ξ‖₂ = 1 for L²-noise).
ProblemData generate_data(const ProblemSpec& spec);

enum class AlphaRuleKind { SqrtDelta, TwoFifths };
struct AlphaRule {
    AlphaRuleKind kind = AlphaRuleKind::SqrtDelta;
    double c = 1.0;
};

/// c√δ or c δ^{2/5}.
double choose_alpha(double delta, AlphaRule rule);

enum class Space { PiecewiseConstant, CubicSpline };

/// ⌈1/δ⌉ for piecewise constants, ⌈(20/δ)^{1/4}⌉ for cubic splines.
int choose_m(double delta, Space space);

enum class Method { Pc, PcSmoothed, Cubic };

std::string to_string(Method method);
/// "pc", "pc-smooth" or "cubic"; anything else throws std::invalid_argument.
Method parse_method(const std::string& name);

enum class SmoothingRule {
    MinimalRate,  // ⌈δ^{−1/4}⌉ intervals
    CubicLevel,   // same level as the cubic-spline ansatz, ⌈(20/δ)^{1/4}⌉
};

struct RunOptions {
    AlphaRule alpha_rule;
    std::optional<double> alpha;    // overrides alpha_rule
    std::optional<int> m;           // overrides choose_m
    SmoothingRule smoothing = SmoothingRule::CubicLevel;
    std::optional<int> smoothing_m; // overrides the smoothing rule
};

struct RunResult {
    Method method;
    double delta;
    double sigma;
    int m;
    int smoothing_m;  // 0 unless method == PcSmoothed
    double alpha;
    double x_star;
    GridFunction x0;
    SolveResult solve;
    double l2_error;
    double wall_time;
};

/// Full pipeline: data, reference element, parameter choice, solve, error.
RunResult run_single(const ProblemSpec& spec, Method method, const RunOptions& options = {});

struct RateRow {
    double delta;
    Method method;
    int m;
    double alpha;
    double l2_error;   // mean over successful repeats
    double residual;   // mean over successful repeats
    double wall_time;  // mean over successful repeats
    int samples;
};

struct RateFailure {
    double delta;
    Method method;
    std::uint64_t seed;
    std::string message;
};

struct RateStudyResult {
    std::vector<RateRow> rows;
    std::map<Method, double> fitted_slopes;
    std::vector<RateFailure> failures;
};

/// Least-squares slope of −ln(error) against −ln(δ). Needs ≥ 2 points.
double fit_slope(std::span<const double> deltas, std::span<const double> errors);

/// Runs every (δ, method, seed) cell, seeds spec.noise.seed + 0..repeats−1,
/// on a pool of `workers` threads (0 = hardware concurrency). Results are
/// ordered by input regardless of completion order.
RateStudyResult rate_study(const ProblemSpec& spec_template, std::span<const double> deltas,
                           std::span<const Method> methods, int repeats,
                           const RunOptions& options = {}, unsigned workers = 0);

}  // namespace lavr
