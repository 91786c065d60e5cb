#include "lavrentiev/solver.hpp"

#include <chrono>
#include <cmath>

#include "lavrentiev/autoconv.hpp"

namespace lavr {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_nonneg(const GridFunction& y, const char* who)
{
    if (y.min() < 0.0)
        throw std::invalid_argument(std::string(who) + ": data must be nonnegative (clip first)");
}

void require_constant(const GridFunction& x, const char* who)
{
    if (x.max() - x.min() > 1e-12 * (1.0 + std::abs(x.max())))
        throw std::invalid_argument(std::string(who) + ": reference element must be constant");
}

// Σ_{a=0}^{n} u[a] u[n−a]
double cauchy_term(std::span<const double> u, std::size_t n)
{
    double s = 0.0;
    for (std::size_t a = 0; a <= n; ++a)
        s += u[a] * u[n - a];
    return s;
}

double euclid(const Eigen::VectorXd& v) { return v.norm(); }

}  // namespace

void SolveParams::validate() const
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("SolveParams: alpha must be > 0");
    if (m < 2)
        throw std::invalid_argument("SolveParams: m must be >= 2");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("SolveParams: sigma must be >= 0");
    if (!(newton_tol > 0.0))
        throw std::invalid_argument("SolveParams: newton_tol must be > 0");
    if (newton_max_iter < 1)
        throw std::invalid_argument("SolveParams: newton_max_iter must be >= 1");
}

PcCoeffs solve_pc_coeffs(const PcCoeffs& y_proj, const PcCoeffs& x_star_proj, double alpha)
{
    const int m = y_proj.m();
    if (x_star_proj.m() != m)
        throw std::invalid_argument("solve_pc: projection levels differ");
    const auto y = y_proj.coeffs();
    const auto xs = x_star_proj.coeffs();
    const double ma = m * alpha;

    std::vector<double> x(m, 0.0);
    // (x¹)² + 2mα x¹ − 2m c = 0, nonnegative root in cancellation-free form
    const double c = y[0] + alpha * xs[0];
    const double disc = ma * ma + 2.0 * m * c;
    if (disc < 0.0)
        throw SolverError("solve_pc: negative discriminant for the first coefficient");
    const double root = std::sqrt(disc);
    x[0] = ma + root > 0.0 ? 2.0 * m * c / (ma + root) : 0.0;

    const double denom = ma + x[0];
    if (denom < 1e-14)
        throw SolverError("solve_pc: m*alpha + x^1 vanishes (degenerate alpha and data)");
    const double scale = m / denom;

    for (int i = 1; i < m; ++i) {
        // Σ_{a=0}^{i−1} x[a] x[i−1−a] + Σ_{a=1}^{i−1} x[a] x[i−a]
        double known = cauchy_term(x, i - 1);
        for (int a = 1; a < i; ++a)
            known += x[a] * x[i - a];
        x[i] = scale * (y[i] + alpha * xs[i] - known / (2.0 * m));
    }
    return PcCoeffs(y_proj.sigma(), std::move(x));
}

std::vector<double> pc_system_residual(const PcCoeffs& x, const PcCoeffs& y_proj,
                                       const PcCoeffs& x_star_proj, double alpha)
{
    const int m = x.m();
    if (y_proj.m() != m || x_star_proj.m() != m)
        throw std::invalid_argument("pc_system_residual: dimension mismatch");
    const auto c = x.coeffs();
    std::vector<double> r(m);
    for (int i = 0; i < m; ++i) {
        double conv = cauchy_term(c, i);
        if (i > 0)
            conv += cauchy_term(c, i - 1);
        r[i] = alpha * (x_star_proj[i] - c[i]) + y_proj[i] - conv / (2.0 * m);
    }
    return r;
}

std::vector<double> pc_system_residual(const PcCoeffs& x, const GridFunction& y_delta,
                                       const GridFunction& x_star, const SolveParams& p)
{
    p.validate();
    if (x.m() != p.m)
        throw std::invalid_argument("pc_system_residual: dimension mismatch");
    return pc_system_residual(x, pc_project(y_delta, p.m, p.sigma),
                              pc_project(x_star, p.m, p.sigma), p.alpha);
}

double residual_norm(const PcCoeffs& x, const GridFunction& y_delta, const GridFunction& x_star,
                     const SolveParams& p)
{
    if (x.sigma() != p.sigma)
        throw std::invalid_argument("residual_norm: coefficients use a different sigma");
    const auto r = pc_system_residual(x, y_delta, x_star, p);
    // ‖Σ r^i f_i‖σ² = Σ (r^i)² / m
    double sum = 0.0;
    for (double v : r)
        sum += v * v;
    return std::sqrt(sum / p.m);
}

double residual_norm(const GridFunction& x, const GridFunction& y_delta,
                     const GridFunction& x_star, const SolveParams& p)
{
    require_same_grid(x, y_delta);
    require_same_grid(x, x_star);
    p.validate();
    return residual_norm(pc_project(x, p.m, p.sigma), y_delta, x_star, p);
}

SolveResult solve_pc(const GridFunction& y_delta, const GridFunction& x_star, const SolveParams& p)
{
    const auto start = Clock::now();
    p.validate();
    require_same_grid(y_delta, x_star);
    require_nonneg(y_delta, "solve_pc");
    require_constant(x_star, "solve_pc");

    const PcCoeffs y_proj = pc_project(y_delta, p.m, p.sigma);
    const PcCoeffs xs_proj = pc_project(x_star, p.m, p.sigma);
    PcCoeffs x = solve_pc_coeffs(y_proj, xs_proj, p.alpha);

    const auto r = pc_system_residual(x, y_proj, xs_proj, p.alpha);
    double sum = 0.0;
    for (double v : r)
        sum += v * v;

    SolveResult out{pc_eval(x, y_delta.grid()), std::move(x), std::nullopt,
                    std::sqrt(sum / p.m), 1, 0.0};
    out.wall_time = seconds_since(start);
    return out;
}

int smoothing_intervals(double delta)
{
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("smoothing_intervals: delta must lie in (0, 1]");
    return static_cast<int>(std::ceil(std::pow(delta, -0.25) * (1.0 - 1e-12)));
}

SplineFunction post_smooth(const PcCoeffs& pc, int n_intervals, const UniformGrid& grid)
{
    return spline_project(pc_eval(pc, grid), n_intervals);
}

SplineFunction post_smooth(const PcCoeffs& pc, double delta, const UniformGrid& grid)
{
    return post_smooth(pc, smoothing_intervals(delta), grid);
}

SolveResult solve_spline(const GridFunction& y_delta, const GridFunction& x_star,
                         const SolveParams& p)
{
    const auto start = Clock::now();
    p.validate();
    if (p.m > kMaxSplineIntervals)
        throw std::invalid_argument("solve_spline: m = " + std::to_string(p.m) +
                                    " exceeds the supported maximum of " +
                                    std::to_string(kMaxSplineIntervals));
    require_same_grid(y_delta, x_star);
    require_nonneg(y_delta, "solve_spline");
    require_constant(x_star, "solve_spline");

    const UniformGrid& grid = y_delta.grid();
    const SplineBasisTable basis(grid, p.m);
    const int dim = basis.dim();
    const Eigen::MatrixXd& gram = basis.gram();
    const Eigen::VectorXd rhs = basis.moments(y_delta) + p.alpha * basis.moments(x_star);

    std::vector<std::vector<double>> samples(dim);
    for (int i = 0; i < dim; ++i)
        samples[i] = basis.sample(i);

    // r(c) = ⟨α(x_* − x_c) + y^δ − F(x_c), B_j⟩₀
    auto residual = [&](const Eigen::VectorXd& c) {
        const GridFunction xc = basis.combine(std::span<const double>(c.data(), c.size()));
        return Eigen::VectorXd(rhs - p.alpha * gram * c - basis.moments(forward(xc)));
    };

    Eigen::VectorXd c = Eigen::VectorXd::Constant(dim, x_star[0]);
    Eigen::VectorXd r = residual(c);
    double rnorm = euclid(r);
    const double target = p.newton_tol * (1.0 + weighted_norm(y_delta, Weight(0.0)));

    int iter = 0;
    while (rnorm > target) {
        if (iter == p.newton_max_iter)
            throw SolverError("solve_spline: Newton did not converge in " +
                                  std::to_string(p.newton_max_iter) + " iterations (residual " +
                                  std::to_string(rnorm) + ")",
                              rnorm);
        ++iter;

        // J_{ji} = ⟨−α B_i − F'(x_c) B_i, B_j⟩₀
        const GridFunction xc = basis.combine(std::span<const double>(c.data(), c.size()));
        Eigen::MatrixXd jac = -p.alpha * gram;
        for (int i = 0; i < dim; ++i) {
            const auto [lo, hi] = basis.support(i);
            auto d = convolve(xc.values(), samples[i], grid.spacing(), lo, hi);
            for (double& v : d)
                v *= 2.0;
            jac.col(i) -= basis.moments(GridFunction(grid, std::move(d)));
        }
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
        if (!(lu.rcond() > 1e-14))
            throw SolverError("Newton Jacobian singular", rnorm);
        const Eigen::VectorXd step = lu.solve(-r);

        double lambda = 1.0;
        bool accepted = false;
        for (int halving = 0; halving <= 20; ++halving, lambda *= 0.5) {
            Eigen::VectorXd trial = c + lambda * step;
            Eigen::VectorXd r_trial = residual(trial);
            const double n_trial = euclid(r_trial);
            if (n_trial < rnorm) {
                c = std::move(trial);
                r = std::move(r_trial);
                rnorm = n_trial;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw SolverError("solve_spline: damped Newton step failed to reduce the residual (" +
                                  std::to_string(rnorm) + ")",
                              rnorm);
    }

    SplineFunction spline(p.m, std::vector<double>(c.data(), c.data() + c.size()));
    SolveResult out{spline_eval(spline, grid), std::nullopt, std::move(spline), rnorm, iter, 0.0};
    out.wall_time = seconds_since(start);
    return out;
}

}  // namespace lavr
