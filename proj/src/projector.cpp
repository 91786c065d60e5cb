#include "lavrentiev/projector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lavrentiev/random.hpp"

namespace lavr {

namespace detail {

namespace {
constexpr double kSeriesThreshold = 0.1;
constexpr int kSeriesTerms = 14;

// L^{n+1} Σ_k (−z)^k / (k! (n+k+1)), z = σL
double moment_series(double sigma, double L, int n)
{
    const double z = sigma * L;
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
        sum += term / (n + k + 1);
        term *= -z / (k + 1);
    }
    return std::pow(L, n + 1) * sum;
}
}  // namespace

double exp_moment0(double sigma, double L)
{
    if (sigma * L < kSeriesThreshold)
        return moment_series(sigma, L, 0);
    return -std::expm1(-sigma * L) / sigma;
}

double exp_moment1(double sigma, double L)
{
    const double z = sigma * L;
    if (z < kSeriesThreshold)
        return moment_series(sigma, L, 1);
    return (1.0 - std::exp(-z) * (1.0 + z)) / (sigma * sigma);
}

}  // namespace detail

PcCoeffs::PcCoeffs(double sigma, std::vector<double> coeffs)
    : sigma_(sigma), coeffs_(std::move(coeffs))
{
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::invalid_argument("PcCoeffs: sigma must be finite and >= 0");
    if (coeffs_.empty())
        throw std::invalid_argument("PcCoeffs: need at least one cell");
    for (double c : coeffs_)
        if (!std::isfinite(c))
            throw std::invalid_argument("PcCoeffs: non-finite coefficient");
}

int PcCoeffs::cell_of(double t) const
{
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("PcCoeffs: t outside [0,1]");
    return std::min(static_cast<int>(t * m()), m() - 1);
}

double PcCoeffs::eval(double t) const
{
    return coeffs_[cell_of(t)] * std::exp(sigma_ * t);
}

PcCoeffs pc_project(const GridFunction& x, int m, double sigma)
{
    if (m < 2)
        throw std::invalid_argument("pc_project: m must be >= 2, got " + std::to_string(m));
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::invalid_argument("pc_project: sigma must be >= 0");

    const UniformGrid& g = x.grid();
    const std::int64_t n = g.n_cells();
    const double h = g.spacing();
    std::vector<double> acc(m, 0.0);

    // ∫_a^b (x_a + s (t − a)) e^{−σt} dt
    auto piece = [sigma](double a, double b, double xa, double s) {
        const double L = b - a;
        return std::exp(-sigma * a) *
               (xa * detail::exp_moment0(sigma, L) + s * detail::exp_moment1(sigma, L));
    };

    for (std::int64_t k = 0; k < n; ++k) {
        const double slope = (x[k + 1] - x[k]) / h;
        const double tk = g.node(k);
        std::int64_t cell = (k * m) / n;
        double a = tk;
        // Split [t_k, t_{k+1}] at interior cell boundaries (c+1)/m.
        while (cell + 1 < m && (cell + 1) * n < (k + 1) * m) {
            const double b = static_cast<double>(cell + 1) / m;
            acc[cell] += piece(a, b, x[k] + slope * (a - tk), slope);
            a = b;
            ++cell;
        }
        acc[cell] += piece(a, g.node(k + 1), x[k] + slope * (a - tk), slope);
    }
    for (double& c : acc)
        c *= m;
    return PcCoeffs(sigma, std::move(acc));
}

GridFunction pc_eval(const PcCoeffs& p, const UniformGrid& grid)
{
    const std::int64_t n = grid.n_cells();
    const std::int64_t m = p.m();
    std::vector<double> v(grid.size());
    for (std::int64_t k = 0; k <= n; ++k) {
        const auto cell = std::min((k * m) / n, m - 1);
        const double t = grid.node(k);
        v[k] = p.sigma() == 0.0 ? p[cell] : p[cell] * std::exp(p.sigma() * t);
    }
    return GridFunction(grid, std::move(v));
}

namespace {
// ∫_l^r e^{λt} dt
double exp_integral(double lambda, double l, double r)
{
    if (lambda == 0.0)
        return r - l;
    return std::exp(lambda * l) * std::expm1(lambda * (r - l)) / lambda;
}
}  // namespace

double pc_distance(const PcCoeffs& p, const PcCoeffs& q, Weight w)
{
    if (p.m() != q.m())
        throw std::invalid_argument("pc_distance: cell counts differ");
    const int m = p.m();
    const double s = w.sigma();
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        const double l = static_cast<double>(i) / m;
        const double r = static_cast<double>(i + 1) / m;
        const double a = p[i], b = q[i];
        sum += a * a * exp_integral(2.0 * (p.sigma() - s), l, r) -
               2.0 * a * b * exp_integral(p.sigma() + q.sigma() - 2.0 * s, l, r) +
               b * b * exp_integral(2.0 * (q.sigma() - s), l, r);
    }
    return std::sqrt(std::max(sum, 0.0));
}

double pc_norm(const PcCoeffs& p, Weight w)
{
    return pc_distance(p, PcCoeffs(0.0, std::vector<double>(p.m(), 0.0)), w);
}

double projector_gap(int m, double sigma, int trials, std::uint64_t seed, const UniformGrid& grid)
{
    if (m < sigma)
        throw std::invalid_argument("projector_gap: requires m >= sigma");
    if (trials < 1)
        throw std::invalid_argument("projector_gap: trials must be >= 1");
    if (sigma == 0.0)
        return 0.0;
    const Weight w(sigma);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const GridFunction x = random_fourier(grid, derive_seed(seed, trial));
        const double gap = pc_distance(pc_project(x, m, 0.0), pc_project(x, m, sigma), w);
        worst = std::max(worst, gap / weighted_norm(x, w));
    }
    return worst;
}

double unweighted_projector_norm(int m, double sigma, int trials, std::uint64_t seed,
                                 const UniformGrid& grid)
{
    if (trials < 1)
        throw std::invalid_argument("unweighted_projector_norm: trials must be >= 1");
    const Weight w(sigma);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const GridFunction x = random_fourier(grid, derive_seed(seed, trial));
        worst = std::max(worst, pc_norm(pc_project(x, m, 0.0), w) / weighted_norm(x, w));
    }
    return worst;
}

}  // namespace lavr
