#include "lavrentiev/initval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lavrentiev/projector.hpp"

namespace lavr {

void NoiseModel::validate() const
{
    if (!(delta >= 0.0 && delta <= 1.0))
        throw std::invalid_argument("NoiseModel: delta must lie in [0, 1]");
    if (kind == NoiseKind::L2Norm && !(smoothness_bound > 0.0))
        throw std::invalid_argument("NoiseModel: smoothness bound must be > 0");
}

GridFunction clip_nonneg(const GridFunction& y)
{
    std::vector<double> v(y.values().begin(), y.values().end());
    for (double& e : v)
        e = std::max(e, 0.0);
    return GridFunction(y.grid(), std::move(v));
}

double estimate_x0_sup(const GridFunction& y_delta, double delta, int m)
{
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("estimate_x0_sup: delta must lie in (0, 1]");
    if (m * delta < 1.0 - 1e-12)
        throw std::invalid_argument("estimate_x0_sup: requires m * delta >= 1 (m = " +
                                    std::to_string(m) + ")");
    const double root = std::sqrt(delta);
    const PcCoeffs q = pc_project(y_delta, m, 0.0);
    const double v = q.eval(root);
    return v >= 0.0 ? std::sqrt(v / root) : 0.0;
}

double l2_window(double delta, double smoothness_bound)
{
    return std::pow(2.0 / 3.0 * smoothness_bound * smoothness_bound, -0.4) * std::pow(delta, 0.4);
}

L2Estimate estimate_x0_l2_detailed(const GridFunction& y_delta, double delta,
                                   double smoothness_bound)
{
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("estimate_x0_l2: delta must lie in (0, 1]");
    if (!(smoothness_bound > 0.0))
        throw std::invalid_argument("estimate_x0_l2: smoothness bound must be > 0");
    double h = l2_window(delta, smoothness_bound);
    const bool clamped = h > 1.0;
    h = std::min(h, 1.0);
    const double integral = integrate_to(y_delta, h);
    const double value = integral >= 0.0 ? std::sqrt(2.0 / (h * h) * integral) : 0.0;
    return {value, h, clamped};
}

double estimate_x0_l2(const GridFunction& y_delta, double delta, double smoothness_bound)
{
    return estimate_x0_l2_detailed(y_delta, delta, smoothness_bound).value;
}

GridFunction reference_element(const GridFunction& y_delta, const NoiseModel& noise, int m,
                               const UniformGrid& grid)
{
    noise.validate();
    const double c = noise.kind == NoiseKind::SupNorm
                         ? estimate_x0_sup(y_delta, noise.delta, m)
                         : estimate_x0_l2(y_delta, noise.delta, noise.smoothness_bound);
    return GridFunction::constant(grid, c);
}

}  // namespace lavr
