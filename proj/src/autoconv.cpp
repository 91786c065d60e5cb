#include "lavrentiev/autoconv.hpp"

#include <algorithm>
#include <stdexcept>

namespace lavr {

std::vector<double> convolve(std::span<const double> u, std::span<const double> v, double h,
                             std::size_t v_lo, std::size_t v_hi)
{
    if (u.size() != v.size())
        throw std::invalid_argument("incompatible grids");
    const std::size_t n = u.size();
    v_hi = std::min(v_hi, n - 1);
    std::vector<double> out(n, 0.0);
    // out[k] = h (½ u_k v_0 + Σ_{j=1}^{k-1} u_{k-j} v_j + ½ u_0 v_k)
    for (std::size_t k = 1; k < n; ++k) {
        double sum = 0.0;
        if (v_lo == 0)
            sum += 0.5 * u[k] * v[0];
        if (k >= v_lo && k <= v_hi)
            sum += 0.5 * u[0] * v[k];
        const std::size_t j0 = std::max<std::size_t>(1, v_lo);
        const std::size_t j1 = std::min(k - 1, v_hi);
        for (std::size_t j = j0; j <= j1; ++j)
            sum += u[k - j] * v[j];
        out[k] = h * sum;
    }
    return out;
}

GridFunction forward(const GridFunction& x)
{
    const UniformGrid& g = x.grid();
    return GridFunction(g, convolve(x.values(), x.values(), g.spacing(), 0, g.size() - 1));
}

GridFunction frechet_apply(const GridFunction& u, const GridFunction& v)
{
    require_same_grid(u, v);
    const UniformGrid& g = u.grid();
    auto out = convolve(u.values(), v.values(), g.spacing(), 0, g.size() - 1);
    for (double& o : out)
        o *= 2.0;
    return GridFunction(g, std::move(out));
}

}  // namespace lavr
