#include "lavrentiev/random.hpp"

#include <numbers>
#include <random>
#include <vector>

namespace lavr {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

GridFunction random_fourier(const UniformGrid& grid, std::uint64_t seed, int modes)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const double a0 = normal(rng);
    std::vector<double> a(modes), b(modes);
    for (int k = 0; k < modes; ++k) {
        a[k] = normal(rng);
        b[k] = normal(rng);
    }
    std::vector<double> v(grid.size(), a0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double t = grid.node(j);
        for (int k = 0; k < modes; ++k) {
            const double w = 2.0 * std::numbers::pi * (k + 1) * t;
            v[j] += a[k] * std::cos(w) + b[k] * std::sin(w);
        }
    }
    return GridFunction(grid, std::move(v));
}

}  // namespace lavr
