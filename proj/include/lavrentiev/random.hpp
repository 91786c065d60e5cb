#pragma once

#include <cstdint>

#include "lavrentiev/grid.hpp"

namespace lavr {

/// Partial Fourier sum a₀ + Σ_{k=1}^{modes} (a_k cos 2πkt + b_k sin 2πkt) with
/// standard-normal coefficients drawn from `seed`.
GridFunction random_fourier(const UniformGrid& grid, std::uint64_t seed, int modes = 20);

/// Stream seed for trial `index` of a study with base seed `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace lavr
