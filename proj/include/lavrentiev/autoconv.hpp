#pragma once

#include "lavrentiev/grid.hpp"

namespace lavr {

/// Autoconvolution [F(x)](s) = ∫₀^s x(s−t) x(t) dt by the trapezoid rule at
/// every node. The value at s = 0 is exactly 0. O(N²).
GridFunction forward(const GridFunction& x);

/// Fréchet derivative [F'(u) v](s) = 2 ∫₀^s u(s−t) v(t) dt.
GridFunction frechet_apply(const GridFunction& u, const GridFunction& v);

/// Trapezoid convolution ∫₀^s u(s−t) v(t) dt at every node, restricted to
/// the index range [v_lo, v_hi] where v may be nonzero. Outside of that
/// range v is taken as zero. Cost O(N·(v_hi − v_lo)).
std::vector<double> convolve(std::span<const double> u, std::span<const double> v, double h,
                             std::size_t v_lo, std::size_t v_hi);

}  // namespace lavr
