#pragma once

#include <cstdint>

#include "lavrentiev/grid.hpp"

namespace lavr {

enum class NoiseKind { SupNorm, L2Norm };

/// Noise model y^δ = F(x₀) + δξ with ‖ξ‖∞ = 1 (SupNorm) or ‖ξ‖₂ = 1 (L2Norm).
/// `smoothness_bound` is a bound K ≥ ‖x₀‖_{C¹} used by the L²-noise estimator.
struct NoiseModel {
    NoiseKind kind = NoiseKind::SupNorm;
    double delta = 0.0;
    std::uint64_t seed = 42;
    double smoothness_bound = 2.0;

    void validate() const;
};

GridFunction clip_nonneg(const GridFunction& y);

/// √(v/√δ) with v = [Q_m y^δ](√δ) the unweighted cell average around √δ,
/// or 0 if v < 0. Requires 0 < δ ≤ 1 and m δ ≥ 1.
double estimate_x0_sup(const GridFunction& y_delta, double delta, int m);

struct L2Estimate {
    double value;
    double h;       // averaging window actually used
    bool clamped;   // h was cut back to 1
};

/// Window length ((2/3) K²)^{−2/5} δ^{2/5}, before clamping.
double l2_window(double delta, double smoothness_bound);

/// √((2/h²) ∫₀^h y^δ) over the window h = l2_window(δ, K) ∧ 1, or 0 if the
/// integral is negative.
L2Estimate estimate_x0_l2_detailed(const GridFunction& y_delta, double delta,
                                   double smoothness_bound);
double estimate_x0_l2(const GridFunction& y_delta, double delta, double smoothness_bound);

/// Constant reference element x_* ≡ estimate of x₀(0), on `grid`.
GridFunction reference_element(const GridFunction& y_delta, const NoiseModel& noise, int m,
                               const UniformGrid& grid);

}  // namespace lavr
