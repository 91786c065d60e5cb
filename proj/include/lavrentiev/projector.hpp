#pragma once

#include <cstdint>
#include <vector>

#include "lavrentiev/grid.hpp"

namespace lavr {

/// Coefficients x^i of Σ_{i=1}^m x^i f_i, where f_i(s) = e^{σs} on the
/// half-open cell [(i−1)/m, i/m) (the last cell also contains s = 1) and 0
/// elsewhere. Index 0 here is cell 1.
class PcCoeffs {
public:
    PcCoeffs(double sigma, std::vector<double> coeffs);

    int m() const { return static_cast<int>(coeffs_.size()); }
    double sigma() const { return sigma_; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](std::size_t i) const { return coeffs_[i]; }

    /// 0-based cell holding t ∈ [0,1].
    int cell_of(double t) const;
    double eval(double t) const;

private:
    double sigma_;
    std::vector<double> coeffs_;
};

/// σ-weighted piecewise-constant projection: x^i = m ∫_{cell i} e^{−σt} x̃(t) dt,
/// with x̃ the piecewise-linear interpolant of the node values, integrated in
/// closed form. Requires m ≥ 2, σ ≥ 0.
PcCoeffs pc_project(const GridFunction& x, int m, double sigma);

GridFunction pc_eval(const PcCoeffs& p, const UniformGrid& grid);

/// Exact ‖Σ p^i f_i^{σ_p} − Σ q^i f_i^{σ_q}‖ in L²σ for equal m (closed-form
/// cell integrals, no sampling of the discontinuous functions).
double pc_distance(const PcCoeffs& p, const PcCoeffs& q, Weight w);
double pc_norm(const PcCoeffs& p, Weight w);

/// Monte-Carlo lower estimate of ‖Q_m − Q_m^σ‖_{σ→σ} over `trials` random
/// smooth functions on `grid`. Requires m ≥ σ.
double projector_gap(int m, double sigma, int trials, std::uint64_t seed = 1,
                     const UniformGrid& grid = UniformGrid{});

/// Monte-Carlo lower estimate of ‖Q_m‖_{σ→σ} for the unweighted projection.
double unweighted_projector_norm(int m, double sigma, int trials, std::uint64_t seed = 1,
                                 const UniformGrid& grid = UniformGrid{});

namespace detail {
// ∫_0^L e^{−σu} du and ∫_0^L u e^{−σu} du, accurate for small σL.
double exp_moment0(double sigma, double L);
double exp_moment1(double sigma, double L);
}  // namespace detail

}  // namespace lavr
