#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lavrentiev/grid.hpp"
#include "lavrentiev/projector.hpp"
#include "lavrentiev/spline.hpp"

namespace lavr {

/// Numerical failure of a reconstruction (as opposed to invalid input).
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double last_residual = 0.0)
        : std::runtime_error(what), last_residual_(last_residual)
    {
    }
    double last_residual() const { return last_residual_; }

private:
    double last_residual_;
};

struct SolveParams {
    double alpha = 1.0;
    int m = 2;
    double sigma = 0.0;
    double newton_tol = 1e-10;
    int newton_max_iter = 50;

    void validate() const;
};

struct SolveResult {
    GridFunction reconstruction;
    std::optional<PcCoeffs> pc;
    std::optional<SplineFunction> spline;
    double residual_sigma = 0.0;
    int iterations = 0;
    double wall_time = 0.0;  // seconds
};

/// Explicit solver for the two-sided piecewise-constant discretization of
///   α(x_* − x) + y^δ = F(x)
/// in the σ-weighted basis. x¹ is the nonnegative root of the first
/// component's quadratic; every later x^i solves a linear equation in the
/// previously computed coefficients. O(m²).
SolveResult solve_pc(const GridFunction& y_delta, const GridFunction& x_star, const SolveParams& p);

/// The recursion on already projected data (y^δ)^i and x_*^i.
PcCoeffs solve_pc_coeffs(const PcCoeffs& y_proj, const PcCoeffs& x_star_proj, double alpha);

/// Componentwise residual
///   α(x_*^i − x^i) + (y^δ)^i − (1/2m)(Σ_{j≤i} x^{i−j+1}x^j + Σ_{j<i} x^{i−j}x^j),
/// which is the coefficient vector of Q(α(x_* − x) + y^δ − F(Qx)) for x in
/// the range of Q = Q_m^σ.
std::vector<double> pc_system_residual(const PcCoeffs& x, const PcCoeffs& y_proj,
                                       const PcCoeffs& x_star_proj, double alpha);
std::vector<double> pc_system_residual(const PcCoeffs& x, const GridFunction& y_delta,
                                       const GridFunction& x_star, const SolveParams& p);

/// ‖Q(α(x_* − x) + y^δ − F(Qx))‖σ with Q = Q_{p.m}^{p.sigma}, computed from
/// the coefficient form of QFQ (exact for x in the range of Q).
double residual_norm(const PcCoeffs& x, const GridFunction& y_delta, const GridFunction& x_star,
                     const SolveParams& p);
/// Same diagnostic for an arbitrary grid function; x is projected first.
double residual_norm(const GridFunction& x, const GridFunction& y_delta,
                     const GridFunction& x_star, const SolveParams& p);

/// Number of knot intervals ⌈δ^{−1/4}⌉ that keeps the √δ rate after smoothing.
int smoothing_intervals(double delta);

/// L²-projection of Σ x^i f_i onto cubic splines with ⌈δ^{−1/4}⌉ intervals.
SplineFunction post_smooth(const PcCoeffs& pc, double delta, const UniformGrid& grid);
/// Same with an explicit number of knot intervals.
SplineFunction post_smooth(const PcCoeffs& pc, int n_intervals, const UniformGrid& grid);

/// Galerkin discretization in the cubic spline space with m intervals, solved
/// by damped Newton from the constant initial guess x_*. Requires m ≤ 64.
SolveResult solve_spline(const GridFunction& y_delta, const GridFunction& x_star,
                         const SolveParams& p);

inline constexpr int kMaxSplineIntervals = 64;

}  // namespace lavr
