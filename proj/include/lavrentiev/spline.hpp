#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "lavrentiev/grid.hpp"

namespace lavr {

/// Cubic spline on the equidistant knots 0, 1/m, …, 1 (boundary knots of
/// multiplicity 4), stored as m+3 B-spline coefficients.
class SplineFunction {
public:
    SplineFunction(int n_intervals, std::vector<double> coeffs);

    /// Coefficients reproducing the linear function a + b t.
    static SplineFunction linear(int n_intervals, double a, double b);

    int n_intervals() const { return n_intervals_; }
    std::span<const double> coeffs() const { return coeffs_; }

    /// de Boor evaluation; t outside [0,1] throws std::domain_error.
    double eval(double t) const;

private:
    int n_intervals_;
    std::vector<double> coeffs_;
};

/// First nonzero basis index and the four nonzero cubic B-spline values at t.
struct BasisValues {
    int first;
    std::array<double, 4> values;
};
BasisValues cubic_basis(int n_intervals, double t);

/// Cubic B-spline basis tabulated on the nodes of a grid, plus the
/// trapezoid-weighted inner products needed for projections and Galerkin
/// systems.
class SplineBasisTable {
public:
    SplineBasisTable(const UniformGrid& grid, int n_intervals);

    const UniformGrid& grid() const { return grid_; }
    int n_intervals() const { return m_; }
    int dim() const { return m_ + 3; }

    /// Σ c_i B_i on the nodes.
    GridFunction combine(std::span<const double> coeffs) const;
    /// ⟨f, B_j⟩₀ for every j (trapezoid rule).
    Eigen::VectorXd moments(const GridFunction& f) const;
    /// ⟨B_i, B_j⟩₀ (trapezoid rule); banded with bandwidth 7.
    const Eigen::MatrixXd& gram() const { return gram_; }

    /// Node index range [lo, hi] where B_i may be nonzero.
    std::pair<std::size_t, std::size_t> support(int i) const;
    /// B_i sampled on every node.
    std::vector<double> sample(int i) const;

private:
    UniformGrid grid_;
    int m_;
    std::vector<BasisValues> table_;
    Eigen::MatrixXd gram_;
};

/// Least-squares fit in the trapezoid-weighted discrete L² inner product.
/// Requires m ≥ 1 and N ≥ 4(m+3).
SplineFunction spline_project(const GridFunction& x, int m);

GridFunction spline_eval(const SplineFunction& s, const UniformGrid& grid);

}  // namespace lavr
