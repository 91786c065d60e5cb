#include "lavrentiev/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lavr {

namespace {

// Clamped knot vector entry U[idx], idx = 0..m+6.
double knot(int m, int idx)
{
    return std::clamp(static_cast<double>(idx - 3) / m, 0.0, 1.0);
}

}  // namespace

BasisValues cubic_basis(int m, double t)
{
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("spline evaluation outside [0,1]");
    const int j = std::min(static_cast<int>(t * m), m - 1);
    const int mu = j + 3;  // U[mu] <= t < U[mu+1]
    std::array<double, 4> n{1.0, 0.0, 0.0, 0.0};
    std::array<double, 4> left{}, right{};
    for (int r = 1; r <= 3; ++r) {
        left[r] = t - knot(m, mu + 1 - r);
        right[r] = knot(m, mu + r) - t;
        double saved = 0.0;
        for (int k = 0; k < r; ++k) {
            const double temp = n[k] / (right[k + 1] + left[r - k]);
            n[k] = saved + right[k + 1] * temp;
            saved = left[r - k] * temp;
        }
        n[r] = saved;
    }
    return {j, n};
}

SplineFunction::SplineFunction(int n_intervals, std::vector<double> coeffs)
    : n_intervals_(n_intervals), coeffs_(std::move(coeffs))
{
    if (n_intervals < 1)
        throw std::invalid_argument("SplineFunction: need at least one interval");
    if (coeffs_.size() != static_cast<std::size_t>(n_intervals) + 3)
        throw std::invalid_argument("SplineFunction: expected m+3 coefficients");
    for (double c : coeffs_)
        if (!std::isfinite(c))
            throw std::invalid_argument("SplineFunction: non-finite coefficient");
}

SplineFunction SplineFunction::linear(int m, double a, double b)
{
    // Greville abscissae (U[i+1] + U[i+2] + U[i+3]) / 3
    std::vector<double> c(m + 3);
    for (int i = 0; i < m + 3; ++i) {
        const double g = (knot(m, i + 1) + knot(m, i + 2) + knot(m, i + 3)) / 3.0;
        c[i] = a + b * g;
    }
    return SplineFunction(m, std::move(c));
}

double SplineFunction::eval(double t) const
{
    const BasisValues b = cubic_basis(n_intervals_, t);
    double sum = 0.0;
    for (int k = 0; k < 4; ++k)
        sum += coeffs_[b.first + k] * b.values[k];
    return sum;
}

SplineBasisTable::SplineBasisTable(const UniformGrid& grid, int n_intervals)
    : grid_(grid), m_(n_intervals)
{
    if (n_intervals < 1)
        throw std::invalid_argument("SplineBasisTable: need at least one interval");
    table_.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        table_.push_back(cubic_basis(m_, grid.node(k)));

    gram_ = Eigen::MatrixXd::Zero(dim(), dim());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double w = grid.quadrature_weight(k);
        const BasisValues& b = table_[k];
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
                gram_(b.first + p, b.first + q) += w * b.values[p] * b.values[q];
    }
}

GridFunction SplineBasisTable::combine(std::span<const double> coeffs) const
{
    if (coeffs.size() != static_cast<std::size_t>(dim()))
        throw std::invalid_argument("SplineBasisTable: coefficient count mismatch");
    std::vector<double> v(grid_.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const BasisValues& b = table_[k];
        double sum = 0.0;
        for (int p = 0; p < 4; ++p)
            sum += coeffs[b.first + p] * b.values[p];
        v[k] = sum;
    }
    return GridFunction(grid_, std::move(v));
}

Eigen::VectorXd SplineBasisTable::moments(const GridFunction& f) const
{
    if (!(f.grid() == grid_))
        throw std::invalid_argument("incompatible grids");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
    for (std::size_t k = 0; k < grid_.size(); ++k) {
        const double wf = grid_.quadrature_weight(k) * f[k];
        const BasisValues& b = table_[k];
        for (int p = 0; p < 4; ++p)
            out(b.first + p) += wf * b.values[p];
    }
    return out;
}

std::pair<std::size_t, std::size_t> SplineBasisTable::support(int i) const
{
    // B_i lives on [U[i], U[i+4]] = intervals i-3 .. i (clamped to 0..m-1).
    const double lo = knot(m_, i);
    const double hi = knot(m_, i + 4);
    const auto n = static_cast<double>(grid_.n_cells());
    const auto klo = static_cast<std::size_t>(std::max(0.0, std::floor(lo * n) - 1.0));
    const auto khi = std::min(grid_.size() - 1, static_cast<std::size_t>(std::ceil(hi * n) + 1.0));
    return {klo, khi};
}

std::vector<double> SplineBasisTable::sample(int i) const
{
    std::vector<double> v(grid_.size(), 0.0);
    const auto [lo, hi] = support(i);
    for (std::size_t k = lo; k <= hi; ++k) {
        const BasisValues& b = table_[k];
        const int p = i - b.first;
        if (p >= 0 && p < 4)
            v[k] = b.values[p];
    }
    return v;
}

SplineFunction spline_project(const GridFunction& x, int m)
{
    if (m < 1)
        throw std::invalid_argument("spline_project: m must be >= 1");
    const UniformGrid& g = x.grid();
    if (g.n_cells() < 4 * (m + 3))
        throw std::invalid_argument("spline_project: fine grid too coarse for m = " +
                                    std::to_string(m));
    const SplineBasisTable basis(g, m);
    Eigen::LLT<Eigen::MatrixXd> llt(basis.gram());
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("spline_project: singular Gram system");
    const Eigen::VectorXd c = llt.solve(basis.moments(x));
    return SplineFunction(m, std::vector<double>(c.data(), c.data() + c.size()));
}

GridFunction spline_eval(const SplineFunction& s, const UniformGrid& grid)
{
    std::vector<double> v(grid.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = s.eval(grid.node(k));
    return GridFunction(grid, std::move(v));
}

}  // namespace lavr
