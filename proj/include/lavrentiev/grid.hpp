#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace lavr {

/// Uniform partition of [0,1] into n_cells intervals; nodes t_k = k/N, k = 0..N.
class UniformGrid {
public:
    static constexpr int kDefaultCells = 5000;

    explicit UniformGrid(int n_cells = kDefaultCells);

    int n_cells() const { return n_cells_; }
    std::size_t size() const { return static_cast<std::size_t>(n_cells_) + 1; }
    double spacing() const { return 1.0 / n_cells_; }
    double node(std::size_t k) const { return static_cast<double>(k) / n_cells_; }

    /// Composite trapezoid weight of node k.
    double quadrature_weight(std::size_t k) const
    {
        return (k == 0 || k == size() - 1) ? 0.5 * spacing() : spacing();
    }

    bool operator==(const UniformGrid&) const = default;

private:
    int n_cells_;
};

/// Real function sampled at the nodes of a UniformGrid. Values are always finite.
class GridFunction {
public:
    GridFunction(UniformGrid grid, std::vector<double> values);

    static GridFunction constant(const UniformGrid& grid, double c);
    static GridFunction sample(const UniformGrid& grid, const std::function<double(double)>& f);

    const UniformGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t k) const { return values_[k]; }
    double front() const { return values_.front(); }
    double back() const { return values_.back(); }

    double min() const;
    double max() const;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(double c);

private:
    UniformGrid grid_;
    std::vector<double> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double c, GridFunction a);

/// Exponent σ ≥ 0 of the weight e^{-2σt} in the L²σ inner product.
class Weight {
public:
    explicit Weight(double sigma = 0.0);
    double sigma() const { return sigma_; }

private:
    double sigma_;
};

enum class WeightDirection { Forward, Inverse };

/// Throws std::invalid_argument("incompatible grids") unless a and b live on the same grid.
void require_same_grid(const GridFunction& a, const GridFunction& b);

/// Trapezoid approximation of ∫₀¹ e^{-2σt} x(t) y(t) dt.
double weighted_inner(const GridFunction& x, const GridFunction& y, Weight w);
double weighted_norm(const GridFunction& x, Weight w);
double sup_norm(const GridFunction& x);

/// Nodewise multiplication by e^{σt} (Forward) or e^{-σt} (Inverse).
GridFunction apply_weight(const GridFunction& x, Weight w, WeightDirection direction);

/// Trapezoid approximation of ∫₀^b x(t) dt for b ∈ [0,1]; the partial last
/// cell uses the linear interpolant of the node values.
double integrate_to(const GridFunction& x, double b);

/// Linear interpolation of scattered uniform samples (t_k, v_k) onto grid.
GridFunction resample_linear(std::span<const double> t, std::span<const double> v,
                             const UniformGrid& grid);

// `t,value` CSV with a header line and 17 significant digits.
void write_csv(std::ostream& os, const GridFunction& x);
struct Samples {
    std::vector<double> t;
    std::vector<double> value;
};
Samples read_csv(std::istream& is);

}  // namespace lavr
