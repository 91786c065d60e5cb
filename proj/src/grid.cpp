#include "lavrentiev/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lavr {

UniformGrid::UniformGrid(int n_cells) : n_cells_(n_cells)
{
    if (n_cells < 2)
        throw std::invalid_argument("UniformGrid: need at least 2 cells");
}

GridFunction::GridFunction(UniformGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw std::invalid_argument("GridFunction: expected " + std::to_string(grid_.size()) +
                                    " values, got " + std::to_string(values_.size()));
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("GridFunction: non-finite value");
}

GridFunction GridFunction::constant(const UniformGrid& grid, double c)
{
    return GridFunction(grid, std::vector<double>(grid.size(), c));
}

GridFunction GridFunction::sample(const UniformGrid& grid, const std::function<double(double)>& f)
{
    std::vector<double> v(grid.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = f(grid.node(k));
    return GridFunction(grid, std::move(v));
}

double GridFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }
double GridFunction::max() const { return *std::max_element(values_.begin(), values_.end()); }

GridFunction& GridFunction::operator+=(const GridFunction& other)
{
    require_same_grid(*this, other);
    for (std::size_t k = 0; k < values_.size(); ++k)
        values_[k] += other.values_[k];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other)
{
    require_same_grid(*this, other);
    for (std::size_t k = 0; k < values_.size(); ++k)
        values_[k] -= other.values_[k];
    return *this;
}

GridFunction& GridFunction::operator*=(double c)
{
    for (double& v : values_)
        v *= c;
    return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double c, GridFunction a) { return a *= c; }

Weight::Weight(double sigma) : sigma_(sigma)
{
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::invalid_argument("Weight: sigma must be finite and >= 0");
}

void require_same_grid(const GridFunction& a, const GridFunction& b)
{
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument("incompatible grids");
}

double weighted_inner(const GridFunction& x, const GridFunction& y, Weight w)
{
    require_same_grid(x, y);
    const UniformGrid& g = x.grid();
    double sum = 0.0;
    if (w.sigma() == 0.0) {
        for (std::size_t k = 0; k < g.size(); ++k)
            sum += g.quadrature_weight(k) * x[k] * y[k];
    } else {
        for (std::size_t k = 0; k < g.size(); ++k)
            sum += g.quadrature_weight(k) * std::exp(-2.0 * w.sigma() * g.node(k)) * x[k] * y[k];
    }
    return sum;
}

double weighted_norm(const GridFunction& x, Weight w) { return std::sqrt(weighted_inner(x, x, w)); }

double sup_norm(const GridFunction& x)
{
    double m = 0.0;
    for (double v : x.values())
        m = std::max(m, std::abs(v));
    return m;
}

GridFunction apply_weight(const GridFunction& x, Weight w, WeightDirection direction)
{
    const double s = direction == WeightDirection::Forward ? w.sigma() : -w.sigma();
    std::vector<double> v(x.values().begin(), x.values().end());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] *= std::exp(s * x.grid().node(k));
    return GridFunction(x.grid(), std::move(v));
}

double integrate_to(const GridFunction& x, double b)
{
    if (!(b >= 0.0 && b <= 1.0))
        throw std::invalid_argument("integrate_to: upper limit outside [0,1]");
    const UniformGrid& g = x.grid();
    const double h = g.spacing();
    const auto full = std::min(static_cast<std::size_t>(b * g.n_cells()), g.size() - 1);
    double sum = 0.0;
    for (std::size_t k = 0; k < full; ++k)
        sum += 0.5 * h * (x[k] + x[k + 1]);
    const double rest = b - g.node(full);
    if (rest > 0.0 && full + 1 < g.size()) {
        const double slope = (x[full + 1] - x[full]) / h;
        sum += rest * (x[full] + 0.5 * slope * rest);
    }
    return sum;
}

GridFunction resample_linear(std::span<const double> t, std::span<const double> v,
                             const UniformGrid& grid)
{
    if (t.size() != v.size() || t.size() < 2)
        throw std::invalid_argument("resample_linear: need at least two samples");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw std::invalid_argument("resample_linear: abscissae must increase");
    if (t.front() > 1e-12 || t.back() < 1.0 - 1e-12)
        throw std::invalid_argument("resample_linear: samples must cover [0,1]");

    std::vector<double> out(grid.size());
    std::size_t j = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double s = grid.node(k);
        while (j + 2 < t.size() && t[j + 1] < s)
            ++j;
        const double lam = std::clamp((s - t[j]) / (t[j + 1] - t[j]), 0.0, 1.0);
        out[k] = (1.0 - lam) * v[j] + lam * v[j + 1];
    }
    return GridFunction(grid, std::move(out));
}

void write_csv(std::ostream& os, const GridFunction& x)
{
    os << "t,value\n";
    char buf[64];
    for (std::size_t k = 0; k < x.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x.grid().node(k), x[k]);
        os << buf;
    }
}

Samples read_csv(std::istream& is)
{
    Samples s;
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("read_csv: empty input");
    if (line.rfind("t,value", 0) != 0)
        throw std::runtime_error("read_csv: expected header 't,value'");
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r")
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("read_csv: malformed line '" + line + "'");
        s.t.push_back(std::stod(line.substr(0, comma)));
        s.value.push_back(std::stod(line.substr(comma + 1)));
    }
    return s;
}

}  // namespace lavr
