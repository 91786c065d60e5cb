#include <doctest.h>

#include <cmath>

#include "lavrentiev/experiment.hpp"
#include "lavrentiev/projector.hpp"
#include "lavrentiev/random.hpp"
#include "oracles.hpp"

using namespace lavr;

TEST_CASE("exponential moments stay accurate across the series switch")
{
    for (double sigma : {0.0, 1e-6, 0.3, 1.0, 5.0}) {
        for (double L : {1e-4, 0.05, 0.2, 1.0}) {
            const double m0 = oracle::gauss10([&](double u) { return std::exp(-sigma * u); }, 0, L);
            const double m1 =
                oracle::gauss10([&](double u) { return u * std::exp(-sigma * u); }, 0, L);
            CHECK(detail::exp_moment0(sigma, L) == doctest::Approx(m0).epsilon(1e-13));
            CHECK(detail::exp_moment1(sigma, L) == doctest::Approx(m1).epsilon(1e-12));
        }
    }
}

TEST_CASE("pc_project of simple functions")
{
    const UniformGrid g;
    const auto c = pc_project(GridFunction::constant(g, 2.5), 7, 0.0);
    for (double v : c.coeffs())
        CHECK(v == doctest::Approx(2.5).epsilon(1e-13));

    const auto t = pc_project(GridFunction::sample(g, [](double s) { return s; }), 2, 0.0);
    CHECK(t[0] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(t[1] == doctest::Approx(0.75).epsilon(1e-13));

    // σ-weighted average of a constant: m ∫_cell e^{−σt} dt
    const auto w = pc_project(GridFunction::constant(g, 1.0), 4, 2.0);
    for (int i = 0; i < 4; ++i) {
        const double l = i / 4.0, r = (i + 1) / 4.0;
        CHECK(w[i] == doctest::Approx(4.0 * (std::exp(-2 * l) - std::exp(-2 * r)) / 2.0)
                           .epsilon(1e-13));
    }

    CHECK_THROWS_AS(pc_project(GridFunction::constant(g, 1.0), 1, 0.0), std::invalid_argument);
}

TEST_CASE("pc_project integrates the interpolant exactly when cells straddle nodes")
{
    // N = 10, m = 3: cell boundaries 1/3, 2/3 fall between nodes
    const UniformGrid g(10);
    const auto x = random_fourier(g, 9, 3);
    for (double sigma : {0.0, 1.5}) {
        const auto p = pc_project(x, 3, sigma);
        auto interp = [&](double t) {
            const auto k = std::min<std::size_t>(static_cast<std::size_t>(t * 10), 9);
            const double lam = t * 10 - k;
            return (1 - lam) * x[k] + lam * x[k + 1];
        };
        for (int i = 0; i < 3; ++i) {
            // split at nodes so each Gauss rule sees a smooth integrand
            double ref = 0.0;
            const double l = i / 3.0, r = (i + 1) / 3.0;
            double a = l;
            for (int k = 0; k <= 10; ++k) {
                const double node = k / 10.0;
                if (node <= a || node >= r)
                    continue;
                ref += oracle::gauss10([&](double t) { return std::exp(-sigma * t) * interp(t); }, a, node);
                a = node;
            }
            ref += oracle::gauss10([&](double t) { return std::exp(-sigma * t) * interp(t); }, a, r);
            CHECK(p[i] == doctest::Approx(3.0 * ref).epsilon(1e-12));
        }
    }
}

TEST_CASE("pc_eval")
{
    const UniformGrid g(100);
    const auto c = pc_eval(PcCoeffs(0.0, std::vector<double>(5, 1.5)), g);
    for (double v : c.values())
        CHECK(v == 1.5);

    std::vector<double> e(4, 0.0);
    e[0] = 1.0;
    const auto f = pc_eval(PcCoeffs(1.0, e), g);
    for (std::size_t k = 0; k < g.size(); ++k)
        CHECK(f[k] == (g.node(k) < 0.25 ? std::exp(g.node(k)) : 0.0));

    // half-open cells, t = 1 in the last cell
    const PcCoeffs p(0.0, {1.0, 2.0});
    CHECK(p.eval(0.5) == 2.0);
    CHECK(p.eval(0.4999) == 1.0);
    CHECK(p.eval(1.0) == 2.0);
    const auto two = pc_eval(p, UniformGrid(4));
    CHECK(two[2] == 2.0);
    CHECK(two[4] == 2.0);

    const auto t = pc_project(GridFunction::sample(UniformGrid(4), [](double s) { return s; }), 2, 0.0);
    const auto back = pc_eval(t, UniformGrid(4));
    CHECK(back[0] == doctest::Approx(0.25));
    CHECK(back[1] == doctest::Approx(0.25));
    CHECK(back[2] == doctest::Approx(0.75));
}

TEST_CASE("idempotence")
{
    const UniformGrid g(5000);
    SUBCASE("constant coefficients are reproduced")
    {
        const PcCoeffs p(0.0, std::vector<double>(10, 3.25));
        const auto q = pc_project(pc_eval(p, g), 10, 0.0);
        for (int i = 0; i < 10; ++i)
            CHECK(std::abs(q[i] - p[i]) <= 1e-9);
    }
    SUBCASE("general coefficients up to the boundary-interval blending")
    {
        const int m = 10;
        std::vector<double> c(m);
        for (int i = 0; i < m; ++i)
            c[i] = std::sin(1.0 + i);
        for (double sigma : {0.0, 1.0}) {
            const PcCoeffs p(sigma, c);
            const auto q = pc_project(pc_eval(p, g), m, sigma);
            for (int i = 0; i < m; ++i) {
                double jump = 0.0;
                if (i + 1 < m)
                    jump = std::abs(c[i + 1] - c[i]) * std::exp(sigma);
                const double bound = static_cast<double>(m) / (2.0 * g.n_cells()) * jump +
                                     sigma * sigma / (8.0 * g.n_cells() * g.n_cells()) * 10.0 + 1e-9;
                CHECK(std::abs(q[i] - p[i]) <= bound);
            }
        }
    }
}

TEST_CASE("Q_m^sigma is the L2_sigma-orthogonal projection")
{
    const UniformGrid g(1000);
    const auto x = random_fourier(g, 31, 6);
    auto interp = [&](double t) {
        const auto k = std::min<std::size_t>(static_cast<std::size_t>(t * 1000), 999);
        const double lam = t * 1000 - k;
        return (1 - lam) * x[k] + lam * x[k + 1];
    };
    for (double sigma : {0.0, 1.0, 4.0}) {
        const int m = 8;
        const auto p = pc_project(x, m, sigma);
        for (int i = 0; i < m; ++i) {
            // ⟨x̃ − Q x̃, f_i⟩σ = ∫_cell e^{−σt} (x̃ − p_i e^{σt}) dt
            double inner = 0.0;
            const int per_cell = 1000 / m;
            for (int k = 0; k < per_cell; ++k) {
                const double a = (i * per_cell + k) / 1000.0, b = (i * per_cell + k + 1) / 1000.0;
                inner += oracle::gauss10(
                    [&](double t) { return std::exp(-sigma * t) * interp(t) - p[i]; }, a, b);
            }
            CHECK(std::abs(inner) <= 1e-8);
        }
    }
}

TEST_CASE("projection does not increase the sigma-norm")
{
    const UniformGrid g(2000);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_fourier(g, derive_seed(32, trial));
        for (double sigma : {0.0, 1.0, 3.0}) {
            const Weight w(sigma);
            CHECK(pc_norm(pc_project(x, 17, sigma), w) <= weighted_norm(x, w) + 1e-8);
        }
    }
}

TEST_CASE("exact piecewise norms agree with fine sampling")
{
    const PcCoeffs p(1.0, {1.0, -2.0, 0.5, 3.0});
    const PcCoeffs q(0.0, {0.5, 1.0, 1.5, 2.0});
    const UniformGrid g(40000);
    const double sampled = weighted_norm(pc_eval(p, g) - pc_eval(q, g), Weight(1.0));
    CHECK(pc_distance(p, q, Weight(1.0)) == doctest::Approx(sampled).epsilon(1e-3));
    CHECK(pc_norm(PcCoeffs(0.0, {2.0, 2.0}), Weight(0.0)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(pc_distance(p, PcCoeffs(0.0, {1.0}), Weight(0.0)), std::invalid_argument);
}

TEST_CASE("piecewise-constant approximation order")
{
    const UniformGrid g;
    const auto x = GridFunction::sample(g, f2);
    for (double sigma : {0.0, 1.0}) {
        std::vector<double> inv_m, err;
        for (int m : {10, 20, 40, 80}) {
            inv_m.push_back(1.0 / m);
            err.push_back(weighted_norm(x - pc_eval(pc_project(x, m, sigma), g), Weight(sigma)));
        }
        CHECK(fit_slope(inv_m, err) >= 0.9);
    }
}

TEST_CASE("projector gap and unweighted projector norm")
{
    CHECK(projector_gap(10, 0.0, 20) == 0.0);
    CHECK(projector_gap(100, 1.0, 200) <= 0.02 + 1e-6);
    CHECK(projector_gap(10, 1.0, 200) <= 0.2 + 1e-6);
    CHECK(projector_gap(10, 1.0, 20) > 0.0);
    CHECK_THROWS_AS(projector_gap(2, 3.0, 10), std::invalid_argument);

    for (int m : {10, 50})
        CHECK(unweighted_projector_norm(m, 1.0, 100) <= 1.0 + 2.0 / m);
}
