#include <doctest.h>

#include "lavrentiev/autoconv.hpp"
#include "lavrentiev/experiment.hpp"
#include "lavrentiev/random.hpp"
#include "oracles.hpp"

using namespace lavr;

TEST_CASE("forward of simple functions")
{
    const UniformGrid g;
    const auto y1 = forward(GridFunction::constant(g, 1.0));
    CHECK(y1[0] == 0.0);
    CHECK(y1.back() == doctest::Approx(1.0).epsilon(1e-12));
    const auto y3 = forward(GridFunction::constant(g, 3.0));
    for (std::size_t k = 0; k < g.size(); k += 97)
        CHECK(y3[k] == doctest::Approx(9.0 * g.node(k)).epsilon(1e-12));

    const auto yt = forward(GridFunction::sample(g, [](double t) { return t; }));
    CHECK(std::abs(yt.back() - 1.0 / 6.0) < 1e-6);
}

TEST_CASE("forward of f1 matches adaptive Simpson")
{
    const UniformGrid g;
    const auto y = forward(GridFunction::sample(g, f1));
    for (std::size_t k = 0; k < g.size(); k += 50) {
        const double s = g.node(k);
        const double ref =
            oracle::adaptive_simpson([s](double t) { return f1(s - t) * f1(t); }, 0.0, s, 1e-10);
        CHECK(std::abs(y[k] - ref) <= 5e-7);
    }
}

TEST_CASE("Frechet derivative")
{
    const UniformGrid g;
    const auto one = GridFunction::constant(g, 1.0);
    CHECK(frechet_apply(one, one).back() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(frechet_apply(one, one)[0] == 0.0);
    const auto t = GridFunction::sample(g, [](double s) { return s; });
    CHECK(std::abs(frechet_apply(t, one).back() - 1.0) < 1e-6);

    const auto x = random_fourier(UniformGrid(400), 5);
    const auto d = frechet_apply(x, x) - 2.0 * forward(x);
    CHECK(sup_norm(d) <= 1e-12);

    CHECK_THROWS_AS(frechet_apply(one, GridFunction::constant(UniformGrid(10), 1.0)),
                    std::invalid_argument);
}

TEST_CASE("operator norm bounds on random functions")
{
    const UniformGrid g(400);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_fourier(g, derive_seed(21, 2 * trial));
        const auto v = random_fourier(g, derive_seed(21, 2 * trial + 1));
        for (double sigma : {0.0, 1.0}) {
            const Weight w(sigma);
            const double nx = weighted_norm(x, w);
            CHECK(weighted_norm(forward(x), w) <= nx * nx + 1e-8);
            CHECK(weighted_norm(frechet_apply(x, v), w) <= 2.0 * nx * weighted_norm(v, w) + 1e-8);
        }
    }
}

TEST_CASE("quadratic remainder is exactly eps^2 F(v)")
{
    const UniformGrid g(400);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_fourier(g, derive_seed(22, 2 * trial), 5);
        const auto v = random_fourier(g, derive_seed(22, 2 * trial + 1), 5);
        for (double eps : {1e-3, 1e-4}) {
            const auto rem = forward(x + eps * v) - forward(x) - eps * frechet_apply(x, v);
            CHECK(sup_norm(rem - eps * eps * forward(v)) <= 1e-10);
        }
    }
}

TEST_CASE("autoconvolution of nonnegative functions is nonnegative")
{
    const UniformGrid g(400);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_fourier(g, derive_seed(23, trial));
        std::vector<double> a(x.values().begin(), x.values().end());
        for (double& v : a)
            v = std::max(v, 0.0);
        CHECK(forward(GridFunction(g, a)).min() >= 0.0);
    }
}

TEST_CASE("banded convolution agrees with the full one")
{
    const UniformGrid g(200);
    const auto u = random_fourier(g, 1);
    std::vector<double> v(g.size(), 0.0);
    for (std::size_t k = 40; k <= 90; ++k)
        v[k] = std::sin(static_cast<double>(k));
    const auto full = convolve(u.values(), v, g.spacing(), 0, g.size() - 1);
    const auto band = convolve(u.values(), v, g.spacing(), 40, 90);
    for (std::size_t k = 0; k < g.size(); ++k)
        CHECK(band[k] == doctest::Approx(full[k]).epsilon(1e-13));
}
