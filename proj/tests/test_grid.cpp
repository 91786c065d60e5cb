#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "lavrentiev/grid.hpp"
#include "lavrentiev/random.hpp"

using namespace lavr;

TEST_CASE("uniform grid layout")
{
    const UniformGrid g(4);
    CHECK(g.size() == 5);
    CHECK(g.spacing() == 0.25);
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(4) == 1.0);
    CHECK_THROWS_AS(UniformGrid(1), std::invalid_argument);
}

TEST_CASE("grid functions reject wrong length and non-finite values")
{
    const UniformGrid g(4);
    CHECK_THROWS_AS(GridFunction(g, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(g, {1, 2, std::nan(""), 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(g, {1, 2, std::numeric_limits<double>::infinity(), 4, 5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Weight(-0.1), std::invalid_argument);
}

TEST_CASE("weighted inner product")
{
    const UniformGrid g;
    const auto one = GridFunction::constant(g, 1.0);
    CHECK(weighted_inner(one, one, Weight(0.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(weighted_inner(one, one, Weight(1.0)) - (1.0 - std::exp(-2.0)) / 2.0) < 1e-6);
    const auto t = GridFunction::sample(g, [](double s) { return s; });
    CHECK(std::abs(weighted_inner(t, one, Weight(0.0)) - 0.5) < 1e-6);

    const auto other = GridFunction::constant(UniformGrid(10), 1.0);
    CHECK_THROWS_WITH_AS(weighted_inner(one, other, Weight(0.0)), "incompatible grids",
                         std::invalid_argument);
}

TEST_CASE("weighted and sup norms")
{
    const UniformGrid g;
    CHECK(weighted_norm(GridFunction::constant(g, 1.0), Weight(0.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(weighted_norm(GridFunction::constant(g, 1.0), Weight(1.0)) - 0.6575198539828996) <
          1e-6);
    CHECK(weighted_norm(GridFunction::constant(g, 3.0), Weight(0.0)) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(weighted_norm(GridFunction::constant(g, 0.0), Weight(2.0)) == 0.0);

    CHECK(sup_norm(GridFunction::constant(g, -2.0)) == 2.0);
    CHECK(sup_norm(GridFunction::sample(g, [](double s) { return s; })) == 1.0);
    CHECK(sup_norm(GridFunction::constant(g, 0.0)) == 0.0);
}

TEST_CASE("apply_weight")
{
    const UniformGrid g(100);
    const auto one = GridFunction::constant(g, 1.0);
    const auto same = apply_weight(one, Weight(0.0), WeightDirection::Forward);
    for (double v : same.values())
        CHECK(v == 1.0);
    const auto e = apply_weight(one, Weight(1.0), WeightDirection::Forward);
    for (std::size_t k = 0; k < g.size(); ++k)
        CHECK(e[k] == doctest::Approx(std::exp(g.node(k))).epsilon(1e-15));

    const auto x = random_fourier(g, 7);
    const auto back = apply_weight(apply_weight(x, Weight(2.5), WeightDirection::Forward),
                                   Weight(2.5), WeightDirection::Inverse);
    for (std::size_t k = 0; k < g.size(); ++k)
        CHECK(back[k] == doctest::Approx(x[k]).epsilon(1e-14));
}

TEST_CASE("isometry, norm equivalence and Cauchy-Schwarz on random functions")
{
    const UniformGrid g(500);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = random_fourier(g, derive_seed(11, trial));
        const double n0 = weighted_norm(x, Weight(0.0));
        for (double sigma : {0.5, 1.0, 5.0}) {
            const Weight w(sigma);
            const double ns = weighted_norm(x, w);
            CHECK(std::exp(-sigma) * n0 <= ns + 1e-10);
            CHECK(ns <= n0 + 1e-10);
            if (trial % 50 == 0) {
                const double iso =
                    weighted_norm(apply_weight(x, w, WeightDirection::Forward), w);
                CHECK(std::abs(iso - n0) <= 1e-10 * n0);
                const auto y = random_fourier(g, derive_seed(12, trial));
                CHECK(std::abs(weighted_inner(x, y, w)) <= ns * weighted_norm(y, w) + 1e-12);
            }
        }
    }
}

TEST_CASE("partial integral with off-grid upper limit")
{
    const UniformGrid g(10);
    const auto t = GridFunction::sample(g, [](double s) { return s; });
    // trapezoid is exact for linear integrands, including the partial cell
    CHECK(integrate_to(t, 0.37) == doctest::Approx(0.37 * 0.37 / 2).epsilon(1e-14));
    CHECK(integrate_to(t, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(integrate_to(t, 0.0) == 0.0);
    CHECK_THROWS_AS(integrate_to(t, 1.5), std::invalid_argument);
}

TEST_CASE("CSV round trip keeps full precision")
{
    const UniformGrid g(50);
    const auto x = random_fourier(g, 3);
    std::stringstream ss;
    write_csv(ss, x);
    CHECK(ss.str().rfind("t,value\n", 0) == 0);
    const Samples s = read_csv(ss);
    REQUIRE(s.value.size() == g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        CHECK(s.t[k] == g.node(k));
        CHECK(s.value[k] == x[k]);
    }
    const auto same = resample_linear(s.t, s.value, g);
    CHECK(sup_norm(same - x) == 0.0);

    std::stringstream bad("x,y\n0,1\n");
    CHECK_THROWS(read_csv(bad));
}

TEST_CASE("linear resampling onto a finer grid")
{
    const std::vector<double> t{0.0, 0.5, 1.0}, v{0.0, 1.0, 0.0};
    const auto r = resample_linear(t, v, UniformGrid(4));
    CHECK(r[1] == doctest::Approx(0.5));
    CHECK(r[2] == doctest::Approx(1.0));
    CHECK(r[3] == doctest::Approx(0.5));
}
