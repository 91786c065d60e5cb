#include <doctest.h>

#include <cmath>

#include "lavrentiev/autoconv.hpp"
#include "lavrentiev/experiment.hpp"
#include "lavrentiev/initval.hpp"

using namespace lavr;

TEST_CASE("clip_nonneg")
{
    const UniformGrid g(4);
    const auto c = clip_nonneg(GridFunction(g, {-1.0, 0.0, 2.0, -0.5, 3.0}));
    CHECK(c[0] == 0.0);
    CHECK(c[1] == 0.0);
    CHECK(c[2] == 2.0);
    CHECK(c[3] == 0.0);
    CHECK(c[4] == 3.0);

    // |clip(y) − z| ≤ |y − z| for every z ≥ 0
    for (double y : {-2.0, -0.1, 0.0, 0.4, 5.0})
        for (double z : {0.0, 0.3, 4.0}) {
            const double cy = clip_nonneg(GridFunction::constant(g, y))[0];
            CHECK(std::abs(cy - z) <= std::abs(y - z));
        }
}

TEST_CASE("sup-noise estimator")
{
    const UniformGrid g;
    SUBCASE("constant solution")
    {
        const auto y = forward(GridFunction::constant(g, 2.0));
        CHECK(std::abs(estimate_x0_sup(y, 0.01, 100) - 2.0) <= 0.85);
    }
    SUBCASE("negative data give zero")
    {
        CHECK(estimate_x0_sup(GridFunction::constant(g, -1.0), 0.01, 100) == 0.0);
    }
    SUBCASE("noisy F1 data")
    {
        for (double delta : {0.04, 0.0025}) {
            ProblemSpec spec;
            spec.noise.delta = delta;
            const auto data = generate_data(spec);
            const double est =
                estimate_x0_sup(data.y_delta, delta, choose_m(delta, Space::PiecewiseConstant));
            CHECK(std::abs(est - 2.0) <= 4.25 * std::sqrt(delta));
        }
    }
    SUBCASE("preconditions")
    {
        const auto y = GridFunction::constant(g, 1.0);
        CHECK_THROWS_AS(estimate_x0_sup(y, 0.0, 100), std::invalid_argument);
        CHECK_THROWS_AS(estimate_x0_sup(y, 1.5, 100), std::invalid_argument);
        CHECK_THROWS_AS(estimate_x0_sup(y, 0.01, 50), std::invalid_argument);
    }
}

TEST_CASE("L2-noise estimator")
{
    const UniformGrid g;
    CHECK(l2_window(1e-5, 2.0) == doctest::Approx(0.0067548).epsilon(1e-5));

    const auto y = forward(GridFunction::sample(g, f1));
    const auto est = estimate_x0_l2_detailed(y, 0.01, 2.0);
    CHECK(std::abs(est.value - 2.0) <= 0.5);
    CHECK_FALSE(est.clamped);
    CHECK(est.h == doctest::Approx(l2_window(0.01, 2.0)));

    CHECK(estimate_x0_l2(GridFunction::constant(g, 0.0), 0.01, 2.0) == 0.0);
    CHECK(estimate_x0_l2(GridFunction::constant(g, -1.0), 0.01, 2.0) == 0.0);

    const auto wide = estimate_x0_l2_detailed(y, 1.0, 0.1);
    CHECK(wide.clamped);
    CHECK(wide.h == 1.0);
    CHECK_THROWS_AS(estimate_x0_l2(y, 0.01, 0.0), std::invalid_argument);
}

TEST_CASE("reference element is constant")
{
    const UniformGrid g;
    const auto y = forward(GridFunction::sample(g, f1));
    NoiseModel noise;
    noise.delta = 0.01;
    const auto xs = reference_element(y, noise, 100, UniformGrid(50));
    CHECK(xs.size() == 51);
    CHECK(xs.min() == xs.max());
    CHECK(xs[0] == doctest::Approx(estimate_x0_sup(y, 0.01, 100)));

    noise.kind = NoiseKind::L2Norm;
    CHECK(reference_element(y, noise, 100, g)[7] == doctest::Approx(estimate_x0_l2(y, 0.01, 2.0)));

    noise.delta = 2.0;
    CHECK_THROWS_AS(reference_element(y, noise, 100, g), std::invalid_argument);
}
