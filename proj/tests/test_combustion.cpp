#include <cmath>

#include "doctest.h"
#include "emberflow/combustion.hpp"
#include "support/oracles.hpp"

using namespace emberflow;
namespace {

Grid small_grid(int n, double d) { return Grid{n, n, d, d, {d / 2.0, d / 2.0}}; }

FuelState uniform_fuel(const Grid& g, double capacity, double burned,
                       double theta_bar) {
    return FuelState(ScalarField(g, capacity), ScalarField(g, burned),
                     ScalarField(g, theta_bar));
}

// Independent bump-kernel construction used to cross-check the builder.
Eigen::ArrayXXd bump_weights_ref(double radius, double mass, double dx,
                                 double dy, int& half_x, int& half_y) {
    half_x = std::max(0, int(std::ceil(radius / dx)) - 1);
    half_y = std::max(0, int(std::ceil(radius / dy)) - 1);
    Eigen::ArrayXXd w(2 * half_x + 1, 2 * half_y + 1);
    double total = 0.0;
    for (int b = -half_y; b <= half_y; ++b) {
        for (int a = -half_x; a <= half_x; ++a) {
            const double r = std::hypot(a * dx, b * dy);
            const double v = std::max(0.0, 1.0 - r / radius);
            w(a + half_x, b + half_y) = v;
            total += v;
        }
    }
    w *= mass / (total * dx * dy);
    return w;
}

}  // namespace

TEST_CASE("effective theta starts at zero and hits 1 at half burn") {
    const Grid g = small_grid(5, 0.1);
    SUBCASE("no burn") {
        FuelMemory fm{uniform_fuel(g, 0.8, 0.0, 1.0), false};
        const ScalarField th = effective_theta(IgnitionModel{fm}, g);
        CHECK(th.values.abs().maxCoeff() == 0.0);
    }
    SUBCASE("half burn") {
        FuelMemory fm{uniform_fuel(g, 0.8, 0.4, 1.0), false};
        const ScalarField th = effective_theta(IgnitionModel{fm}, g);
        CHECK(th(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("constant model is uniform") {
        const ScalarField th =
            effective_theta(IgnitionModel{ConstantTheta{1.25}}, g);
        CHECK((th.values == 1.25).all());
    }
}

TEST_CASE("effective theta diverges toward exhaustion and then pins") {
    const Grid g = small_grid(5, 0.1);
    FuelMemory fm{uniform_fuel(g, 1.0, 0.999, 1.0), false};
    ScalarField th = effective_theta(IgnitionModel{fm}, g);
    CHECK(th(2, 2) > 600.0);  // tan near pi/2 blows up
    CHECK(!is_exhausted_theta(th(2, 2)));

    fm.state.burned(2, 2) = 1.0;
    fm.state.exhausted(2, 2) = true;
    th = effective_theta(IgnitionModel{fm}, g);
    CHECK(is_exhausted_theta(th(2, 2)));
    CHECK(!is_exhausted_theta(th(1, 2)));
}

TEST_CASE("effective theta can be floored at theta_bar") {
    const Grid g = small_grid(5, 0.1);
    FuelMemory fm{uniform_fuel(g, 1.0, 0.0, 1.5), true};
    const ScalarField th = effective_theta(IgnitionModel{fm}, g);
    CHECK(th(2, 2) == 1.5);
    fm.floor_at_theta_bar = false;
    CHECK(effective_theta(IgnitionModel{fm}, g)(2, 2) == 0.0);
}

TEST_CASE("nonpositive fuel capacity is rejected") {
    const Grid g = small_grid(5, 0.1);
    FuelMemory fm{uniform_fuel(g, 1.0, 0.0, 1.0), false};
    fm.state.capacity(1, 1) = 0.0;
    CHECK_THROWS_AS(effective_theta(IgnitionModel{fm}, g), ScenarioError);
}

TEST_CASE("burn accumulator integrates a constant excess exactly") {
    const Grid g = small_grid(4, 0.2);
    FuelState fs = uniform_fuel(g, 10.0, 0.0, 1.0);
    const ScalarField u(g, 2.0);  // excess 1 everywhere
    for (int k = 0; k < 100; ++k) accumulate_burn(fs, u, 0.01);
    CHECK(fs.burned(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    // below theta_bar nothing accumulates
    FuelState cold = uniform_fuel(g, 10.0, 0.0, 1.0);
    const ScalarField low(g, 0.7);
    for (int k = 0; k < 100; ++k) accumulate_burn(cold, low, 0.01);
    CHECK(cold.burned(1, 1) == 0.0);
}

TEST_CASE("burn accumulator is a left-endpoint rule on a ramp") {
    const Grid g = small_grid(4, 0.2);
    FuelState fs = uniform_fuel(g, 10.0, 0.0, 1.0);
    const double dt = 0.01;
    for (int k = 0; k < 100; ++k) {
        const ScalarField u(g, 1.0 + k * dt);  // u(t) = theta_bar + t
        accumulate_burn(fs, u, dt);
    }
    // Exact left-endpoint sum is 0.495; the target integral is 0.5.
    CHECK(fs.burned(2, 2) == doctest::Approx(0.495).epsilon(1e-12));
    CHECK(std::abs(fs.burned(2, 2) - 0.5) <= dt * 0.5 + 1e-9);
}

TEST_CASE("burn clamps at capacity and exhaustion is permanent") {
    const Grid g = small_grid(4, 0.2);
    FuelState fs = uniform_fuel(g, 0.05, 0.0, 1.0);
    const ScalarField hot(g, 2.0);
    for (int k = 0; k < 20; ++k) {
        accumulate_burn(fs, hot, 0.01);
        CHECK((fs.burned.values <= fs.capacity.values).all());
    }
    CHECK(fs.burned(1, 1) == 0.05);
    CHECK(fs.exhausted(1, 1));
    const ScalarField cold(g, 0.0);
    accumulate_burn(fs, cold, 0.01);
    CHECK(fs.exhausted(1, 1));
    CHECK(fs.burned(1, 1) == 0.05);
    CHECK_THROWS_AS(accumulate_burn(fs, hot, 0.0), Error);
    CHECK_THROWS_AS(accumulate_burn(fs, hot, -0.1), Error);
}

TEST_CASE("burn is nondecreasing under random forcing") {
    std::mt19937 rng(21);
    const Grid g = small_grid(6, 0.1);
    FuelState fs = uniform_fuel(g, 0.4, 0.0, 1.0);
    Eigen::ArrayXXd prev = fs.burned.values;
    for (int k = 0; k < 50; ++k) {
        const ScalarField u = oracle::random_field(rng, g, -1.0, 3.0, 0.0);
        accumulate_burn(fs, u, 0.005);
        CHECK((fs.burned.values >= prev).all());
        prev = fs.burned.values;
    }
}

TEST_CASE("kernel with radius equal to one cell is a scaled point mass") {
    const Grid g = small_grid(8, 0.1);
    const InteractionKernel k = build_dirac_kernel(0.1, 2.0, g);
    CHECK(k.half_x == 0);
    CHECK(k.half_y == 0);
    CHECK(k.weights(0, 0) == doctest::Approx(2.0 / (0.1 * 0.1)).epsilon(1e-12));
}

TEST_CASE("kernel normalizes to the requested mass") {
    const Grid g = small_grid(20, 0.05);
    for (const double radius : {0.11, 0.16, 0.23, 0.34}) {
        for (const double mass : {1.0, 3.5}) {
            const InteractionKernel k = build_dirac_kernel(radius, mass, g);
            const double total = k.weights.sum() * g.dx * g.dy;
            CHECK(std::abs(total - mass) <= 1e-12 * mass);
            CHECK(k.mass == mass);
        }
    }
}

TEST_CASE("kernel table matches a brute-force construction") {
    const Grid g = small_grid(12, 0.1);
    const InteractionKernel k = build_dirac_kernel(0.3, 1.7, g);
    int hx, hy;
    const Eigen::ArrayXXd want = bump_weights_ref(0.3, 1.7, g.dx, g.dy, hx, hy);
    REQUIRE(k.half_x == hx);
    REQUIRE(k.half_y == hy);
    CHECK((k.weights - want).abs().maxCoeff() <= 1e-12 * want.maxCoeff());
}

TEST_CASE("kernel radius below the cell size is degenerate") {
    const Grid g = small_grid(8, 0.1);
    CHECK_THROWS_AS(build_dirac_kernel(0.09, 1.0, g), DegenerateKernelError);
    const Grid mixed{8, 8, 0.05, 0.1, {0.0, 0.0}};
    CHECK_THROWS_AS(build_dirac_kernel(0.07, 1.0, mixed),
                    DegenerateKernelError);
}

TEST_CASE("point-mass kernel reduces the source to the local excess") {
    const Grid g = small_grid(6, 0.1);
    const InteractionKernel k = delta_kernel(1.0, g);
    const ScalarField u(g, 1.5);
    const ScalarField theta(g, 1.0);
    const ScalarField s = combustion_source(u, theta, k);
    CHECK((s.values - 0.5).abs().maxCoeff() <= 1e-14);
}

TEST_CASE("source vanishes when nothing exceeds theta") {
    const Grid g = small_grid(6, 0.1);
    const InteractionKernel k = build_dirac_kernel(0.25, 1.0, g);
    const ScalarField u(g, 0.99);
    const ScalarField theta(g, 1.0);
    CHECK(combustion_source(u, theta, k).values.abs().maxCoeff() == 0.0);
}

TEST_CASE("uniform excess yields the kernel mass away from the boundary") {
    const Grid g = small_grid(10, 0.1);
    const double mass = 2.5;
    const InteractionKernel k = build_dirac_kernel(0.3, mass, g);
    const ScalarField u(g, 2.0);
    const ScalarField theta(g, 1.0);
    const ScalarField s = combustion_source(u, theta, k);
    for (int j = k.half_y; j < g.ny - k.half_y; ++j) {
        for (int i = k.half_x; i < g.nx - k.half_x; ++i) {
            CHECK(s(i, j) == doctest::Approx(mass).epsilon(1e-12));
        }
    }
    // near the edge part of the support is cut off
    CHECK(s(0, 0) < mass);
}

TEST_CASE("exhausted cells contribute nothing to the source") {
    const Grid g = small_grid(7, 0.1);
    const InteractionKernel k = build_dirac_kernel(0.25, 1.0, g);
    ScalarField u(g, 0.0);
    u(3, 3) = 10.0;
    ScalarField theta(g, 1.0);
    theta(3, 3) = kExhaustedTheta;
    CHECK(combustion_source(u, theta, k).values.abs().maxCoeff() == 0.0);
}

TEST_CASE("source matches the direct double-loop sum on random fields") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        const Grid g = small_grid(10, 0.1);
        const ScalarField u = oracle::random_field(rng, g, -0.5, 2.5, 0.0);
        ScalarField theta(g, 1.0);
        for (int j = 0; j < g.ny; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                const double p = oracle::rand_real(rng, 0.0, 1.0);
                theta(i, j) = p < 0.15 ? kExhaustedTheta
                                       : oracle::rand_real(rng, 0.2, 1.5);
            }
        }
        const double radius = oracle::rand_real(rng, 0.1, 0.35);
        const InteractionKernel k = build_dirac_kernel(radius, 1.3, g);
        const ScalarField got = combustion_source(u, theta, k);
        const ScalarField want = oracle::combustion_ref(u, theta, k);
        CHECK(oracle::max_abs_diff(got, want) <= 1e-12);
        CHECK(got.values.minCoeff() >= 0.0);
    }
}

TEST_CASE("source is monotone in u") {
    std::mt19937 rng(23);
    const Grid g = small_grid(9, 0.1);
    const ScalarField lo = oracle::random_field(rng, g, -0.5, 2.0, 0.0);
    ScalarField hi = lo;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            hi(i, j) += oracle::rand_real(rng, 0.0, 0.5);
        }
    }
    const ScalarField theta(g, 1.0);
    const InteractionKernel k = build_dirac_kernel(0.25, 1.0, g);
    const ScalarField s_lo = combustion_source(lo, theta, k);
    const ScalarField s_hi = combustion_source(hi, theta, k);
    CHECK((s_hi.values - s_lo.values).minCoeff() >= -1e-15);
}

TEST_CASE("source of a radially symmetric pattern is square-symmetric") {
    const Grid g = small_grid(11, 0.1);
    ScalarField u(g, 0.0);
    const double cx = g.x(5);
    const double cy = g.y(5);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double r = std::hypot(g.x(i) - cx, g.y(j) - cy);
            u(i, j) = 2.0 * std::max(0.0, 1.0 - r / 0.35);
        }
    }
    const ScalarField theta(g, 1.0);
    const InteractionKernel k = build_dirac_kernel(0.3, 1.0, g);
    const ScalarField s = combustion_source(u, theta, k);
    for (int t = 1; t < 8; ++t) {
        CHECK(oracle::max_abs_diff(oracle::d4_transform(s, t), s) <= 1e-13);
    }
}

TEST_CASE("source rejects a kernel built for another cell size") {
    const Grid g = small_grid(8, 0.1);
    const Grid other = small_grid(8, 0.05);
    const InteractionKernel k = build_dirac_kernel(0.2, 1.0, other);
    const ScalarField u(g, 2.0);
    const ScalarField theta(g, 1.0);
    CHECK_THROWS_AS(combustion_source(u, theta, k), GridMismatchError);
}

TEST_CASE("threaded source equals the serial one bit for bit") {
    std::mt19937 rng(24);
    const Grid g = small_grid(12, 0.08);
    const ScalarField u = oracle::random_field(rng, g, -0.5, 2.5, 0.0);
    const ScalarField theta(g, 0.9);
    const InteractionKernel k = build_dirac_kernel(0.25, 1.0, g);
    const ScalarField serial = combustion_source(u, theta, k, 1);
    const ScalarField threaded = combustion_source(u, theta, k, 4);
    CHECK(oracle::max_abs_diff(serial, threaded) == 0.0);
}
