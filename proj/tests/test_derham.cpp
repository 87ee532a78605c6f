#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qfrob/derham.hpp"

using namespace qfrob;

namespace {

struct Setup {
    Profile phi;
    Profile F;
};

Setup setup(double eps, int div, BumpShape shape = BumpShape::mollifier) {
    const Grid1D g = Grid1D::for_epsilon(eps, div);
    Profile phi = bump_profile(eps, g, shape);
    Profile F = primitive(phi);
    return {std::move(phi), std::move(F)};
}

}  // namespace

TEST_SUITE("derham") {
    TEST_CASE("grid") {
        const Grid1D g = Grid1D::for_epsilon(0.1, 200);
        CHECK(g.half_width() >= 0.3 - 1e-12);
        CHECK(g.step() == doctest::Approx(0.0005));
        CHECK(g.samples() == 1201);
        CHECK(g.x(600) == 0.0);
        CHECK_THROWS_AS(Grid1D(0.0, 3), std::invalid_argument);
        CHECK_THROWS_AS(Grid1D::for_epsilon(-1.0, 200), std::invalid_argument);
    }

    TEST_CASE("bump profile") {
        const auto s = setup(0.1, 200);
        const auto& v = s.phi.values;
        const double h = s.phi.grid.step();
        double total = 0.0;
        for (double x : v) total += x;
        CHECK(std::abs(total * h - 1.0) < 1e-12);
        CHECK(s.phi(0.1) == 0.0);
        CHECK(s.phi(-0.1) == 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            REQUIRE(v[i] >= 0.0);
            REQUIRE(v[i] == doctest::Approx(v[v.size() - 1 - i]).epsilon(1e-15));
        }
        CHECK_THROWS_AS(bump_profile(0.1, Grid1D::for_epsilon(0.1, 100)), std::invalid_argument);
        CHECK_THROWS_AS(bump_profile(0.1, Grid1D(0.0005, 100)), std::invalid_argument);
        CHECK_THROWS_AS(bump_profile(0.0, Grid1D::for_epsilon(0.1, 200)), std::invalid_argument);
    }

    TEST_CASE("primitive") {
        const auto s = setup(0.1, 200);
        CHECK(std::abs(s.F.values.back() - 1.0) < 1e-12);
        CHECK(s.F.values.front() == 0.0);
        CHECK(std::abs(s.F(0.0) - 0.5) < 1e-10);
        for (std::size_t i = 1; i < s.F.values.size(); ++i) REQUIRE(s.F.values[i] >= s.F.values[i - 1]);
        // F - Θ is supported in (-ε, ε)
        for (int i = 0; i < s.F.grid.samples(); ++i) {
            const double x = s.F.grid.x(i);
            if (x <= -0.1) REQUIRE(std::abs(s.F.values[static_cast<std::size_t>(i)]) < 1e-12);
            if (x >= 0.1) REQUIRE(std::abs(s.F.values[static_cast<std::size_t>(i)] - 1.0) < 1e-12);
        }
        // the off-grid evaluation agrees with the grid samples
        CHECK(s.F(s.F.grid.x(700)) == doctest::Approx(s.F.values[700]).epsilon(1e-14));
    }

    TEST_CASE("moments") {
        const auto s = setup(0.1, 200);
        const auto m = moment_checks(s.phi, s.F);
        CHECK(std::abs(m.m1 - 0.5) < 1e-8);
        CHECK(std::abs(m.m2 - 1.0 / 3.0) < 1e-8);
        const Profile phi2 = scaled(s.phi, 2.0);
        const Profile F2 = primitive(phi2);
        CHECK(std::abs(moment_checks(phi2, F2).m1 - 2.0) < 1e-8);
    }

    TEST_CASE("u integrals") {
        const auto s = setup(0.1, 200);
        const auto u0 = u_integrals(0.0, s.phi, s.F);
        CHECK(std::abs(u0.a - 1.0) < 1e-8);
        CHECK(std::abs(u0.b + 0.5) < 1e-8);
        for (double y : {-0.09, -0.031, 0.0, 0.0457, 0.08}) {
            const auto u = u_integrals(y, s.phi, s.F);
            CHECK(std::abs(u.a - 1.0) < 1e-8);
            CHECK(std::abs(u.c + (1.0 - s.F(y))) < 1e-8);
        }
        CHECK_THROWS_AS(u_integrals(0.1, s.phi, s.F), std::invalid_argument);
    }

    TEST_CASE("mu integrals, both paths, two shapes, three widths") {
        for (auto shape : {BumpShape::mollifier, BumpShape::steep})
            for (double eps : {0.05, 0.1, 0.2}) {
                CAPTURE(eps);
                const auto s = setup(eps, 200, shape);
                const auto mu = mu_total_and_halfplane(s.phi, s.F);
                CHECK(std::abs(mu.total) < 1e-6);
                CHECK(std::abs(mu.half + 1.0 / 12.0) < 1e-6);
                const auto d = mu_direct(s.phi, s.F);
                CHECK(std::abs(d.half + 1.0 / 12.0) < 1e-4);
                CHECK(std::abs(d.full) < 1e-4);
                CHECK(std::abs(d.half - mu.half) < 1e-4);
                CHECK(mu_direct_halfplane(s.phi, s.F) == d.half);
            }
    }

    TEST_CASE("values are stable under halving the step") {
        const auto coarse = setup(0.1, 200);
        const auto fine = setup(0.1, 400);
        const auto a = mu_total_and_halfplane(coarse.phi, coarse.F);
        const auto b = mu_total_and_halfplane(fine.phi, fine.F);
        CHECK(std::abs(a.half - b.half) < 1e-8);
        CHECK(std::abs(a.total - b.total) < 1e-8);
        const double da = mu_direct(coarse.phi, coarse.F).half;
        const double db = mu_direct(fine.phi, fine.F).half;
        CHECK(std::abs(da - db) < 1e-5);
        // the direct path converges toward -1/12
        CHECK(std::abs(db + 1.0 / 12.0) < std::abs(da + 1.0 / 12.0));
    }

    TEST_CASE("shape independence") {
        const auto a = setup(0.1, 200, BumpShape::mollifier);
        const auto b = setup(0.1, 200, BumpShape::steep);
        const auto ma = mu_total_and_halfplane(a.phi, a.F);
        const auto mb = mu_total_and_halfplane(b.phi, b.F);
        CHECK(std::abs(ma.half - mb.half) < 1e-5);
        CHECK(std::abs(ma.total - mb.total) < 1e-5);
    }
}
