#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hbarlab/reduction.hpp"
#include "hbarlab/rng.hpp"

using namespace hbarlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("torus action basics") {
    const CVec z{Complex(1, 0), Complex(1, 0), Complex(1, 0)};
    const CVec id = torus_action(0.0, 0.0, z, 2);
    CHECK(distance(id, z) < 1e-15);

    // theta = (1/2, 0), k = 2: e^{2 pi i k theta_1} = e^{2 pi i} = 1
    const CVec w = torus_action(0.5, 0.0, z, 2);
    CHECK(std::abs(w[0] - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(w[1] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(w[2] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("nu_k is invariant under the action") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(rng.uniform_int(0, 3));
        CVec z(3);
        for (int i = 0; i < 3; ++i)
            z[static_cast<std::size_t>(i)] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const auto before = nu_k(z, k);
        const auto after = nu_k(torus_action(rng.uniform(), rng.uniform(), z, k), k);
        CHECK(std::abs(before[0] - after[0]) < 1e-12);
        CHECK(std::abs(before[1] - after[1]) < 1e-12);
    }
}

TEST_CASE("nu_k agrees with its defining algebra") {
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(rng.uniform_int(0, 5));
        CVec z(3);
        for (int i = 0; i < 3; ++i)
            z[static_cast<std::size_t>(i)] = Complex(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const auto m = moment_map(z);
        const auto nu = nu_k(z, k);
        CHECK(nu[0] == m[0] + k * m[2]);
        CHECK(nu[1] == m[1] - m[2]);
    }
}

TEST_CASE("section and reduction are inverse") {
    // direct substitution: w with |w| = 0.3, k = 2
    const LevelPoint p = section_g(Complex(0.3, 0.0), 2);
    CHECK(std::abs(p.point[0] - std::sqrt(1.0 - 2.0 * 0.09)) < 1e-15);
    CHECK(std::abs(p.point[1] - 0.3) < 1e-15);
    CHECK(std::abs(q_map(p) - Complex(0.3, 0.0)) < 1e-15);

    const LevelPoint p2 = section_g(Complex(0.3, 0.2), 2);
    CHECK(std::abs(p2.point[0] - std::sqrt(1.0 - 2.0 * 0.13)) < 1e-15);
    CHECK(std::abs(std::abs(p2.point[1]) - std::hypot(0.3, 0.2)) < 1e-15);
    // 1 = r1^2 + k r3^2 exactly
    CHECK(std::norm(p2.point[0]) + 2.0 * std::norm(p2.point[2]) == doctest::Approx(1.0).epsilon(1e-15));

    Rng rng(33);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 2 + static_cast<int>(rng.uniform_int(0, 3));
        const double m = rng.uniform(1e-4, 0.999) * kPi / k;
        const Complex w = std::polar(std::sqrt(m / kPi), 2.0 * kPi * rng.uniform());
        CHECK(std::abs(q_map(section_g(w, k)) - w) < 1e-12);
    }
}

TEST_CASE("q is constant on orbits") {
    Rng rng(44);
    const LevelPoint p = section_g(Complex(0.25, -0.33), 2);
    const Complex q0 = q_map(p);
    for (int trial = 0; trial < 100; ++trial) {
        const CVec moved = torus_action(rng.uniform(), rng.uniform(), p.point, 2);
        CHECK(std::abs(q_map_extended(moved, 2) - q0) < 1e-12);
    }
}

TEST_CASE("q approaches the reduced disk boundary as r3 grows") {
    const int k = 2;
    // r3 -> sqrt(1/(2k)) is the constraint limit 1 = r1^2 + k r3^2 with r1 -> ...
    const double r3_max = std::sqrt(1.0 / k);  // modulus bound of the disk B*(pi/k)
    const double m = 0.999999 * kPi / k;
    const Complex w = std::sqrt(m / kPi);
    const LevelPoint p = section_g(w, k);
    CHECK(std::abs(q_map(p)) > 0.999 * r3_max);
    CHECK(kPi * std::norm(q_map(p)) < kPi / k);
}

TEST_CASE("level point membership") {
    const LevelPoint good = section_g(Complex(0.2, 0.1), 3);
    CHECK(good.on_Z);
    CVec off = good.point;
    off[1] *= 1.001;  // breaks r2 = r3
    CHECK_FALSE(make_level_point(off, 3).on_Z);
    CHECK_THROWS_AS(q_map(make_level_point(off, 3)), NotOnLevelSet);
    CHECK_THROWS_AS(section_g(Complex(0.0, 0.0), 2), OutOfDisk);
    CHECK_THROWS_AS(section_g(Complex(1.0, 0.0), 2), OutOfDisk);
}

TEST_CASE("reduced form identity holds and rejects the doubled form") {
    for (int k : {2, 3, 4, 5}) {
        const auto rep = verify_reduced_form(k, 200, 0);
        CHECK(rep.max_defect < 1e-6);
        CHECK(rep.control_defect > 0.1);
    }
}

TEST_CASE("orbit directions are isotropic and killed by dq") {
    // tangent pairs along the T^2 orbit: both sides of the identity vanish
    const int k = 2;
    const LevelPoint p = section_g(Complex(0.3, 0.1), k);
    const double h = 1e-6;
    // orbit directions via the action derivative
    const CVec d1 = (1.0 / (2 * h)) *
                    (torus_action(h, 0.0, p.point, k) - torus_action(-h, 0.0, p.point, k));
    const CVec d2 = (1.0 / (2 * h)) *
                    (torus_action(0.0, h, p.point, k) - torus_action(0.0, -h, p.point, k));
    CHECK(std::abs(omega_std(d1, d2)) < 1e-9);
    const Complex dq1 =
        (q_map_extended(p.point + h * d1, k) - q_map_extended(p.point - h * d1, k)) / (2.0 * h);
    const Complex dq2 =
        (q_map_extended(p.point + h * d2, k) - q_map_extended(p.point - h * d2, k)) / (2.0 * h);
    CHECK(std::abs(dq1) < 1e-8);
    CHECK(std::abs(dq2) < 1e-8);
}

TEST_CASE("lift_curve wraps the curve into the k-family torus") {
    const CurveSpec curve = make_keyhole(kPi / 3.0, 0.5 * (kPi / 3.0 + kPi / 2.0));
    const TorusSpec spec = lift_curve(curve, 2);
    CHECK(lagrangian_residual(spec, 10) < 1e-8);
    CHECK(lift_consistency(curve, 2, 6) < 1e-10);
    const auto fibers = check_fibers(spec, 6);
    CHECK(fibers.max_curve_dist < 1e-9);
    CHECK(fibers.max_level_residual < 1e-10);
}

TEST_CASE("lift_curve rejects oversized curves") {
    const CurveSpec big = make_keyhole(kPi / 2.0, kPi / 2.0 + 0.4);
    CHECK_THROWS_AS(lift_curve(big, 2), CurveTooLarge);
}
