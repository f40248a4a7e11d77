#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hbarlab/reduction.hpp"
#include "hbarlab/rng.hpp"
#include "hbarlab/tori.hpp"

using namespace hbarlab;

namespace {
constexpr double kPi = std::numbers::pi;

CurveSpec brendel_curve(int k, double a) {
    const double container = 0.5 * (a + kPi / k);
    return make_keyhole(a, container);
}
}  // namespace

TEST_CASE("product torus parametrization") {
    const auto spec = TorusSpec::product({1.0, 1.0});
    const double th[2] = {0.0, 0.0};
    const CVec p = spec.parametrize(std::span<const double>(th, 2), 0.0);
    const double r = std::sqrt(1.0 / kPi);
    CHECK(std::abs(p[0] - Complex(r, 0.0)) < 1e-15);
    CHECK(std::abs(p[1] - Complex(r, 0.0)) < 1e-15);
}

TEST_CASE("brendel parametrization by direct substitution") {
    // z = 0.3 on the curve, theta = (0, 0), k = 2:
    // (sqrt(1 - 2*0.09), 0.3, 0.3)
    const CurveSpec curve = brendel_curve(2, kPi / 3.0);
    const auto spec = TorusSpec::brendel(2, curve);
    // find a parameter with the curve point closest to 0.3 on the real axis:
    // instead check the formula itself at whatever z the curve provides
    const double th[2] = {0.0, 0.0};
    for (double t : {0.0, 0.25, 0.5, 0.75}) {
        const Complex z = curve.point(t);
        const CVec p = spec.parametrize(std::span<const double>(th, 2), t);
        CHECK(std::abs(p[0] - std::sqrt(1.0 - 2.0 * std::norm(z))) < 1e-14);
        CHECK(std::abs(p[1] - std::abs(z)) < 1e-14);
        CHECK(std::abs(p[2] - z) < 1e-14);
    }
}

TEST_CASE("chekanov phase constraint: angles sum to one") {
    const CurveSpec curve = make_keyhole(0.8, kPi / 2.0);
    const auto spec = TorusSpec::chekanov_cn(2, curve);
    const double th[1] = {0.0};  // theta_1 = 0 forces theta_2 = 1
    for (double t : {0.1, 0.6}) {
        const Complex z = curve.point(t);
        const CVec p = spec.parametrize(std::span<const double>(th, 1), t);
        CHECK(std::abs(p[0] - std::abs(z)) < 1e-14);
        CHECK(std::abs(p[1] - z) < 1e-14);
    }
}

TEST_CASE("analytic tangents match finite differences") {
    const CurveSpec curve = brendel_curve(2, 1.2);
    const auto spec = TorusSpec::brendel(2, curve);
    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        double params[3] = {rng.uniform(), rng.uniform(), rng.uniform(0.01, 0.99)};
        const auto frame =
            spec.tangents(std::span<const double>(params, 2), params[2]);
        const double h = 1e-6;
        for (int i = 0; i < 3; ++i) {
            double up[3] = {params[0], params[1], params[2]};
            double dn[3] = {params[0], params[1], params[2]};
            up[i] += h;
            dn[i] -= h;
            const CVec pu = spec.parametrize(std::span<const double>(up, 2), up[2]);
            const CVec pd = spec.parametrize(std::span<const double>(dn, 2), dn[2]);
            const CVec fd = (1.0 / (2.0 * h)) * (pu - pd);
            CHECK(distance(fd, frame[static_cast<std::size_t>(i)]) < 1e-6);
        }
    }
}

TEST_CASE("darboux chart basics") {
    const CVec origin(2);
    const CVec w0 = darboux_chart(origin, 0);
    CHECK(std::abs(w0[0] - 1.0) < 1e-15);
    CHECK(std::abs(w0[1]) < 1e-15);
    CHECK(std::abs(w0[2]) < 1e-15);

    // Pythagoras: zeta = (0.6, 0), slot 1 -> [0.6 : 0.8 : 0]
    const CVec z{Complex(0.6, 0.0), Complex(0.0, 0.0)};
    const CVec w = darboux_chart(z, 1);
    CHECK(std::abs(w[0] - 0.6) < 1e-15);
    CHECK(std::abs(w[1] - 0.8) < 1e-15);
    CHECK(std::abs(w[2]) < 1e-15);
    CHECK(std::abs(w.norm() - 1.0) < 1e-14);

    CHECK_THROWS_AS(darboux_chart(CVec{Complex(1.2, 0.0), Complex(0.0, 0.0)}, 0), OutOfChart);
}

TEST_CASE("chart pulls the Fubini-Study form back to omega_std") {
    // finite-difference pullback oracle at random interior points
    Rng rng(123);
    const int slot = 1;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        CVec zeta(2);
        do {
            for (int i = 0; i < 2; ++i)
                zeta[static_cast<std::size_t>(i)] =
                    Complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        } while (zeta.norm_sq() > 0.8);

        auto affine = [&](const CVec& z) { return dehomogenize(darboux_chart(z, slot), slot); };
        const CVec u = affine(zeta);

        // real coordinate directions of C^2
        const double h = 1e-5;
        std::vector<CVec> push;
        for (int dir = 0; dir < 4; ++dir) {
            CVec zp = zeta, zm = zeta;
            const Complex step = (dir % 2 == 0) ? Complex(h, 0.0) : Complex(0.0, h);
            zp[static_cast<std::size_t>(dir / 2)] += step;
            zm[static_cast<std::size_t>(dir / 2)] -= step;
            push.push_back((1.0 / (2.0 * h)) * (affine(zp) - affine(zm)));
        }
        auto e = [&](int dir) {
            CVec v(2);
            v[static_cast<std::size_t>(dir / 2)] = (dir % 2 == 0) ? 1.0 : Complex(0.0, 1.0);
            return v;
        };
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                const double fs = fubini_study_form(u, push[static_cast<std::size_t>(i)],
                                                    push[static_cast<std::size_t>(j)]);
                const double std_form = omega_std(e(i), e(j));
                worst = std::max(worst, std::abs(fs - std_form));
            }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("lagrangian residuals of the four families") {
    CHECK(lagrangian_residual(TorusSpec::product({1.0, 2.0}), 12) < 1e-10);

    const CurveSpec ch = make_keyhole(0.8, kPi / 2.0);
    CHECK(lagrangian_residual(TorusSpec::chekanov_cn(2, ch), 12) < 1e-8);

    const CurveSpec chp = make_keyhole(0.9, 0.95);
    CHECK(lagrangian_residual(TorusSpec::chekanov_cpn(2, chp, 1), 12) < 1e-8);

    const CurveSpec br = brendel_curve(2, kPi / 3.0);
    const auto upsilon = TorusSpec::brendel(2, br);
    CHECK(lagrangian_residual(upsilon, 12) < 1e-8);

    // deliberately broken control: scale the third coordinate
    CHECK(lagrangian_residual(upsilon, 12, 1.01) > 1e-3);
}

TEST_CASE("chekanov images satisfy the polydisk confinement") {
    const CurveSpec ch = make_keyhole(0.8, kPi / 2.0);
    const auto spec = TorusSpec::chekanov_cn(2, ch);
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const double th[1] = {rng.uniform()};
        const CVec p = spec.parametrize(std::span<const double>(th, 1), rng.uniform());
        for (int j = 0; j < 2; ++j)
            CHECK(kPi * std::norm(p[static_cast<std::size_t>(j)]) < ch.container_area());
    }
}

TEST_CASE("brendel images sit on the nu_k level set") {
    const auto spec = TorusSpec::brendel(2, brendel_curve(2, 1.2));
    const auto fibers = check_fibers(spec, 8);
    CHECK(fibers.max_level_residual < 1e-10);
    CHECK(fibers.max_curve_dist < 1e-9);
}

TEST_CASE("parametrizations are embeddings on a coarse grid") {
    CHECK(embedding_min_separation(TorusSpec::product({1.0, 2.0}), 8) > 1e-9);
    CHECK(embedding_min_separation(TorusSpec::brendel(2, brendel_curve(2, 1.2)), 6) > 1e-9);
    const CurveSpec chp = make_keyhole(0.9, 0.95);
    CHECK(embedding_min_separation(TorusSpec::chekanov_cpn(2, chp, 1), 6) > 1e-9);
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(TorusSpec::product({1.0, -1.0}), ParameterOutOfRange);
    CHECK_THROWS_AS(TorusSpec::brendel(2, make_keyhole(0.9, 1.0)), ParameterOutOfRange);
    // container pi/2 is too big for k = 3 (limit pi/3)
    CHECK_THROWS_AS(TorusSpec::brendel(3, make_keyhole(0.9, kPi / 2.0)), CurveTooLarge);
    CHECK_THROWS_AS(TorusSpec::chekanov_cn(2, make_keyhole(1.0, 3.0)), ParameterOutOfRange);
}
