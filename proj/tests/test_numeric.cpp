#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hbarlab/numeric.hpp"
#include "hbarlab/rng.hpp"

using namespace hbarlab;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<Complex> circle_samples(int n, int power) {
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * i / n;
        v[static_cast<std::size_t>(i)] = std::polar(1.0, power * t);
    }
    return v;
}
}  // namespace

TEST_CASE("winding number of the unit circle") {
    CHECK(winding_number(circle_samples(256, 1)) == 1);
}

TEST_CASE("winding number of a constant loop") {
    std::vector<Complex> v(64, Complex(1.0, 0.0));
    CHECK(winding_number(v) == 0);
}

TEST_CASE("winding number of the cubed circle map") {
    // oracle: the cube map advances the argument by exactly 3 * 2pi/1024 per
    // step, so the total unwrapped change is 3 full turns
    const auto vals = circle_samples(1024, 3);
    double oracle_turns = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i)
        oracle_turns += std::arg(vals[(i + 1) % vals.size()] / vals[i]) / (2.0 * kPi);
    CHECK(std::lround(oracle_turns) == 3);
    CHECK(winding_number(vals) == 3);
}

TEST_CASE("winding number error modes") {
    auto degenerate = circle_samples(64, 1);
    degenerate[10] = Complex(1e-14, 0.0);
    CHECK_THROWS_AS(winding_number(degenerate), DegenerateValue);

    // 4 samples of the cube map jump by 3/4 of a turn each step
    CHECK_THROWS_AS(winding_number(circle_samples(4, 3)), Undersampled);
}

TEST_CASE("winding number invariances") {
    Rng rng(7);
    auto vals = circle_samples(512, 2);
    // wobble the radius so the loop is not perfectly round
    for (auto& v : vals) v *= 1.0 + 0.3 * rng.uniform();
    const int w = winding_number(vals);
    CHECK(w == 2);

    for (int rot : {1, 17, 300}) {
        std::vector<Complex> rotated(vals.begin() + rot, vals.end());
        rotated.insert(rotated.end(), vals.begin(), vals.begin() + rot);
        CHECK(winding_number(rotated) == w);
    }

    const Complex c = std::polar(2.7, 1.1);
    auto scaled = vals;
    for (auto& v : scaled) v *= c;
    CHECK(winding_number(scaled) == w);
}

TEST_CASE("adaptive winding refines an undersampled loop") {
    // degree 40 is badly undersampled at the 64-sample floor
    const auto tr = winding_number_adaptive(
        [](double t) { return std::polar(1.0, 2.0 * kPi * 40.0 * t); }, 64);
    CHECK(tr.winding == 40);
    CHECK(tr.max_step < kPi / 2);
    CHECK(tr.residual < 0.1);
}

TEST_CASE("boundary line integral: disk of area one") {
    const double r = std::sqrt(1.0 / kPi);
    auto u = [&](double t) { return CVec{std::polar(r, 2.0 * kPi * t)}; };
    auto du = [&](double t) {
        return CVec{Complex(0.0, 2.0 * kPi) * std::polar(r, 2.0 * kPi * t)};
    };
    CHECK(boundary_line_integral(u, du) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("boundary line integral: constant loop") {
    auto u = [](double) { return CVec{Complex(0.3, -0.8)}; };
    auto du = [](double) { return CVec{Complex(0.0, 0.0)}; };
    CHECK(boundary_line_integral(u, du) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("boundary line integral: reparametrization and reversal") {
    // an ellipse-ish loop in C^2
    auto base = [](double t) {
        return CVec{std::polar(0.9, 2.0 * kPi * t), std::polar(0.4, -2.0 * kPi * 2.0 * t)};
    };
    auto dbase = [](double t) {
        return CVec{Complex(0, 2.0 * kPi) * std::polar(0.9, 2.0 * kPi * t),
                    Complex(0, -4.0 * kPi) * std::polar(0.4, -2.0 * kPi * 2.0 * t)};
    };
    const double ref = boundary_line_integral(base, dbase);

    Rng rng(3);
    for (int trial = 0; trial < 4; ++trial) {
        // monotone reparametrization t + sum c_j sin(2 pi j t) with small c_j
        double c1 = 0.05 * rng.uniform(), c2 = 0.03 * rng.uniform();
        auto phi = [=](double t) {
            return t + c1 * std::sin(2.0 * kPi * t) + c2 * std::sin(4.0 * kPi * t);
        };
        auto dphi = [=](double t) {
            return 1.0 + c1 * 2.0 * kPi * std::cos(2.0 * kPi * t) +
                   c2 * 4.0 * kPi * std::cos(4.0 * kPi * t);
        };
        auto u = [&](double t) { return base(phi(t)); };
        auto du = [&](double t) {
            CVec v = dbase(phi(t));
            v *= dphi(t);
            return v;
        };
        CHECK(boundary_line_integral(u, du) == doctest::Approx(ref).epsilon(1e-8));
    }

    auto rev = [&](double t) { return base(1.0 - t); };
    auto drev = [&](double t) {
        CVec v = dbase(1.0 - t);
        v *= -1.0;
        return v;
    };
    CHECK(boundary_line_integral(rev, drev) == doctest::Approx(-ref).epsilon(1e-9));
}

TEST_CASE("complex determinant basics") {
    CHECK(complex_det({CVec{1.0, 0.0}, CVec{0.0, 1.0}}) == Complex(1.0, 0.0));

    // scaling all columns by i multiplies by i^n
    Rng rng(11);
    std::vector<CVec> cols;
    for (int j = 0; j < 3; ++j) {
        CVec c(3);
        for (int i = 0; i < 3; ++i)
            c[static_cast<std::size_t>(i)] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        cols.push_back(c);
    }
    const Complex d = complex_det(cols);
    auto scaled = cols;
    for (auto& c : scaled)
        for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] *= Complex(0, 1);
    const Complex expect = Complex(0, 1) * Complex(0, 1) * Complex(0, 1) * d;
    CHECK(std::abs(complex_det(scaled) - expect) < 1e-12 * std::abs(expect));
}

TEST_CASE("determinant of the product-torus frame at (r, r)") {
    // columns (2 pi i r, 0), (0, 2 pi i r) with r = sqrt(1/pi):
    // hand expansion gives (2 pi i r)^2 = -4 pi^2 r^2 = -4 pi
    const double r = std::sqrt(1.0 / kPi);
    const Complex c(0.0, 2.0 * kPi * r);
    const Complex d = complex_det({CVec{c, 0.0}, CVec{0.0, c}});
    CHECK(std::abs(d - Complex(-4.0 * kPi, 0.0)) < 1e-12);
}

TEST_CASE("determinant is alternating and multilinear") {
    Rng rng(5);
    auto rand_col = [&](int n) {
        CVec c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            c[static_cast<std::size_t>(i)] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        return c;
    };
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 3;
        std::vector<CVec> cols = {rand_col(n), rand_col(n), rand_col(n)};
        const Complex d = complex_det(cols);

        auto swapped = cols;
        std::swap(swapped[0], swapped[2]);
        CHECK(std::abs(complex_det(swapped) + d) < 1e-12 * (1.0 + std::abs(d)));

        const Complex s(rng.uniform(-2, 2), rng.uniform(-2, 2));
        auto scaled = cols;
        for (int i = 0; i < n; ++i) scaled[1][static_cast<std::size_t>(i)] *= s;
        CHECK(std::abs(complex_det(scaled) - s * d) < 1e-12 * (1.0 + std::abs(s * d)));

        // additivity in one slot
        const CVec extra = rand_col(n);
        auto shifted = cols;
        for (int i = 0; i < n; ++i)
            shifted[1][static_cast<std::size_t>(i)] += extra[static_cast<std::size_t>(i)];
        auto other = cols;
        other[1] = extra;
        const Complex lhs = complex_det(shifted);
        const Complex rhs = d + complex_det(other);
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("quadrature reaches tight tolerance on an oscillatory integrand") {
    const double v = integrate([](double t) { return std::sin(20.0 * t) * std::exp(t); }, 0.0,
                               1.0, 1e-12);
    // antiderivative of e^t sin(20 t): e^t (sin(20t) - 20 cos(20t)) / 401
    const double exact = (std::exp(1.0) * (std::sin(20.0) - 20.0 * std::cos(20.0)) + 20.0) / 401.0;
    CHECK(v == doctest::Approx(exact).epsilon(1e-12));
}
