#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hbarlab/errors.hpp"
#include "hbarlab/lattice.hpp"
#include "hbarlab/rng.hpp"

using namespace hbarlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pi-value parsing and arithmetic") {
    CHECK(PiValue::parse("pi/3").pi_coeff() == Rational(1, 3));
    CHECK(PiValue::parse("2pi/5").pi_coeff() == Rational(2, 5));
    CHECK(PiValue::parse("-pi/4").pi_coeff() == Rational(-1, 4));
    CHECK(PiValue::parse("pi").pi_coeff() == Rational(1));
    CHECK(PiValue::parse("0.9").to_double() == doctest::Approx(0.9));
    CHECK_FALSE(PiValue::parse("0.9").exact());

    const PiValue a = PiValue::pi_fraction(1, 3);
    CHECK((a * 3) == PiValue::pi_fraction(1, 1));
    CHECK((PiValue::pi_fraction(1, 1) - a * 2).pi_coeff() == Rational(1, 3));
    CHECK(a.to_double() == doctest::Approx(kPi / 3).epsilon(1e-15));
    // mixing demotes to decimal
    CHECK_FALSE((a + PiValue::decimal(0.1)).exact());
}

TEST_CASE("class functionals on the generator basis") {
    const int k = 3;
    const RelClass alpha{1, 0, 0, k}, beta1{0, 1, 0, k}, beta2{0, 0, 1, k};
    CHECK(alpha.maslov() == 2);
    CHECK(beta1.maslov() == 2 * k + 2);
    CHECK(beta2.maslov() == 0);
    CHECK(alpha.plane13() == 0);
    CHECK(beta1.plane13() == 0);
    CHECK(beta2.plane13() == 1);
    CHECK(alpha.plane12() == 0);
    CHECK(beta1.plane12() == k);
    CHECK(beta2.plane12() == -1);
    CHECK(alpha.sigma_f() == 1);
    CHECK(beta1.sigma_f() == k);
    CHECK(beta2.sigma_f() == 0);
    const PiValue a = PiValue::pi_fraction(1, 4);
    CHECK(alpha.area(a) == a);
    CHECK(beta1.area(a) == PiValue::pi_fraction(1, 1));
    CHECK(beta2.area(a) == PiValue::pi_fraction(0, 1));
}

TEST_CASE("functionals are additive and Z-homogeneous") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 2 + static_cast<int>(rng.uniform_int(0, 5));
        const RelClass x{rng.uniform_int(-9, 9), rng.uniform_int(-9, 9), rng.uniform_int(-9, 9), k};
        const RelClass y{rng.uniform_int(-9, 9), rng.uniform_int(-9, 9), rng.uniform_int(-9, 9), k};
        const long long c = rng.uniform_int(-4, 4);
        const RelClass sum{x.p + c * y.p, x.q + c * y.q, x.r + c * y.r, k};
        CHECK(sum.maslov() == x.maslov() + c * y.maslov());
        CHECK(sum.plane13() == x.plane13() + c * y.plane13());
        CHECK(sum.plane12() == x.plane12() + c * y.plane12());
        CHECK(sum.sigma_f() == x.sigma_f() + c * y.sigma_f());
        const PiValue a = PiValue::pi_fraction(1, k + 1);
        CHECK(sum.area(a) == x.area(a) + y.area(a) * c);
    }
}

TEST_CASE("maslov-2 enumeration: explicit members and counts") {
    const auto classes2 = enumerate_maslov2(2);
    REQUIRE(classes2.size() == 4);
    // lexicographic by (p, q, r): beta1 - 2 alpha + r beta2, then alpha
    CHECK(classes2[0] == RelClass{-2, 1, 0, 2});
    CHECK(classes2[1] == RelClass{-2, 1, 1, 2});
    CHECK(classes2[2] == RelClass{-2, 1, 2, 2});
    CHECK(classes2[3] == RelClass{1, 0, 0, 2});

    CHECK(enumerate_maslov2(3).size() == 5);
    for (int k = 2; k <= 8; ++k)
        CHECK(enumerate_maslov2(k).size() == static_cast<std::size_t>(k) + 2);
}

TEST_CASE("maslov-2 enumeration agrees with exhaustive box search") {
    for (int k = 2; k <= 8; ++k) {
        std::vector<RelClass> brute;
        for (long long p = -50; p <= 50; ++p)
            for (long long q = -50; q <= 50; ++q)
                for (long long r = -50; r <= 50; ++r) {
                    const RelClass c{p, q, r, k};
                    if (c.maslov() == 2 && c.plane13() >= 0 && c.plane12() >= 0 &&
                        c.sigma_f() >= 0)
                        brute.push_back(c);
                }
        std::sort(brute.begin(), brute.end(), [](const RelClass& a, const RelClass& b) {
            return std::tie(a.p, a.q, a.r) < std::tie(b.p, b.q, b.r);
        });
        CHECK(brute == enumerate_maslov2(k));
    }
}

TEST_CASE("minimal disk area: closed form vs lattice search") {
    CHECK(hbar_upsilon(2, PiValue::pi_fraction(1, 3)) == PiValue::pi_fraction(1, 3));
    CHECK(hbar_upsilon(2, PiValue::decimal(1.2)).to_double() ==
          doctest::Approx(kPi - 2.4).epsilon(1e-15));

    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(rng.uniform_int(0, 6));
        PiValue a;
        if (trial % 2 == 0) {
            // exact rational multiple of pi inside [1/(k+1), 1/k)
            const long long den = 3 + rng.uniform_int(0, 17);
            long long num = 1;
            for (num = 1; num * (k + 1) < den; ++num) {
            }
            if (!(Rational(num, den) < Rational(1, k))) {
                a = PiValue::pi_fraction(1, k + 1);
            } else {
                a = PiValue::pi_fraction(num, den);
            }
            const auto search = hbar_upsilon_search(k, a);
            CHECK(hbar_upsilon(k, a) == search.min_area);  // exact equality
        } else {
            const double v = kPi / (k + 1) + rng.uniform() * (kPi / k - kPi / (k + 1)) * 0.999;
            a = PiValue::decimal(v);
            const auto search = hbar_upsilon_search(k, a);
            CHECK(std::abs(hbar_upsilon(k, a).to_double() - search.min_area.to_double()) < 1e-12);
        }
    }
}

TEST_CASE("search minimizer off the monotone point is the inverted class") {
    const auto s = hbar_upsilon_search(2, PiValue::decimal(1.2));
    // l = m = 1: the class beta1 - k alpha (+ any multiple of beta2)
    CHECK(s.l == 1);
    CHECK(s.m == 1);
    CHECK(s.box_note.find("box l <= 12") != std::string::npos);
    CHECK_THROWS_AS(hbar_upsilon(2, PiValue::decimal(0.9)), ParameterOutOfRange);
}

TEST_CASE("product torus invariants") {
    const auto rep = invariants_product(
        {PiValue::decimal(1.0), PiValue::decimal(2.0), PiValue::decimal(3.0)});
    CHECK(rep.hbar.to_double() == 1.0);
    CHECK(rep.e_lower.to_double() == 1.0);
    CHECK(rep.e_upper.to_double() == 1.0);
    CHECK_FALSE(rep.monotone);
    CHECK(rep.consistent());

    CHECK(invariants_product({PiValue::decimal(5.0)}).hbar.to_double() == 5.0);

    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PiValue> areas;
        for (int i = 0; i < 4; ++i) areas.push_back(PiValue::decimal(rng.uniform(0.1, 3.0)));
        const auto r1 = invariants_product(areas);
        std::swap(areas[0], areas[3]);
        std::swap(areas[1], areas[2]);
        const auto r2 = invariants_product(areas);
        CHECK(r1.hbar == r2.hbar);
    }
}

TEST_CASE("projective chekanov invariants") {
    const auto rep = invariants_chekanov_cpn(2, PiValue::decimal(0.9));
    CHECK(rep.hbar.to_double() == 0.9);
    CHECK(rep.e_upper.to_double() == 0.9);
    CHECK(rep.e_upper_finite);
    CHECK(rep.consistent());
    bool found_chain = false;
    for (const auto& c : rep.certificates)
        if (c.find("chart persistence min{0.9, pi/3}") != std::string::npos) found_chain = true;
    CHECK(found_chain);

    const auto mono = invariants_chekanov_cpn(2, PiValue::pi_fraction(1, 3));
    CHECK_FALSE(mono.e_upper_finite);
    CHECK_FALSE(mono.hbar_computed);
    CHECK(mono.monotone);
    CHECK(mono.consistent());

    CHECK_THROWS_AS(invariants_chekanov_cpn(2, PiValue::pi_fraction(1, 2)), ParameterOutOfRange);
}

TEST_CASE("k-family invariants") {
    const auto mono = invariants_upsilon(3, PiValue::pi_fraction(1, 4));
    CHECK(mono.monotone);
    CHECK(mono.hbar == PiValue::pi_fraction(1, 4));
    CHECK(mono.e_lower == PiValue::pi_fraction(1, 4));
    CHECK(mono.e_upper == PiValue::pi_fraction(1, 4));

    const auto rep = invariants_upsilon(2, PiValue::decimal(1.3));
    CHECK(rep.hbar.to_double() == doctest::Approx(kPi - 2.6).epsilon(1e-15));
    CHECK(rep.e_lower.to_double() == doctest::Approx(kPi - 2.6).epsilon(1e-15));
    CHECK(rep.e_upper.to_double() == 1.3);
    CHECK_FALSE(rep.monotone);
    CHECK(rep.consistent());

    // monotone collapse is exact for every k
    for (int k = 2; k <= 8; ++k) {
        const auto m = invariants_upsilon(k, PiValue::pi_fraction(1, k + 1));
        CHECK(m.monotone);
        CHECK(m.hbar == PiValue::pi_fraction(1, k + 1));
        CHECK(m.e_lower == m.hbar);
        CHECK(m.e_upper == m.hbar);
    }
}

TEST_CASE("monotonicity is the unique solvable case of the proportionality system") {
    // 2 kappa = a and 2 kappa (k+1) = pi solvable exactly when a = pi/(k+1)
    for (int k = 2; k <= 6; ++k) {
        const Rational kappa(1, 2 * (k + 1));  // from the second equation
        CHECK(Rational(2) * kappa == Rational(1, k + 1));
        CHECK(invariants_upsilon(k, PiValue::pi_fraction(1, k + 1)).monotone);
        // midpoint of the parameter window is never monotone
        CHECK_FALSE(
            invariants_upsilon(k, PiValue::pi_fraction(2 * k + 1, 2 * k * (k + 1))).monotone);
    }
}

TEST_CASE("standard-torus criterion is strict") {
    const std::vector<PiValue> areas = {PiValue::decimal(1.0), PiValue::decimal(1.0)};
    CHECK(check_property_cs(areas, PiValue::decimal(4.0), std::nullopt));
    CHECK_FALSE(check_property_cs(areas, PiValue::decimal(3.0), std::nullopt));
    CHECK_FALSE(check_property_cs(areas, PiValue::decimal(4.0),
                                  std::optional<PiValue>(PiValue::decimal(1.0))));
    CHECK(check_property_cs(areas, PiValue::decimal(4.0),
                            std::optional<PiValue>(PiValue::decimal(1.5))));
}

TEST_CASE("toric fibers of the two-sphere product") {
    // the distinguished example fiber
    const auto ex = fooo_example_report(1.0, 0.25);
    CHECK(ex.hbar.to_double() == 1.0);
    CHECK(ex.e_lower.to_double() == 1.25);
    CHECK(ex.e_upper.to_double() == 1.25);
    CHECK(ex.consistent());

    // the same fiber through the grid formula: finite cited lower bound,
    // heuristic infinite upper bound
    const auto seg = fooo_fiber(1.0, 0.0, 0.75);
    CHECK(seg.hbar.to_double() == 1.0);
    CHECK(seg.e_lower.to_double() == 1.25);
    CHECK_FALSE(seg.e_upper_finite);
    CHECK(seg.consistent());

    const auto mid = fooo_fiber(1.0, 0.0, 0.5);
    CHECK_FALSE(mid.e_upper_finite);

    const auto off = fooo_fiber(1.0, 0.3, 0.0);
    CHECK(off.hbar.to_double() == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(off.e_upper.to_double() == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(off.e_lower == off.e_upper);

    CHECK_THROWS_AS(fooo_fiber(1.0, 1.5, 0.0), OutOfPolytope);
}

TEST_CASE("fiber oracle: factor-wise candidate enumeration off the segment") {
    Rng rng(11);
    const double a = 1.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double x1 = rng.uniform(-a, a);
        const double x2 = rng.uniform(-2 * a, 2 * a);
        if (x1 == 0.0) continue;
        const auto rep = fooo_fiber(a, x1, x2);
        // oracle: min over factor caps {a +- x1, 2a +- x2} and spheres {2a, 4a}
        const double hbar_oracle = std::min(
            {a - std::abs(x1), a + std::abs(x1), 2 * a - std::abs(x2), 2 * a + std::abs(x2),
             2 * a, 4 * a});
        const double e_oracle = std::min(a - std::abs(x1), 2 * a - std::abs(x2));
        CHECK(rep.hbar.to_double() == doctest::Approx(hbar_oracle).epsilon(1e-15));
        CHECK(rep.e_upper.to_double() == doctest::Approx(e_oracle).epsilon(1e-15));
        CHECK(rep.e_upper == rep.e_lower);
        CHECK(rep.hbar == rep.e_upper);  // e = hbar off the segment
    }
}

TEST_CASE("grid scan: discontinuity set is exactly the closed middle segment") {
    const double a = 1.0;
    const int m = 20;  // 41 nodes per axis
    int flagged = 0, expected = 0;
    for (int i = -m; i <= m; ++i)
        for (int j = -2 * m; j <= 2 * m; j += 2) {
            const double x1 = a * i / m;
            const double x2 = 2.0 * a * j / (2 * m);
            const auto rep = fooo_fiber(a, x1, x2);
            const bool discontinuous =
                !rep.e_upper_finite || !(rep.e_upper == rep.hbar);
            const bool on_segment = i == 0 && std::abs(x2) <= a;
            if (discontinuous) ++flagged;
            if (on_segment) ++expected;
            CHECK(discontinuous == on_segment);
            if (i != 0) CHECK(rep.e_upper == rep.hbar);
        }
    CHECK(flagged == expected);
    CHECK(expected == 21);  // x2 in {-1, -0.9, ..., 1}
}

TEST_CASE("limit of product-torus invariants recovers the k-family value") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 2 + static_cast<int>(rng.uniform_int(0, 5));
        const double a = kPi / (k + 1) + rng.uniform() * (kPi / k - kPi / (k + 1)) * 0.99;
        const double target = kPi - k * a;
        for (double t : {1e-3, 1e-6, 1e-9}) {
            const auto rep = invariants_product({PiValue::decimal(target),
                                                 PiValue::decimal(a + t), PiValue::decimal(a)});
            CHECK(rep.hbar.to_double() == doctest::Approx(target).epsilon(1e-15));
        }
        CHECK(std::abs(hbar_upsilon(k, PiValue::decimal(a)).to_double() - target) < 1e-15);
    }
}

TEST_CASE("classification by parameters") {
    const auto c1 = classify_upsilon(2, PiValue::decimal(1.1), 2, PiValue::decimal(1.2));
    CHECK(c1.distinct);
    CHECK(c1.certificate.find("minimal disk area differs") != std::string::npos);

    const auto c2 = classify_upsilon(2, PiValue::decimal(1.1), 3, PiValue::decimal(0.9));
    CHECK(c2.distinct);
    CHECK(c2.certificate.find("cited") != std::string::npos);

    const auto c3 = classify_upsilon(2, PiValue::decimal(1.1), 2, PiValue::decimal(1.1));
    CHECK_FALSE(c3.distinct);

    // symmetric on random pairs
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int k1 = 2 + static_cast<int>(rng.uniform_int(0, 3));
        const int k2 = 2 + static_cast<int>(rng.uniform_int(0, 3));
        const double a1 = kPi / (k1 + 1) + rng.uniform() * (kPi / k1 - kPi / (k1 + 1)) * 0.99;
        const double a2 = kPi / (k2 + 1) + rng.uniform() * (kPi / k2 - kPi / (k2 + 1)) * 0.99;
        const auto ab = classify_upsilon(k1, PiValue::decimal(a1), k2, PiValue::decimal(a2));
        const auto ba = classify_upsilon(k2, PiValue::decimal(a2), k1, PiValue::decimal(a1));
        CHECK(ab.distinct == ba.distinct);
        CHECK(ab.distinct == ((k1 != k2) || (a1 != a2)));
    }
}

TEST_CASE("every report satisfies the sandwich inequalities") {
    std::vector<InvariantReport> reports;
    reports.push_back(invariants_product({PiValue::decimal(1.0), PiValue::decimal(2.0)}));
    reports.push_back(invariants_chekanov_cpn(2, PiValue::decimal(0.9)));
    reports.push_back(invariants_chekanov_cpn(2, PiValue::pi_fraction(1, 3)));
    reports.push_back(invariants_upsilon(2, PiValue::decimal(1.2)));
    reports.push_back(invariants_upsilon(4, PiValue::pi_fraction(1, 5)));
    reports.push_back(fooo_fiber(1.0, 0.0, 0.75));
    reports.push_back(fooo_fiber(1.0, 0.2, -1.3));
    reports.push_back(fooo_example_report(1.0, 0.25));
    for (const auto& r : reports) CHECK(r.consistent());
}
