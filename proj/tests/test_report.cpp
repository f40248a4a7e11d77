#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hbarlab/figures.hpp"
#include "hbarlab/report.hpp"
#include "hbarlab/svg.hpp"

using namespace hbarlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("run reports carry the schema tag and no wall time") {
    RunReport rep;
    rep.command = "verify disks";
    rep.parameters = {{"k", 2}};
    rep.check(true, "something");
    rep.wall_time_s = 1.23;
    const Json j = rep.to_json();
    CHECK(j["schema"] == "hbar-lab/1");
    CHECK(j["checks"]["passed"] == 1);
    CHECK(j["checks"]["failed"] == 0);
    CHECK_FALSE(j.contains("wall_time"));
    CHECK(j.dump() == rep.to_json().dump());  // stable serialization
}

TEST_CASE("failed checks are listed") {
    RunReport rep;
    rep.check(false, "tolerance breached");
    CHECK(rep.checks_failed == 1);
    CHECK(rep.to_json()["results"]["failed_checks"][0] == "tolerance breached");
}

TEST_CASE("pi values serialize with both text and value") {
    const Json j = to_json(PiValue::pi_fraction(1, 3));
    CHECK(j["text"] == "pi/3");
    CHECK(j["exact"] == true);
    CHECK(j["value"].get<double>() == doctest::Approx(kPi / 3).epsilon(1e-15));
}

TEST_CASE("infinite bounds serialize as the string inf") {
    const auto rep = invariants_chekanov_cpn(2, PiValue::pi_fraction(1, 3));
    const Json j = to_json(rep);
    CHECK(j["e_upper"] == "inf");
    CHECK(j["hbar"] == "not computed");
}

TEST_CASE("svg output is deterministic and well formed") {
    svg::Document doc(100, 100);
    doc.set_viewport(0, 0, 1, 1);
    doc.line(0, 0, 1, 1, "stroke=\"black\"");
    doc.dot(0.5, 0.5, "red");
    const std::string a = doc.str();
    CHECK(a.find("<?xml") == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("svg") != std::string::npos);
    CHECK(a == doc.str());
    CHECK(svg::format_number(-0.00001) == "0.0000");  // no negative zero
}

TEST_CASE("reduction line endpoints for k = 2") {
    const auto ends = brendel_line_endpoints(2);
    CHECK(ends[0][0] == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(ends[0][1] == 0.0);
    CHECK(ends[0][2] == 0.0);
    CHECK(ends[1][0] == 0.0);
    CHECK(ends[1][1] == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(ends[1][2] == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("torus moment segment sits on the reduction line") {
    const CurveSpec curve = make_keyhole(kPi / 3.0, 0.5 * (kPi / 3.0 + kPi / 2.0));
    const auto seg = brendel_segment_endpoints(2, curve);
    for (const auto& p : seg) {
        CHECK(p[0] + 2.0 * p[2] == doctest::Approx(kPi).epsilon(1e-12));
        CHECK(p[1] == p[2]);
    }
}

TEST_CASE("csv numbers render via %.12g") {
    CHECK(format_csv_number(kPi) == "3.14159265359");
    CHECK(format_csv_number(1.0) == "1");
    CHECK(format_csv_number(0.5) == "0.5");
}
