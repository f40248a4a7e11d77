#include "hbarlab/report.hpp"

#include <cstdio>

namespace hbarlab {

std::string format_csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json to_json(const PiValue& v) {
    Json j;
    j["text"] = v.str();
    j["value"] = v.to_double();
    j["exact"] = v.exact();
    return j;
}

Json to_json(const CurveSpec& c) {
    Json j;
    j["variant"] = c.kind() == CurveSpec::Kind::Circle ? "circle" : "keyhole";
    Json params;
    if (c.kind() == CurveSpec::Kind::Circle) {
        params["center"] = {c.center().real(), c.center().imag()};
        params["radius"] = c.radius();
    } else {
        params["outer_radius"] = c.outer_radius();
        params["inner_radius"] = c.inner_radius();
        params["slit_half_width"] = c.slit_half_width();
        params["smoothing"] = c.smoothing();
    }
    j["parameters"] = params;
    j["target_area"] = c.target_area();
    j["container_area"] = c.container_area();
    j["measured_area"] = c.measured_area();
    j["max_moment"] = c.max_moment();
    return j;
}

Json to_json(const ReducedFormReport& r) {
    Json j;
    j["k"] = r.k;
    j["samples"] = r.samples;
    j["max_defect"] = r.max_defect;
    j["seed"] = r.seed;
    j["control_defect"] = r.control_defect;
    return j;
}

Json to_json(const DiskReport& r) {
    Json j;
    j["label"] = r.label;
    j["class_guess"] = {r.p, r.q, r.r};
    j["area"] = r.area;
    j["maslov"] = r.maslov;
    Json ints;
    ints["plane13"] = r.plane13;
    ints["plane12"] = r.plane12;
    ints["sigmaF"] = r.sigma_f;
    j["intersections"] = ints;
    Json res;
    res["boundary"] = r.boundary_residual;
    if (r.cr_residual >= 0.0) res["cauchy_riemann"] = r.cr_residual;
    j["residuals"] = res;
    return j;
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["family"] = r.family;
    j["parameters"] = r.parameters;
    if (r.hbar_computed)
        j["hbar"] = to_json(r.hbar);
    else
        j["hbar"] = "not computed";
    j["e_lower"] = to_json(r.e_lower);
    if (r.e_upper_finite)
        j["e_upper"] = to_json(r.e_upper);
    else
        j["e_upper"] = "inf";
    j["monotone"] = r.monotone;
    if (r.spheres_min_finite)
        j["spheres_min"] = to_json(r.spheres_min);
    else
        j["spheres_min"] = "inf";
    j["certificates"] = r.certificates;
    return j;
}

Json to_json(const DisjointnessCertificate& c) {
    Json j;
    j["method"] = c.method == DisjointnessCertificate::Method::MomentInterval
                      ? "MomentInterval"
                      : "PointSampling";
    j["verdict"] = c.verdict;
    j["separation"] = c.separation;
    if (c.method == DisjointnessCertificate::Method::PointSampling)
        j["sampling_resolution"] = c.sampling_resolution;
    j["samples"] = c.samples;
    j["detail"] = c.detail;
    if (c.has_witness) {
        Json w;
        auto coords = [](const CVec& v) {
            std::vector<double> out;
            for (std::size_t i = 0; i < v.dim(); ++i) {
                out.push_back(v[i].real());
                out.push_back(v[i].imag());
            }
            return out;
        };
        w["before"] = coords(c.witness_before);
        w["after"] = coords(c.witness_after);
        j["witness"] = w;
    }
    return j;
}

Json to_json(const SwapCertificate& c) {
    Json j;
    j["s_max"] = c.s_max;
    j["gap"] = c.gap;
    j["interval"] = to_json(c.interval);
    j["sampling"] = to_json(c.sampling);
    return j;
}

Json to_json(const TranslationCertificate& c) {
    Json j;
    j["interval"] = to_json(c.interval);
    j["confinement_area"] = c.confinement_area;
    j["measured_energy"] = c.measured_energy;
    j["core_energy"] = c.core_energy;
    j["overhead"] = c.overhead;
    j["optimal_floor"] = c.optimal_floor;
    j["limit_value"] = c.limit_value;
    j["ratio"] = c.ratio;
    j["flow_deviation"] = c.flow_deviation;
    j["energy_drift"] = c.energy_drift;
    j["support_radius"] = c.support_radius;
    j["shift"] = c.shift;
    return j;
}

Json RunReport::to_json() const {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    Json checks;
    checks["passed"] = checks_passed;
    checks["failed"] = checks_failed;
    j["checks"] = checks;
    return j;
}

void RunReport::check(bool ok, const std::string& what) {
    if (ok) {
        ++checks_passed;
    } else {
        ++checks_failed;
        results["failed_checks"].push_back(what);
    }
}

}  // namespace hbarlab
