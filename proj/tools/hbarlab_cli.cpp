// Batch front end: verification suites, invariant tables, displacement
// certificates, and figure export. Artifacts (JSON/CSV/SVG) are byte-stable
// for a fixed seed; wall time goes to the console only.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hbarlab/disks.hpp"
#include "hbarlab/dynamics.hpp"
#include "hbarlab/errors.hpp"
#include "hbarlab/figures.hpp"
#include "hbarlab/lattice.hpp"
#include "hbarlab/reduction.hpp"
#include "hbarlab/report.hpp"
#include "hbarlab/rng.hpp"

namespace fs = std::filesystem;
using namespace hbarlab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Options {
    std::uint64_t seed = 0;
    bool json = false;
    std::string out;
};

void write_text(const Options& opt, const std::string& name, const std::string& content) {
    if (opt.out.empty()) return;
    fs::create_directories(opt.out);
    std::ofstream f(fs::path(opt.out) / name, std::ios::binary);
    f << content;
}

int finish(const Options& opt, RunReport rep, const std::string& artifact_name,
           std::chrono::steady_clock::time_point started) {
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const Json j = rep.to_json();
    write_text(opt, artifact_name, j.dump(2) + "\n");
    if (opt.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.command << ": " << rep.checks_passed << " checks passed, "
                  << rep.checks_failed << " failed";
        std::printf(" (%.2f s)\n", rep.wall_time_s);
        if (rep.checks_failed > 0 && rep.results.contains("failed_checks"))
            for (const auto& f : rep.results["failed_checks"])
                std::cout << "  failed: " << f.get<std::string>() << "\n";
    }
    return rep.checks_failed == 0 ? 0 : 1;
}

CurveSpec standard_curve(int k, double a, double margin) {
    // container: a + margin when it fits, otherwise the midpoint of the
    // remaining headroom below pi/k
    const double cap = kPi / k;
    double container = a + margin;
    if (container >= cap) container = 0.5 * (a + cap);
    return make_keyhole(a, container);
}

double parse_area(const std::string& text) { return PiValue::parse(text).to_double(); }

// ---- verify ---------------------------------------------------------------

int cmd_verify_lagrangian(const Options& opt, const std::string& family,
                          const std::string& areas_csv, int n, int k, const std::string& a_text,
                          double margin, int samples, bool perturb) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "verify lagrangian";
    rep.parameters = {{"family", family}, {"samples", samples}, {"seed", opt.seed}};

    std::optional<TorusSpec> spec;
    double threshold = 1e-8;
    if (family == "product") {
        std::vector<double> areas;
        std::stringstream ss(areas_csv);
        std::string item;
        while (std::getline(ss, item, ',')) areas.push_back(parse_area(item));
        rep.parameters["areas"] = areas;
        spec = TorusSpec::product(areas);
        threshold = 1e-10;
    } else {
        const double a = parse_area(a_text);
        rep.parameters["a"] = a;
        if (family == "chekanov-cn") {
            rep.parameters["n"] = n;
            spec = TorusSpec::chekanov_cn(n, make_keyhole(a, kPi / n));
        } else if (family == "chekanov-cpn") {
            rep.parameters["n"] = n;
            spec = TorusSpec::chekanov_cpn(n, make_keyhole(a, std::min(a + margin, kPi / n)));
        } else if (family == "brendel") {
            rep.parameters["k"] = k;
            spec = TorusSpec::brendel(k, standard_curve(k, a, margin));
        } else {
            throw ParameterOutOfRange("unknown family: " + family);
        }
    }

    const double residual = lagrangian_residual(*spec, samples);
    rep.results["residual"] = residual;
    rep.results["threshold"] = threshold;
    rep.check(residual < threshold, "lagrangian residual under threshold");

    if (perturb) {
        if (spec->ambient_dim() < 3)
            throw ParameterOutOfRange("--perturb needs a three-coordinate family");
        const double broken = lagrangian_residual(*spec, samples, 1.01);
        rep.results["perturbed_residual"] = broken;
        rep.check(broken > 1e-3, "perturbed control detected");
    }
    return finish(opt, rep, "verify_lagrangian_" + family + ".json", t0);
}

int cmd_verify_reduction(const Options& opt, int k, int samples) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "verify reduction";
    rep.parameters = {{"k", k}, {"samples", samples}, {"seed", opt.seed}};

    Rng rng(opt.seed);
    double qg = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double m = rng.uniform(1e-4, 0.999) * kPi / k;
        const Complex w = std::polar(std::sqrt(m / kPi), 2.0 * kPi * rng.uniform());
        qg = std::max(qg, std::abs(q_map(section_g(w, k)) - w));
    }
    rep.results["qg_identity_max_residual"] = qg;
    rep.check(qg < 1e-12, "q o g identity to 1e-12");

    double act = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double m = rng.uniform(0.05, 0.95) * kPi / k;
        const Complex w = std::polar(std::sqrt(m / kPi), 2.0 * kPi * rng.uniform());
        const LevelPoint p = section_g(w, k);
        const CVec moved = torus_action(rng.uniform(), rng.uniform(), p.point, k);
        act = std::max(act, std::abs(q_map_extended(moved, k) - q_map(p)));
    }
    rep.results["action_invariance_max_residual"] = act;
    rep.check(act < 1e-12, "q constant on orbits to 1e-12");

    const auto form = verify_reduced_form(k, samples, opt.seed);
    rep.results["reduced_form"] = to_json(form);
    rep.check(form.max_defect < 1e-6, "reduced-form defect under 1e-6");
    rep.check(form.control_defect > 0.1, "doubled-form control rejected");
    return finish(opt, rep, "verify_reduction_k" + std::to_string(k) + ".json", t0);
}

int cmd_verify_chart(const Options& opt, int n, int points) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "verify chart";
    rep.parameters = {{"n", n}, {"points", points}, {"seed", opt.seed}};
    const double defect = chart_pullback_defect(n, 1, points, opt.seed);
    rep.results["pullback_defect"] = defect;
    rep.check(defect < 1e-6, "chart pullback equals the standard form to 1e-6");
    return finish(opt, rep, "verify_chart_n" + std::to_string(n) + ".json", t0);
}

int cmd_verify_disks(const Options& opt, int k, const std::string& a_text, double margin) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "verify disks";
    const double a = parse_area(a_text);
    rep.parameters = {{"k", k}, {"a", a}, {"seed", opt.seed}};

    const TorusSpec spec = TorusSpec::brendel(k, standard_curve(k, a, margin));
    const auto s13 = Hypersurface::plane13(spec);
    const auto s12 = Hypersurface::plane12(spec);
    const auto sf = Hypersurface::sigma_f(spec);
    rep.results["curve"] = to_json(spec.curve());
    rep.results["epsilon"] = {sf.epsilon().real(), sf.epsilon().imag()};
    rep.results["epsilon_point"] = {sf.epsilon_point().real(), sf.epsilon_point().imag()};

    struct Expected {
        DiskFamily fam;
        const char* name;
        double area;
        int maslov, i13, i12, isf;
    };
    const Expected want[3] = {{DiskFamily::Alpha, "alpha", a, 2, 0, 0, 1},
                              {DiskFamily::Beta1, "beta1", kPi, 2 * k + 2, 0, k, k},
                              {DiskFamily::Beta2, "beta2", 0.0, 0, 1, -1, 0}};

    std::ostringstream csv;
    csv << "disk,area,area_expected,maslov,maslov_expected,plane13,plane12,sigmaF,"
           "p13_expected,p12_expected,sf_expected,match,boundary_residual\n";
    Json rows = Json::array();
    for (const auto& w : want) {
        const DiskMap d = standard_disk(w.fam, spec);
        const DiskReport r = analyze_disk(d, spec, s13, s12, sf);
        const bool match = std::abs(r.area - w.area) < 1e-6 && r.maslov == w.maslov &&
                           r.plane13 == w.i13 && r.plane12 == w.i12 && r.sigma_f == w.isf;
        rep.check(match, std::string(w.name) + " row matches");
        rep.check(r.boundary_residual < 1e-9, std::string(w.name) + " boundary on torus");
        if (r.cr_residual >= 0.0)
            rep.check(r.cr_residual < 1e-7, std::string(w.name) + " holomorphic");
        csv << w.name << "," << format_csv_number(r.area) << "," << format_csv_number(w.area)
            << "," << r.maslov << "," << w.maslov << "," << r.plane13 << "," << r.plane12 << ","
            << r.sigma_f << "," << w.i13 << "," << w.i12 << "," << w.isf << ","
            << (match ? "yes" : "no") << "," << format_csv_number(r.boundary_residual) << "\n";
        Json row = to_json(r);
        row["match"] = match;
        rows.push_back(row);
    }
    rep.results["disks"] = rows;
    write_text(opt, "disks_k" + std::to_string(k) + ".csv", csv.str());
    return finish(opt, rep, "verify_disks_k" + std::to_string(k) + ".json", t0);
}

// ---- table ----------------------------------------------------------------

int cmd_table_classes(const Options& opt, int k, const std::string& a_text, bool numeric,
                      double margin) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "table classes";
    rep.parameters = {{"k", k}, {"seed", opt.seed}, {"numeric", numeric}};
    const PiValue a = PiValue::parse(a_text);
    rep.parameters["a"] = a.str();

    std::ostringstream csv;
    csv << "class,p,q,r,area,maslov,plane13,plane12,sigmaF,provenance\n";
    Json rows = Json::array();
    for (const auto& c : enumerate_maslov2(k)) {
        csv << "\"" << c.str() << "\"," << c.p << "," << c.q << "," << c.r << ","
            << c.area(a).str() << "," << c.maslov() << "," << c.plane13() << "," << c.plane12()
            << "," << c.sigma_f() << ",lattice\n";
        Json row;
        row["class"] = c.str();
        row["p"] = c.p;
        row["q"] = c.q;
        row["r"] = c.r;
        row["area"] = to_json(c.area(a));
        row["maslov"] = c.maslov();
        row["plane13"] = c.plane13();
        row["plane12"] = c.plane12();
        row["sigmaF"] = c.sigma_f();
        row["provenance"] = "lattice";
        rows.push_back(row);
    }
    rep.check(enumerate_maslov2(k).size() == static_cast<std::size_t>(k) + 2,
              "class count is k + 2");

    if (numeric) {
        const TorusSpec spec = TorusSpec::brendel(k, standard_curve(k, a.to_double(), margin));
        const auto s13 = Hypersurface::plane13(spec);
        const auto s12 = Hypersurface::plane12(spec);
        const auto sf = Hypersurface::sigma_f(spec);
        const struct {
            DiskFamily fam;
            RelClass cls;
        } gens[3] = {{DiskFamily::Alpha, {1, 0, 0, k}},
                     {DiskFamily::Beta1, {0, 1, 0, k}},
                     {DiskFamily::Beta2, {0, 0, 1, k}}};
        for (const auto& g : gens) {
            const DiskReport r = analyze_disk(standard_disk(g.fam, spec), spec, s13, s12, sf);
            const bool match = std::abs(r.area - g.cls.area(a).to_double()) < 1e-6 &&
                               r.maslov == g.cls.maslov() && r.plane13 == g.cls.plane13() &&
                               r.plane12 == g.cls.plane12() && r.sigma_f == g.cls.sigma_f();
            rep.check(match, "numeric generator " + std::string(r.label) + " matches lattice");
            csv << "\"" << g.cls.str() << "\"," << g.cls.p << "," << g.cls.q << "," << g.cls.r
                << "," << format_csv_number(r.area) << "," << r.maslov << "," << r.plane13 << ","
                << r.plane12 << "," << r.sigma_f << ",numeric:" << (match ? "match" : "MISMATCH")
                << "\n";
            Json row = to_json(r);
            row["provenance"] = "numeric";
            row["match"] = match;
            rows.push_back(row);
        }
    }
    rep.results["rows"] = rows;
    write_text(opt, "classes_k" + std::to_string(k) + ".csv", csv.str());
    return finish(opt, rep, "table_classes_k" + std::to_string(k) + ".json", t0);
}

void append_invariant_csv(std::ostringstream& csv, const InvariantReport& r) {
    csv << r.family << ",\"" << r.parameters << "\","
        << (r.hbar_computed ? format_csv_number(r.hbar.to_double()) : std::string("n/a")) << ","
        << format_csv_number(r.e_lower.to_double()) << ","
        << (r.e_upper_finite ? format_csv_number(r.e_upper.to_double()) : std::string("inf"))
        << "," << (r.monotone ? "yes" : "no") << ",\"";
    for (std::size_t i = 0; i < r.certificates.size(); ++i)
        csv << (i ? "; " : "") << r.certificates[i];
    csv << "\"\n";
}

int cmd_table_invariants(const Options& opt, const std::string& family,
                         const std::string& areas_csv, int n, int k, const std::string& a_text) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "table invariants";
    rep.parameters = {{"family", family}, {"seed", opt.seed}};

    std::vector<InvariantReport> reports;
    if (family == "product") {
        std::vector<PiValue> areas;
        std::stringstream ss(areas_csv);
        std::string item;
        while (std::getline(ss, item, ',')) areas.push_back(PiValue::parse(item));
        reports.push_back(invariants_product(areas));
    } else if (family == "chekanov-cpn") {
        reports.push_back(invariants_chekanov_cpn(n, PiValue::parse(a_text)));
    } else if (family == "upsilon") {
        const PiValue a = PiValue::parse(a_text);
        reports.push_back(invariants_upsilon(k, a));
        const auto search = hbar_upsilon_search(k, a);
        rep.results["hbar_search"] = {{"min_area", to_json(search.min_area)},
                                      {"l", search.l},
                                      {"m", search.m},
                                      {"box_note", search.box_note}};
        rep.check(search.min_area == hbar_upsilon(k, a) ||
                      std::abs(search.min_area.to_double() - hbar_upsilon(k, a).to_double()) <
                          1e-12,
                  "closed form equals lattice search");
    } else if (family == "fooo") {
        const double a = parse_area(a_text);
        reports.push_back(fooo_example_report(a, 0.25 * a));
    } else {
        throw ParameterOutOfRange("unknown family: " + family);
    }

    std::ostringstream csv;
    csv << "family,parameters,hbar,e_lower,e_upper,monotone,certificates\n";
    Json rows = Json::array();
    for (const auto& r : reports) {
        rep.check(r.consistent(), "sandwich inequalities for " + r.family);
        append_invariant_csv(csv, r);
        rows.push_back(to_json(r));
    }
    rep.results["rows"] = rows;
    write_text(opt, "invariants_" + family + ".csv", csv.str());
    return finish(opt, rep, "table_invariants_" + family + ".json", t0);
}

int cmd_table_fooo(const Options& opt, const std::string& a_text, int grid, double eps) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "table fooo";
    const double a = parse_area(a_text);
    rep.parameters = {{"a", a}, {"grid", grid}, {"eps", eps}, {"seed", opt.seed}};

    const auto example = fooo_example_report(a, eps);
    rep.results["example"] = to_json(example);
    rep.check(example.hbar.to_double() == a, "example fiber: hbar = a");
    rep.check(example.e_upper.to_double() == a + eps, "example fiber: e = a + eps");

    const auto scan = fooo_grid_scan(a, grid);
    rep.results["scan"] = {{"nodes_per_axis", scan.nodes_per_axis},
                           {"flagged", scan.flagged},
                           {"expected_segment_nodes", scan.expected_segment_nodes},
                           {"discontinuity_matches_segment", scan.discontinuity_matches_segment},
                           {"e_equals_hbar_off_segment", scan.e_equals_hbar_off_segment}};
    rep.check(scan.discontinuity_matches_segment,
              "discontinuity set is exactly the closed segment");
    rep.check(scan.e_equals_hbar_off_segment, "e = hbar off the segment");

    std::ostringstream csv;
    csv << "x1,x2,hbar,e_lower,e_upper,discontinuous,provenance\n";
    const int m = (grid - 1) / 2;
    for (int i = -m; i <= m; ++i)
        for (int j = -m; j <= m; ++j) {
            const double x1 = a * i / m;
            const double x2 = 2.0 * a * j / m;
            const auto r = fooo_fiber(a, x1, x2);
            const bool disc = !r.e_upper_finite || !(r.e_upper == r.hbar);
            csv << format_csv_number(x1) << "," << format_csv_number(x2) << ","
                << format_csv_number(r.hbar.to_double()) << ","
                << format_csv_number(r.e_lower.to_double()) << ","
                << (r.e_upper_finite ? format_csv_number(r.e_upper.to_double())
                                     : std::string("inf"))
                << "," << (disc ? "yes" : "no") << ","
                << (x1 == 0.0 && std::abs(x2) <= a ? "hbar:computed;e:citation+heuristic"
                                                   : "hbar:computed;e:computed")
                << "\n";
        }
    write_text(opt, "fooo_grid.csv", csv.str());
    return finish(opt, rep, "table_fooo.json", t0);
}

int cmd_table_classcount(const Options& opt, int k_lo, int k_hi) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "table classcount";
    rep.parameters = {{"k_lo", k_lo}, {"k_hi", k_hi}, {"seed", opt.seed}};
    std::ostringstream csv;
    csv << "k,count,expected,match,provenance\n";
    Json rows = Json::array();
    for (int k = k_lo; k <= k_hi; ++k) {
        const auto classes = enumerate_maslov2(k);
        const bool match = classes.size() == static_cast<std::size_t>(k) + 2;
        rep.check(match, "count for k = " + std::to_string(k));
        csv << k << "," << classes.size() << "," << k + 2 << "," << (match ? "yes" : "no")
            << ",lattice\n";
        rows.push_back({{"k", k}, {"count", classes.size()}, {"expected", k + 2}});
    }
    rep.results["rows"] = rows;
    write_text(opt, "classcount.csv", csv.str());
    return finish(opt, rep, "table_classcount.json", t0);
}

// ---- displace / classify / figures ----------------------------------------

int cmd_displace(const Options& opt, const std::string& method, const std::string& family,
                 int n, int k, const std::string& a_text, double margin, int coordinate,
                 double rk_step, long samples, int chart_slot, int swap_i, int swap_j) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "displace " + method;
    const double a = parse_area(a_text);
    rep.parameters = {{"method", method}, {"a", a},       {"margin", margin},
                      {"seed", opt.seed}, {"n", n},       {"k", k},
                      {"rk_step", rk_step}, {"samples", samples}};

    if (method == "swap") {
        const CurveSpec curve = make_keyhole(a, a + margin);
        rep.parameters["chart_slot"] = chart_slot;
        rep.parameters["swap_slots"] = {swap_i, swap_j};
        try {
            const auto cert =
                certify_swap_displacement(n, a, curve, chart_slot, {swap_i, swap_j}, samples);
            rep.results["certificate"] = to_json(cert);
            rep.check(cert.interval.verdict, "moment-interval disjointness");
            if (!opt.out.empty()) {
                fs::create_directories(opt.out);
                fig_cp2_polytope((fs::path(opt.out) / "displace_swap.svg").string(), curve,
                                 true);
                fig_keyhole((fs::path(opt.out) / "displace_swap_curve.svg").string(), curve);
            }
        } catch (const ChartMismatch& e) {
            rep.results["error"] = std::string("ChartMismatch: ") + e.what();
            rep.check(false, "swap slots must involve the deleted-hyperplane slot");
        }
        return finish(opt, rep, "displace_swap.json", t0);
    }

    if (method != "translate") throw ParameterOutOfRange("unknown method: " + method);
    std::optional<TorusSpec> spec;
    if (family == "brendel") {
        spec = TorusSpec::brendel(k, standard_curve(k, a, margin));
    } else if (family == "product") {
        spec = TorusSpec::product({a, a});
    } else if (family == "chekanov-cn") {
        spec = TorusSpec::chekanov_cn(n, make_keyhole(a, std::min(a + margin, kPi / n)));
    } else {
        throw ParameterOutOfRange("unknown family for translate: " + family);
    }
    const auto cert = certify_translation_displacement(*spec, coordinate, rk_step,
                                                       static_cast<int>(samples));
    rep.results["certificate"] = to_json(cert);
    rep.check(cert.interval.verdict, "coordinate-interval disjointness");
    rep.check(cert.measured_energy >= cert.optimal_floor, "energy above the sharp floor");
    if (!opt.out.empty()) {
        fs::create_directories(opt.out);
        fig_translation_displacement((fs::path(opt.out) / "displace_translate.svg").string(),
                                     *spec, coordinate,
                                     2.0 * std::sqrt(cert.confinement_area / kPi) * 1.025);
    }
    return finish(opt, rep, "displace_translate.json", t0);
}

int cmd_classify(const Options& opt, int k1, const std::string& a1_text, int k2,
                 const std::string& a2_text) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "classify";
    const PiValue a1 = PiValue::parse(a1_text);
    const PiValue a2 = PiValue::parse(a2_text);
    rep.parameters = {{"k1", k1}, {"a1", a1.str()}, {"k2", k2}, {"a2", a2.str()},
                      {"seed", opt.seed}};
    const auto c = classify_upsilon(k1, a1, k2, a2);
    rep.results["distinct"] = c.distinct;
    rep.results["certificate"] = c.certificate;
    const bool expect_distinct = (k1 != k2) || !(a1 == a2);
    rep.check(c.distinct == expect_distinct, "classification matches the parameters");
    return finish(opt, rep, "classify.json", t0);
}

int cmd_figures(const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = "figures";
    rep.parameters = {{"seed", opt.seed}};
    const std::string dir = opt.out.empty() ? "figures" : opt.out;
    const auto files = write_all_figures(dir);
    rep.results["files"] = files;
    const auto ends = brendel_line_endpoints(2);
    rep.results["brendel_line_endpoints"] = {{ends[0][0], ends[0][1], ends[0][2]},
                                             {ends[1][0], ends[1][1], ends[1][2]}};
    rep.check(files.size() >= 7, "figure set written");
    return finish(opt, rep, "figures.json", t0);
}

// ---- suite ----------------------------------------------------------------

int cmd_suite(const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    auto run = [&](int rc) { failures += rc == 0 ? 0 : 1; };

    run(cmd_verify_lagrangian(opt, "product", "1,2", 0, 0, "", 0.0, 12, false));
    run(cmd_verify_lagrangian(opt, "chekanov-cn", "", 2, 0, "0.8", 0.05, 12, false));
    run(cmd_verify_lagrangian(opt, "chekanov-cpn", "", 2, 0, "0.9", 0.05, 12, false));
    run(cmd_verify_lagrangian(opt, "brendel", "", 0, 2, "pi/3", 0.05, 12, true));
    run(cmd_verify_reduction(opt, 2, 200));
    run(cmd_verify_chart(opt, 2, 100));
    run(cmd_verify_disks(opt, 2, "pi/3", 0.05));
    run(cmd_table_classes(opt, 2, "pi/3", true, 0.05));
    run(cmd_table_invariants(opt, "product", "1,2,3", 0, 0, ""));
    run(cmd_table_invariants(opt, "chekanov-cpn", "", 2, 0, "0.9"));
    run(cmd_table_invariants(opt, "upsilon", "", 0, 2, "1.2"));
    run(cmd_table_invariants(opt, "fooo", "", 0, 0, "1"));
    run(cmd_table_fooo(opt, "1", 41, 0.25));
    run(cmd_table_classcount(opt, 2, 6));
    run(cmd_displace(opt, "swap", "", 2, 0, "0.9", 0.05, 0, 1e-3, 10000, 1, 1, 2));
    run(cmd_displace(opt, "translate", "brendel", 0, 2, "pi/3", 0.05, 2, 1e-3, 200, 1, 1, 2));
    run(cmd_classify(opt, 2, "1.1", 2, "1.2"));
    run(cmd_figures(opt));

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("suite: %d command(s) failed (%.2f s)\n", failures, secs);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for Lagrangian torus invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--seed", opt.seed, "seed for all randomized checks")->capture_default_str();
    app.add_flag("--json", opt.json, "print the run report as JSON");
    app.add_option("--out", opt.out, "directory for JSON/CSV/SVG artifacts");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->fallthrough();
    std::string family = "brendel", areas = "1,1", a_text = "pi/3";
    int n = 2, k = 2, samples = 12, points = 100, red_samples = 200;
    double margin = 0.05;
    bool perturb = false;

    auto* vl = verify->add_subcommand("lagrangian", "residuals of the torus families");
    vl->fallthrough();
    vl->add_option("--family", family, "product|chekanov-cn|chekanov-cpn|brendel")->required();
    vl->add_option("--areas", areas, "comma list for the product family");
    vl->add_option("--n", n);
    vl->add_option("--k", k);
    vl->add_option("--a", a_text, "curve area (accepts pi/3 style)");
    vl->add_option("--margin", margin);
    vl->add_option("--samples", samples, "grid nodes per torus dimension");
    vl->add_flag("--perturb", perturb, "also run the broken-construction control");

    auto* vr = verify->add_subcommand("reduction", "level-set reduction identities");
    vr->fallthrough();
    vr->add_option("--k", k)->required();
    vr->add_option("--samples", red_samples);

    auto* vc = verify->add_subcommand("chart", "chart pullback against the standard form");
    vc->fallthrough();
    vc->add_option("--n", n);
    vc->add_option("--points", points);

    auto* vd = verify->add_subcommand("disks", "disk areas, indices, intersections");
    vd->fallthrough();
    vd->add_option("--k", k)->required();
    vd->add_option("--a", a_text)->required();
    vd->add_option("--margin", margin);

    // table
    auto* table = app.add_subcommand("table", "emit invariant tables (CSV + JSON)");
    table->require_subcommand(1);
    table->fallthrough();
    bool numeric = false;
    int grid = 41, k_lo = 2, k_hi = 6;
    double eps = 0.25;
    std::string krange = "2..6";

    auto* tc = table->add_subcommand("classes", "index-2 classes with their functionals");
    tc->fallthrough();
    tc->add_option("--k", k)->required();
    tc->add_option("--a", a_text);
    tc->add_option("--margin", margin);
    tc->add_flag("--numeric", numeric, "double-source the generator rows from disks");

    auto* ti = table->add_subcommand("invariants", "energy/area invariant reports");
    ti->fallthrough();
    ti->add_option("--family", family, "product|chekanov-cpn|upsilon|fooo")->required();
    ti->add_option("--areas", areas);
    ti->add_option("--n", n);
    ti->add_option("--k", k);
    ti->add_option("--a", a_text);

    auto* tf = table->add_subcommand("fooo", "two-sphere fiber grid");
    tf->fallthrough();
    tf->add_option("--a", a_text);
    tf->add_option("--grid", grid);
    tf->add_option("--eps", eps);

    auto* tcc = table->add_subcommand("classcount", "class counts per k");
    tcc->fallthrough();
    tcc->add_option("--k-range", krange, "e.g. 2..6");

    // displace
    auto* disp = app.add_subcommand("displace", "displacement certificates");
    disp->fallthrough();
    std::string method = "swap";
    int coordinate = 2, chart_slot = 1, swap_i = 1, swap_j = 2;
    double rk_step = 1e-3;
    long dsamples = 10000;
    disp->add_option("--method", method, "swap|translate")->required();
    disp->add_option("--family", family);
    disp->add_option("--n", n);
    disp->add_option("--k", k);
    disp->add_option("--a", a_text);
    disp->add_option("--margin", margin);
    disp->add_option("--coordinate", coordinate, "0-based ambient coordinate");
    disp->add_option("--rk-step", rk_step);
    disp->add_option("--samples", dsamples);
    disp->add_option("--chart-slot", chart_slot);
    disp->add_option("--swap-i", swap_i);
    disp->add_option("--swap-j", swap_j);

    // classify
    auto* cls = app.add_subcommand("classify", "distinguish family members");
    cls->fallthrough();
    int k2 = 2;
    std::string a2_text = "1.2";
    cls->add_option("--k", k)->required();
    cls->add_option("--a", a_text)->required();
    cls->add_option("--k2", k2)->required();
    cls->add_option("--a2", a2_text)->required();

    auto* figs = app.add_subcommand("figures", "write the moment-image figure set");
    figs->fallthrough();
    auto* suite = app.add_subcommand("suite", "run every command with artifacts");
    suite->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (vl->parsed())
            return cmd_verify_lagrangian(opt, family, areas, n, k, a_text, margin, samples,
                                         perturb);
        if (vr->parsed()) return cmd_verify_reduction(opt, k, red_samples);
        if (vc->parsed()) return cmd_verify_chart(opt, n, points);
        if (vd->parsed()) return cmd_verify_disks(opt, k, a_text, margin);
        if (tc->parsed()) return cmd_table_classes(opt, k, a_text, numeric, margin);
        if (ti->parsed()) return cmd_table_invariants(opt, family, areas, n, k, a_text);
        if (tf->parsed()) return cmd_table_fooo(opt, a_text, grid, eps);
        if (tcc->parsed()) {
            const auto dots = krange.find("..");
            if (dots == std::string::npos)
                throw ParameterOutOfRange("--k-range wants lo..hi");
            k_lo = std::stoi(krange.substr(0, dots));
            k_hi = std::stoi(krange.substr(dots + 2));
            return cmd_table_classcount(opt, k_lo, k_hi);
        }
        if (disp->parsed())
            return cmd_displace(opt, method, family, n, k, a_text, margin, coordinate, rk_step,
                                dsamples, chart_slot, swap_i, swap_j);
        if (cls->parsed()) return cmd_classify(opt, k, a_text, k2, a2_text);
        if (figs->parsed()) return cmd_figures(opt);
        if (suite->parsed()) return cmd_suite(opt);
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
