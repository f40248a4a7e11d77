#include "hbarlab/figures.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "hbarlab/svg.hpp"

namespace hbarlab {

namespace {
constexpr double kPi = std::numbers::pi;

// oblique projection of the positive octant: x1 right, x3 up, x2 receding
std::pair<double, double> oblique(double x1, double x2, double x3) {
    return {x1 - 0.40 * x2, x3 - 0.25 * x2};
}

void oblique_axes(svg::Document& doc, double len) {
    const auto o = oblique(0, 0, 0);
    const auto e1 = oblique(len, 0, 0);
    const auto e2 = oblique(0, len, 0);
    const auto e3 = oblique(0, 0, len);
    doc.line(o.first, o.second, e1.first, e1.second, "stroke=\"gray\" stroke-width=\"1\"");
    doc.line(o.first, o.second, e2.first, e2.second, "stroke=\"gray\" stroke-width=\"1\"");
    doc.line(o.first, o.second, e3.first, e3.second, "stroke=\"gray\" stroke-width=\"1\"");
    doc.text(e1.first, e1.second, "x1", "gray");
    doc.text(e2.first - 0.1, e2.second - 0.1, "x2", "gray");
    doc.text(e3.first, e3.second, "x3", "gray");
}

}  // namespace

std::array<std::array<double, 3>, 2> brendel_line_endpoints(int k) {
    // solve x1 + k x3 = pi, x2 = x3 at the extremes x3 = 0 and x1 = 0
    return {{{kPi, 0.0, 0.0}, {0.0, kPi / k, kPi / k}}};
}

std::array<std::array<double, 3>, 2> brendel_segment_endpoints(int k, const CurveSpec& curve) {
    const double s_min = kPi * curve.min_modulus() * curve.min_modulus();
    const double s_max = curve.max_moment();
    return {{{kPi - k * s_min, s_min, s_min}, {kPi - k * s_max, s_max, s_max}}};
}

void fig_chekanov_moment(const std::string& path, const CurveSpec& curve) {
    svg::Document doc(420, 420);
    doc.set_viewport(-0.1, -0.1, 1.35 * kPi / 2, 1.35 * kPi / 2);
    const double axis = 1.25 * kPi / 2;
    doc.line(0, 0, axis, 0, "stroke=\"black\" stroke-width=\"1\"");
    doc.line(0, 0, 0, axis, "stroke=\"black\" stroke-width=\"1\"");
    doc.dashed_line(0, 0, axis, axis, "gray");
    const double s0 = kPi * curve.min_modulus() * curve.min_modulus();
    const double s1 = curve.max_moment();
    doc.line(s0, s0, s1, s1, "stroke=\"red\" stroke-width=\"2.5\"");
    doc.text(0.7 * axis, 0.78 * axis, "level diagonal", "gray");
    doc.text(0.05, 0.93 * axis, "torus image under the moment map", "red");
    doc.write(path);
}

void fig_brendel_moment(const std::string& path, int k, const CurveSpec& curve) {
    svg::Document doc(520, 420);
    doc.set_viewport(-0.9, -0.5, 1.25 * kPi, 0.75 * kPi);
    oblique_axes(doc, 1.1 * kPi);
    const auto line = brendel_line_endpoints(k);
    const auto a = oblique(line[0][0], line[0][1], line[0][2]);
    const auto b = oblique(line[1][0], line[1][1], line[1][2]);
    doc.dashed_line(a.first, a.second, b.first, b.second, "gray");
    doc.dot(a.first, a.second, "black");
    doc.dot(b.first, b.second, "black");
    const auto seg = brendel_segment_endpoints(k, curve);
    const auto p = oblique(seg[0][0], seg[0][1], seg[0][2]);
    const auto q = oblique(seg[1][0], seg[1][1], seg[1][2]);
    doc.line(p.first, p.second, q.first, q.second, "stroke=\"red\" stroke-width=\"2.5\"");
    doc.text(b.first + 0.1, b.second + 0.1, "reduction line", "gray");
    doc.write(path);
}

void fig_cp2_polytope(const std::string& path, const CurveSpec& curve, bool with_swap_image) {
    // moment triangle of the projective plane in the (m0, m2) coordinates,
    // vertices (0,0), (pi,0), (0,pi)
    svg::Document doc(440, 440);
    doc.set_viewport(-0.25, -0.25, kPi + 0.4, kPi + 0.4);
    doc.polyline({Complex(0, 0), Complex(kPi, 0), Complex(0, kPi)},
                 "stroke=\"black\" stroke-width=\"1\" fill=\"none\"", true);
    doc.cross(kPi / 3, kPi / 3, "black");  // the monotone fiber
    const double s0 = kPi * curve.min_modulus() * curve.min_modulus();
    const double s1 = curve.max_moment();
    doc.line(s0, s0, s1, s1, "stroke=\"blue\" stroke-width=\"2.5\"");
    if (with_swap_image) {
        // the swap exchanges the deleted-hyperplane slot with a chart slot:
        // (s, s) goes to (s, pi - 2s)
        doc.line(s0, kPi - 2 * s0, s1, kPi - 2 * s1, "stroke=\"red\" stroke-width=\"2.5\"");
        doc.text(0.45 * kPi, 0.65 * kPi, "swapped image", "red");
    }
    doc.text(0.02, kPi + 0.15, "moment triangle, vertex (pi, 0) on the m0 axis", "black");
    doc.write(path);
}

void fig_keyhole(const std::string& path, const CurveSpec& curve) {
    svg::Document doc(460, 460);
    const double r_cont = std::sqrt(curve.container_area() / kPi);
    doc.set_viewport(-1.2 * r_cont, -1.2 * r_cont, 1.2 * r_cont, 1.2 * r_cont);
    doc.circle(0, 0, r_cont, "stroke=\"gray\" stroke-width=\"1\" fill=\"none\"");
    doc.polyline(curve.sample(2048), "stroke=\"blue\" stroke-width=\"1.5\"", true);
    doc.cross(0, 0, "black");
    doc.text(-1.1 * r_cont, 1.05 * r_cont, "reduced-space disk and the lifted curve", "gray");
    doc.write(path);
}

void fig_brendel_segment_pair(const std::string& generic_path, const std::string& optimized_path,
                              int k, const CurveSpec& generic, const CurveSpec& optimized) {
    fig_brendel_moment(generic_path, k, generic);
    fig_brendel_moment(optimized_path, k, optimized);
}

void fig_translation_displacement(const std::string& path, const TorusSpec& family,
                                  int coordinate, double shift) {
    svg::Document doc(520, 420);
    const int grid = 24;
    std::vector<Complex> before, after;
    const int d = family.dim();
    std::vector<double> params(static_cast<std::size_t>(d), 0.0);
    long total = 1;
    for (int i = 0; i < d; ++i) total *= grid;
    double xmax = 0.0, ymax = 0.0;
    for (long c = 0; c < total; ++c) {
        long rem = c;
        for (int i = 0; i < d; ++i) {
            params[static_cast<std::size_t>(i)] = static_cast<double>(rem % grid) / grid;
            rem /= grid;
        }
        const std::span<const double> angles(params.data(),
                                             static_cast<std::size_t>(family.angle_count()));
        const double t = family.uses_curve() ? params[static_cast<std::size_t>(d - 1)] : 0.0;
        const CVec p = family.parametrize(angles, t);
        const double x1 = kPi * std::norm(p[0]);
        const double x3 = kPi * std::norm(p[static_cast<std::size_t>(coordinate)]);
        const double x3_after =
            kPi * std::norm(p[static_cast<std::size_t>(coordinate)] + shift);
        before.emplace_back(x1, x3);
        after.emplace_back(x1, x3_after);
        xmax = std::max(xmax, x1);
        ymax = std::max(ymax, std::max(x3, x3_after));
    }
    doc.set_viewport(-0.2, -0.2, 1.1 * std::max(xmax, 0.5), 1.1 * std::max(ymax, 0.5));
    doc.line(0, 0, 1.05 * xmax, 0, "stroke=\"gray\" stroke-width=\"1\"");
    doc.line(0, 0, 0, 1.05 * ymax, "stroke=\"gray\" stroke-width=\"1\"");
    for (const auto& p : before) doc.dot(p.real(), p.imag(), "blue");
    for (const auto& p : after) doc.dot(p.real(), p.imag(), "red");
    doc.text(0.05, 1.02 * ymax, "moment values before (blue) and after (red) the translation",
             "black");
    doc.write(path);
}

std::vector<std::string> write_all_figures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<std::string> files;
    auto out = [&](const std::string& name) {
        files.push_back(name);
        return (fs::path(out_dir) / name).string();
    };

    const CurveSpec chekanov_curve = make_keyhole(0.8, kPi / 2.0);
    fig_chekanov_moment(out("chekanov_moment.svg"), chekanov_curve);

    const double a2 = kPi / 3.0;
    const CurveSpec brendel_curve = make_keyhole(a2, 0.5 * (a2 + kPi / 2.0));
    fig_brendel_moment(out("brendel_moment.svg"), 2, brendel_curve);

    const CurveSpec small_curve = make_keyhole(0.9, 0.95);
    fig_cp2_polytope(out("cp2_torus.svg"), small_curve, false);
    fig_cp2_polytope(out("cp2_swap.svg"), small_curve, true);

    fig_keyhole(out("keyhole.svg"), small_curve);

    // segment optimization: a mid-disk curve against the container-hugging one
    const CurveSpec generic = make_circle(Complex(0.45, 0.0), 0.15, kPi / 2.0);
    const CurveSpec optimized = make_keyhole(a2, a2 + 0.12);
    fig_brendel_segment_pair(out("segment_generic.svg"), out("segment_optimized.svg"), 2,
                             generic, optimized);

    const TorusSpec upsilon = TorusSpec::brendel(2, optimized);
    const double radius = optimized.max_modulus();
    fig_translation_displacement(out("translate_displacement.svg"), upsilon, 2,
                                 2.0 * radius + 0.05 * radius);
    return files;
}

}  // namespace hbarlab
