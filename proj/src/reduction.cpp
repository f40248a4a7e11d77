#include "hbarlab/reduction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hbarlab/errors.hpp"
#include "hbarlab/rng.hpp"

namespace hbarlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(double theta) {
    return Complex(std::cos(kTwoPi * theta), std::sin(kTwoPi * theta));
}
}  // namespace

std::vector<double> moment_map(const CVec& z) {
    std::vector<double> m(z.dim());
    for (std::size_t j = 0; j < z.dim(); ++j) m[j] = kPi * std::norm(z[j]);
    return m;
}

std::vector<double> chekanov_moment(const CVec& z) {
    const auto m = moment_map(z);
    std::vector<double> c(z.dim() - 1);
    for (std::size_t j = 1; j < z.dim(); ++j) c[j - 1] = m[0] - m[j];
    return c;
}

std::array<double, 2> nu_k(const CVec& z, int k) {
    const auto m = moment_map(z);
    return {m[0] + k * m[2], m[1] - m[2]};
}

CVec torus_action(double theta1, double theta2, const CVec& z, int k) {
    CVec w(3);
    w[0] = unit_phase(theta1) * z[0];
    w[1] = unit_phase(theta2) * z[1];
    w[2] = unit_phase(k * theta1 - theta2) * z[2];
    return w;
}

LevelPoint make_level_point(const CVec& z, int k) {
    LevelPoint p{z, k, false};
    const auto nu = nu_k(z, k);
    const double r1 = std::abs(z[0]), r2 = std::abs(z[1]), r3 = std::abs(z[2]);
    const double level = std::hypot(nu[0] - kPi, nu[1]);
    p.on_Z = level < 1e-10 && r1 > 1e-10 && r3 > 1e-10 && std::abs(r2 - r3) < 1e-10;
    return p;
}

Complex q_map_extended(const CVec& z, int k) {
    const double r1 = std::abs(z[0]), r2 = std::abs(z[1]);
    if (r1 < 1e-300 || r2 < 1e-300)
        throw DomainError("q_map: vanishing z_1 or z_2 (removed stratum)");
    // r_3 e^{2pi i(-k t1 + t2 + t3)} = conj(z_1/|z_1|)^k (z_2/|z_2|) z_3
    Complex phase1 = std::conj(z[0]) / r1;
    Complex p = 1.0;
    for (int i = 0; i < k; ++i) p *= phase1;
    return p * (z[1] / r2) * z[2];
}

Complex q_map(const LevelPoint& p) {
    if (!p.on_Z) throw NotOnLevelSet("q_map: point is not on the regular level set");
    return q_map_extended(p.point, p.k);
}

LevelPoint section_g(const Complex& w, int k) {
    const double m = kPi * std::norm(w);
    if (!(m > 0.0) || m >= kPi / k) {
        std::ostringstream os;
        os << "section_g: pi|w|^2 = " << m << " outside (0, pi/k) for k = " << k;
        throw OutOfDisk(os.str());
    }
    CVec z(3);
    z[0] = std::sqrt(1.0 - k * std::norm(w));
    z[1] = std::abs(w);
    z[2] = w;
    LevelPoint p = make_level_point(z, k);
    p.on_Z = true;  // exact by construction
    return p;
}

namespace {

// Real 2x6 Jacobian of nu_k at z, rows indexed by the two components,
// columns by (x1, y1, x2, y2, x3, y3). d(pi |z_j|^2) = 2 pi (x_j dx_j + y_j dy_j).
void nu_jacobian(const CVec& z, int k, double J[2][6]) {
    const double c = 2.0 * kPi;
    for (int col = 0; col < 6; ++col) J[0][col] = J[1][col] = 0.0;
    J[0][0] = c * z[0].real();
    J[0][1] = c * z[0].imag();
    J[0][4] = c * k * z[2].real();
    J[0][5] = c * k * z[2].imag();
    J[1][2] = c * z[1].real();
    J[1][3] = c * z[1].imag();
    J[1][4] = -c * z[2].real();
    J[1][5] = -c * z[2].imag();
}

// Project a raw 6-vector onto ker d(nu_k): subtract the components along the
// right singular vectors of the 2x6 Jacobian (closed-form 2x2 eigenproblem
// of J J^T; singular values below 1e-10 are dropped).
void project_to_kernel(const CVec& z, int k, double v[6]) {
    double J[2][6];
    nu_jacobian(z, k, J);
    const double a = J[0][0] * J[0][0] + J[0][1] * J[0][1] + J[0][2] * J[0][2] +
                     J[0][3] * J[0][3] + J[0][4] * J[0][4] + J[0][5] * J[0][5];
    double b = 0.0, c = 0.0;
    for (int i = 0; i < 6; ++i) {
        b += J[0][i] * J[1][i];
        c += J[1][i] * J[1][i];
    }
    // eigen-decomposition of [[a, b], [b, c]]
    const double tr = a + c, det = a * c - b * b;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    const double lam[2] = {tr / 2.0 + disc, tr / 2.0 - disc};
    for (int e = 0; e < 2; ++e) {
        if (lam[e] < 1e-20) continue;  // sigma = sqrt(lam) below threshold
        double u[2];
        if (std::abs(b) > 1e-300) {
            u[0] = lam[e] - c;
            u[1] = b;
        } else {
            u[0] = (e == 0) == (a >= c) ? 1.0 : 0.0;
            u[1] = 1.0 - u[0];
        }
        const double un = std::hypot(u[0], u[1]);
        u[0] /= un;
        u[1] /= un;
        // right singular vector = J^T u / sigma
        double w[6];
        double wn = 0.0;
        for (int i = 0; i < 6; ++i) {
            w[i] = u[0] * J[0][i] + u[1] * J[1][i];
            wn += w[i] * w[i];
        }
        wn = std::sqrt(wn);
        if (wn < 1e-10) continue;
        double dot = 0.0;
        for (int i = 0; i < 6; ++i) dot += v[i] * w[i] / wn;
        for (int i = 0; i < 6; ++i) v[i] -= dot * w[i] / wn;
    }
}

CVec add_real6(const CVec& z, const double v[6], double h) {
    CVec w(3);
    for (int j = 0; j < 3; ++j)
        w[static_cast<std::size_t>(j)] =
            z[static_cast<std::size_t>(j)] + h * Complex(v[2 * j], v[2 * j + 1]);
    return w;
}

double omega_std6(const double v[6], const double w[6]) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) s += v[2 * j] * w[2 * j + 1] - v[2 * j + 1] * w[2 * j];
    return s;
}

}  // namespace

ReducedFormReport verify_reduced_form(int k, int samples, std::uint64_t seed) {
    ReducedFormReport rep;
    rep.k = k;
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);

    for (int s = 0; s < samples; ++s) {
        // random point of Z_k: section over a random disk point, spread by a
        // random torus action
        const double m = rng.uniform(0.05, 0.95) * kPi / k;
        const double phase = rng.uniform();
        const Complex w = std::sqrt(m / kPi) * unit_phase(phase);
        CVec z = torus_action(rng.uniform(), rng.uniform(), section_g(w, k).point, k);

        double v1[6], v2[6];
        for (double* v : {v1, v2}) {
            for (int i = 0; i < 6; ++i) v[i] = rng.normal();
            project_to_kernel(z, k, v);
            double n = 0.0;
            for (int i = 0; i < 6; ++i) n += v[i] * v[i];
            n = std::sqrt(n);
            for (int i = 0; i < 6; ++i) v[i] /= n;
        }

        // dq by central differences, step calibrated to unit tangents
        const double h = 1e-6;
        const Complex dq1 =
            (q_map_extended(add_real6(z, v1, h), k) - q_map_extended(add_real6(z, v1, -h), k)) /
            (2.0 * h);
        const Complex dq2 =
            (q_map_extended(add_real6(z, v2, h), k) - q_map_extended(add_real6(z, v2, -h), k)) /
            (2.0 * h);

        const double lhs = omega_std6(v1, v2);
        const double rhs = (std::conj(dq1) * dq2).imag();  // rho drho ^ dphi = dx ^ dy
        rep.max_defect = std::max(rep.max_defect, std::abs(lhs - rhs));
        rep.control_defect = std::max(rep.control_defect, std::abs(lhs - 2.0 * rhs));
    }
    return rep;
}

TorusSpec lift_curve(const CurveSpec& curve, int k) {
    if (curve.container_area() > kPi / k + 1e-12) {
        std::ostringstream os;
        os << "lift_curve: container area " << curve.container_area() << " exceeds pi/k = "
           << kPi / k;
        throw CurveTooLarge(os.str());
    }
    if (curve.min_modulus() <= 0.0) throw CurveHitsOrigin("lift_curve: curve reaches the origin");
    return TorusSpec::brendel(k, curve);
}

double lift_consistency(const CurveSpec& curve, int k, int grid) {
    const TorusSpec spec = TorusSpec::brendel(k, curve);
    double worst = 0.0;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            for (int l = 0; l < grid; ++l) {
                const double th[2] = {static_cast<double>(i) / grid,
                                      static_cast<double>(j) / grid};
                const double t = static_cast<double>(l) / grid;
                const CVec via_action =
                    torus_action(th[0], th[1], section_g(curve.point(t), k).point, k);
                const CVec direct = spec.parametrize(std::span<const double>(th, 2), t);
                worst = std::max(worst, distance(via_action, direct));
            }
    return worst;
}

FiberCheck check_fibers(const TorusSpec& spec, int grid) {
    FiberCheck out;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            for (int l = 0; l < grid; ++l) {
                const double th[2] = {static_cast<double>(i) / grid,
                                      static_cast<double>(j) / grid};
                const double t = static_cast<double>(l) / grid;
                const CVec p = spec.parametrize(std::span<const double>(th, 2), t);
                const auto nu = nu_k(p, spec.k());
                out.max_level_residual =
                    std::max(out.max_level_residual, std::hypot(nu[0] - kPi, nu[1]));
                const Complex w = q_map_extended(p, spec.k());
                out.max_curve_dist =
                    std::max(out.max_curve_dist, spec.curve().closest_point(w).dist);
            }
    return out;
}

}  // namespace hbarlab
