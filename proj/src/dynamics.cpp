#include "hbarlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbarlab/errors.hpp"

namespace hbarlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// C^2 cutoff profile: 1 at eta <= 0, 0 at eta >= 1, flat to second order at
// both ends.
double smooth_step_down(double eta) {
    if (eta <= 0.0) return 1.0;
    if (eta >= 1.0) return 0.0;
    return 1.0 - eta * eta * eta * (10.0 - 15.0 * eta + 6.0 * eta * eta);
}

double smooth_step_down_deriv(double eta) {
    if (eta <= 0.0 || eta >= 1.0) return 0.0;
    const double u = eta * (1.0 - eta);
    return -30.0 * u * u;
}

}  // namespace

HamiltonianSpec HamiltonianSpec::plane_translation(double disk_area, double margin,
                                                   double cutoff_width, int coordinate) {
    if (!(disk_area > 0.0) || margin < 0.0 || !(cutoff_width > 0.0))
        throw ParameterOutOfRange("plane_translation: need disk_area > 0, margin >= 0, width > 0");
    HamiltonianSpec h;
    h.kind_ = Kind::PlaneTranslation;
    h.disk_area_ = disk_area;
    h.margin_ = margin;
    h.cutoff_width_ = cutoff_width;
    h.coordinate_ = coordinate;
    return h;
}

HamiltonianSpec HamiltonianSpec::projective_swap(int n, int slot_i, int slot_j) {
    if (n < 1 || slot_i == slot_j || slot_i < 0 || slot_j < 0 || slot_i > n || slot_j > n)
        throw ParameterOutOfRange("projective_swap: invalid slots");
    HamiltonianSpec h;
    h.kind_ = Kind::ProjectiveSwap;
    h.n_ = n;
    h.slot_i_ = slot_i;
    h.slot_j_ = slot_j;
    return h;
}

HamiltonianSpec HamiltonianSpec::scaled(double c) const {
    HamiltonianSpec h = *this;
    h.scale_ *= c;
    return h;
}

double HamiltonianSpec::shift() const {
    return 2.0 * std::sqrt(disk_area_ / kPi) + margin_;
}

double HamiltonianSpec::core_radius() const {
    const double r = std::sqrt(disk_area_ / kPi);
    return r * 1.02;  // strict cover of the closed disk
}

double HamiltonianSpec::support_radius() const { return core_radius() + cutoff_width_; }

double HamiltonianSpec::value(const CVec& p) const {
    if (kind_ == Kind::ProjectiveSwap) {
        const Complex d = p[static_cast<std::size_t>(slot_i_)] - p[static_cast<std::size_t>(slot_j_)];
        return scale_ * kPi * std::norm(d) / (2.0 * p.norm_sq());
    }
    // H = scale * shift * y * xi(x) * zeta(|y|): a separable C^2 plateau, so
    // the field is C^1 everywhere (a capsule-distance cutoff would kink
    // along the cap lines and spoil the integrator's accuracy)
    const Complex z = p[static_cast<std::size_t>(coordinate_)];
    const double d = shift();
    const double rho = core_radius();
    const double w = cutoff_width_;
    const double xi = smooth_step_down((-rho - z.real()) / w) *
                      smooth_step_down((z.real() - d - rho) / w);
    const double zeta = smooth_step_down((std::abs(z.imag()) - rho) / w);
    return scale_ * d * z.imag() * xi * zeta;
}

Complex HamiltonianSpec::plane_field(Complex z) const {
    // X_H = (dH/dy, -dH/dx)
    const double d = shift();
    const double rho = core_radius();
    const double w = cutoff_width_;
    const double x = z.real(), y = z.imag();
    const double xl = smooth_step_down((-rho - x) / w);
    const double xr = smooth_step_down((x - d - rho) / w);
    const double xi = xl * xr;
    const double dxi = (-smooth_step_down_deriv((-rho - x) / w) * xr +
                        smooth_step_down_deriv((x - d - rho) / w) * xl) /
                       w;
    const double ay = std::abs(y);
    const double zeta = smooth_step_down((ay - rho) / w);
    const double dzeta_dy =
        (y >= 0.0 ? 1.0 : -1.0) * smooth_step_down_deriv((ay - rho) / w) / w;
    const double hy = scale_ * d * xi * (zeta + y * dzeta_dy);
    const double hx = scale_ * d * y * dxi * zeta;
    return Complex(hy, -hx);
}

namespace {

struct Extremum {
    double max = -1e300;
    double min = 1e300;
    std::vector<double> argmax, argmin;
};

// grid extrema of f over the box, then shrinking refinement passes around
// both extrema
template <typename F>
Extremum box_extrema(F&& f, std::vector<double> lo, std::vector<double> hi, int grid) {
    const std::size_t dims = lo.size();
    Extremum ext;
    ext.argmax.assign(dims, 0.0);
    ext.argmin.assign(dims, 0.0);

    auto scan = [&](const std::vector<double>& a, const std::vector<double>& b, int g) {
        std::vector<double> x(dims);
        long total = 1;
        for (std::size_t i = 0; i < dims; ++i) total *= g;
        for (long c = 0; c < total; ++c) {
            long rem = c;
            for (std::size_t i = 0; i < dims; ++i) {
                const int idx = static_cast<int>(rem % g);
                rem /= g;
                x[i] = a[i] + (b[i] - a[i]) * idx / (g - 1);
            }
            const double v = f(x);
            if (v > ext.max) {
                ext.max = v;
                ext.argmax = x;
            }
            if (v < ext.min) {
                ext.min = v;
                ext.argmin = x;
            }
        }
    };

    scan(lo, hi, grid);
    for (int pass = 0; pass < 3; ++pass) {
        const double shrink = std::pow(0.5, pass + 1);
        for (const auto* arg : {&ext.argmax, &ext.argmin}) {
            std::vector<double> a(dims), b(dims);
            for (std::size_t i = 0; i < dims; ++i) {
                const double w = (hi[i] - lo[i]) * shrink * 2.0 / grid;
                a[i] = std::max(lo[i], (*arg)[i] - w);
                b[i] = std::min(hi[i], (*arg)[i] + w);
            }
            scan(a, b, 9);
        }
    }
    return ext;
}

Extremum hamiltonian_extrema(const HamiltonianSpec& h, int grid) {
    if (h.kind() == HamiltonianSpec::Kind::PlaneTranslation) {
        const double d = h.shift();
        const double s = h.support_radius() + h.cutoff_width();
        auto f = [&](const std::vector<double>& x) {
            CVec p(static_cast<std::size_t>(h.coordinate()) + 1);
            p[static_cast<std::size_t>(h.coordinate())] = Complex(x[0], x[1]);
            return h.value(p);
        };
        return box_extrema(f, {-s, -s}, {d + s, s}, grid);
    }
    // swap on CP^n: one affine polydisk chart per slot covers everything
    const int n = h.n();
    Extremum best;
    for (int slot = 0; slot <= n; ++slot) {
        auto f = [&](const std::vector<double>& x) {
            CVec w(static_cast<std::size_t>(n + 1));
            int src = 0;
            for (int i = 0; i <= n; ++i) {
                if (i == slot)
                    w[static_cast<std::size_t>(i)] = 1.0;
                else {
                    w[static_cast<std::size_t>(i)] =
                        Complex(x[static_cast<std::size_t>(2 * src)],
                                x[static_cast<std::size_t>(2 * src + 1)]);
                    ++src;
                }
            }
            return h.value(w);
        };
        std::vector<double> lo(static_cast<std::size_t>(2 * n), -1.0);
        std::vector<double> hi(static_cast<std::size_t>(2 * n), 1.0);
        const Extremum e = box_extrema(f, lo, hi, grid);
        best.max = std::max(best.max, e.max);
        best.min = std::min(best.min, e.min);
    }
    return best;
}

}  // namespace

double hofer_norm(const HamiltonianSpec& h, int grid) {
    if (grid < 2) throw ParameterOutOfRange("hofer_norm: grid too small");
    const Extremum e = hamiltonian_extrema(h, grid);
    return e.max - e.min;
}

HoferBreakdown hofer_breakdown(const HamiltonianSpec& h, int grid) {
    if (h.kind() != HamiltonianSpec::Kind::PlaneTranslation)
        throw DomainError("hofer_breakdown: translation Hamiltonians only");
    HoferBreakdown b;
    b.total = hofer_norm(h, grid);
    b.core = std::abs(h.scale()) * 2.0 * h.shift() * h.core_radius();
    b.overhead = b.total - b.core;
    return b;
}

CVec flow(const HamiltonianSpec& h, const CVec& p, double t, double rk_step) {
    if (t < 0.0 || t > 1.0) throw ParameterOutOfRange("flow: t in [0, 1]");
    if (h.kind() == HamiltonianSpec::Kind::ProjectiveSwap) {
        if (h.scale() != 1.0)
            throw DomainError("flow: the closed-form swap flow is for the unscaled Hamiltonian");
        const auto [i, j] = h.slots();
        CVec w = p;
        const Complex a = p[static_cast<std::size_t>(i)];
        const Complex b = p[static_cast<std::size_t>(j)];
        const Complex rot = std::polar(1.0, kPi * t);
        w[static_cast<std::size_t>(i)] = 0.5 * (a + b + rot * (a - b));
        w[static_cast<std::size_t>(j)] = 0.5 * (a + b + rot * (b - a));
        return w;
    }

    const auto c = static_cast<std::size_t>(h.coordinate());
    CVec out = p;
    Complex z = p[c];
    const double h0 = h.value(p);
    const int steps = std::max(1, static_cast<int>(std::ceil(t / rk_step)));
    const double dt = t / steps;
    CVec probe = p;
    for (int s = 0; s < steps; ++s) {
        const Complex k1 = h.plane_field(z);
        const Complex k2 = h.plane_field(z + 0.5 * dt * k1);
        const Complex k3 = h.plane_field(z + 0.5 * dt * k2);
        const Complex k4 = h.plane_field(z + dt * k3);
        z += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        probe[c] = z;
        const double drift = std::abs(h.value(probe) - h0);
        if (drift > 1e-6) {
            std::ostringstream os;
            os << "flow: energy drift " << drift << " at step " << s;
            throw StepFailure(os.str());
        }
    }
    out[c] = z;
    return out;
}

namespace {

// distance from a homogeneous point to the projective Chekanov torus:
// recover the torus parameters through the chart and rebuild. Falls back to
// +inf when the point leaves the chart.
double cpn_torus_distance(const TorusSpec& spec, const CVec& w) {
    const int slot = spec.chart_slot();
    if (std::abs(w[static_cast<std::size_t>(slot)]) < 1e-9 * w.norm()) return 1e300;
    CVec rep = w;
    rep *= 1.0 / w.norm();
    const Complex lead = rep[static_cast<std::size_t>(slot)];
    for (std::size_t i = 0; i < rep.dim(); ++i) rep[i] *= std::abs(lead) / lead;
    CVec zeta(rep.dim() - 1);
    std::size_t dst = 0;
    for (std::size_t i = 0; i < rep.dim(); ++i)
        if (static_cast<int>(i) != slot) zeta[dst++] = rep[i];
    const int n = spec.n();
    std::vector<double> th(static_cast<std::size_t>(n - 1));
    double sum = 0.0;
    for (int j = 0; j < n - 1; ++j) {
        th[static_cast<std::size_t>(j)] =
            std::arg(zeta[static_cast<std::size_t>(j)]) / kTwoPi;
        th[static_cast<std::size_t>(j)] -= std::floor(th[static_cast<std::size_t>(j)]);
        sum += th[static_cast<std::size_t>(j)];
    }
    const Complex z = zeta[static_cast<std::size_t>(n - 1)] *
                      std::polar(1.0, kTwoPi * sum);
    const double tc = spec.curve().closest_point(z).t;
    const CVec q = spec.parametrize(std::span<const double>(th.data(), th.size()), tc);
    return fs_chordal_distance(w, q);
}

// projective Chekanov torus sample, its chordal-metric neighbors, and the
// swapped image set
struct SwapSamples {
    std::vector<CVec> original;
    std::vector<CVec> swapped;
    double resolution = 0.0;
};

SwapSamples sample_swap_images(const TorusSpec& spec, const HamiltonianSpec& swap, long samples) {
    const int d = spec.dim();
    const int per_dim = std::max(2, static_cast<int>(std::llround(std::pow(
                                        static_cast<double>(samples), 1.0 / d))));
    SwapSamples out;
    std::vector<double> params(static_cast<std::size_t>(d), 0.0);
    long total = 1;
    for (int i = 0; i < d; ++i) total *= per_dim;
    out.original.reserve(static_cast<std::size_t>(total));
    out.swapped.reserve(static_cast<std::size_t>(total));
    for (long c = 0; c < total; ++c) {
        long rem = c;
        for (int i = 0; i < d; ++i) {
            params[static_cast<std::size_t>(i)] = static_cast<double>(rem % per_dim) / per_dim;
            rem /= per_dim;
        }
        const std::span<const double> angles(params.data(),
                                             static_cast<std::size_t>(spec.angle_count()));
        const CVec p = spec.parametrize(angles, params[static_cast<std::size_t>(d - 1)]);
        out.original.push_back(p);
        out.swapped.push_back(flow(swap, p, 1.0));
    }
    // resolution: largest step to a neighbor along the last axis
    double res = 0.0;
    for (long c = 0; c + 1 < total; ++c)
        res = std::max(res, fs_chordal_distance(out.original[static_cast<std::size_t>(c)],
                                                out.original[static_cast<std::size_t>(c + 1)]));
    out.resolution = res;
    return out;
}

DisjointnessCertificate point_sampling_certificate(const TorusSpec& spec,
                                                   const SwapSamples& s) {
    DisjointnessCertificate cert;
    cert.method = DisjointnessCertificate::Method::PointSampling;
    cert.samples = static_cast<long>(s.original.size());
    cert.sampling_resolution = s.resolution;
    // distance of each swapped sample to the torus itself (parameters
    // recovered through the chart), so a genuinely invariant torus reads 0
    double best = 1e300;
    std::size_t bi = 0;
    for (std::size_t i = 0; i < s.swapped.size(); ++i) {
        const double d = cpn_torus_distance(spec, s.swapped[i]);
        if (d < best) {
            best = d;
            bi = i;
        }
    }
    cert.separation = best;
    cert.verdict = best > 10.0 * s.resolution;
    cert.has_witness = !cert.verdict;
    cert.witness_before = s.original[bi];
    cert.witness_after = s.swapped[bi];
    {
        std::ostringstream os;
        os << "min distance to the torus " << best << " vs sampling resolution " << s.resolution;
        cert.detail = os.str();
    }
    return cert;
}

}  // namespace

DisjointnessCertificate swap_invariance_witness(int n, const CurveSpec& curve, int chart_slot,
                                                std::pair<int, int> swap_slots, long samples) {
    const TorusSpec spec = TorusSpec::chekanov_cpn(n, curve, chart_slot);
    const HamiltonianSpec swap =
        HamiltonianSpec::projective_swap(n, swap_slots.first, swap_slots.second);
    const SwapSamples s = sample_swap_images(spec, swap, samples);
    DisjointnessCertificate cert = point_sampling_certificate(spec, s);
    cert.has_witness = true;
    return cert;
}

SwapCertificate certify_swap_displacement(int n, double a, const CurveSpec& curve, int chart_slot,
                                          std::pair<int, int> swap_slots, long samples) {
    if (swap_slots.first != chart_slot && swap_slots.second != chart_slot) {
        // both swapped slots sit in chart coordinates: the torus itself is
        // swap-invariant, so no displacement is possible
        const auto witness = swap_invariance_witness(n, curve, chart_slot, swap_slots,
                                                     std::min<long>(samples, 4096));
        std::ostringstream os;
        os << "certify_swap_displacement: the swap must exchange a chart coordinate with the"
              " deleted-hyperplane slot "
           << chart_slot << "; slots (" << swap_slots.first << ", " << swap_slots.second
           << ") leave the torus invariant (coincidence witness at chordal distance "
           << witness.separation << ")";
        throw ChartMismatch(os.str());
    }
    if (std::abs(a - curve.target_area()) > 1e-12)
        throw ParameterOutOfRange("certify_swap_displacement: a must match the curve area");

    const TorusSpec spec = TorusSpec::chekanov_cpn(n, curve, chart_slot);
    const HamiltonianSpec swap =
        HamiltonianSpec::projective_swap(n, swap_slots.first, swap_slots.second);

    SwapCertificate cert;
    cert.s_max = curve.max_moment();
    cert.gap = kPi - n * cert.s_max - cert.s_max;

    cert.interval.method = DisjointnessCertificate::Method::MomentInterval;
    cert.interval.separation = cert.gap;
    cert.interval.verdict = cert.gap > 0.0;
    {
        std::ostringstream os;
        os << "torus moment diagonal s <= " << cert.s_max << "; swapped image coordinate pi - "
           << n << " s >= " << kPi - n * cert.s_max << "; gap " << cert.gap;
        cert.interval.detail = os.str();
    }
    if (!cert.interval.verdict) {
        // find a near-collision pair as the witness
        const auto s = sample_swap_images(spec, swap, std::min<long>(samples, 4096));
        const auto adv = point_sampling_certificate(spec, s);
        cert.interval.has_witness = true;
        cert.interval.witness_before = adv.witness_before;
        cert.interval.witness_after = adv.witness_after;
    }

    cert.sampling = point_sampling_certificate(spec, sample_swap_images(spec, swap, samples));
    return cert;
}

TranslationCertificate certify_translation_displacement(const TorusSpec& family, int coordinate,
                                                        double rk_step, int samples) {
    const int ambient = family.ambient_dim();
    if (coordinate < 0 || coordinate >= ambient)
        throw ParameterOutOfRange("certify_translation_displacement: bad coordinate");

    // confinement radius of the chosen coordinate over the whole family
    double radius = 0.0;
    double limit_value = 0.0;
    double optimal_floor = 0.0;
    switch (family.family()) {
        case TorusSpec::Family::Product:
            radius = std::sqrt(family.areas()[static_cast<std::size_t>(coordinate)] / kPi);
            limit_value = family.areas()[static_cast<std::size_t>(coordinate)];
            optimal_floor = limit_value;
            break;
        case TorusSpec::Family::ChekanovCn:
            radius = family.curve().max_modulus();
            limit_value = family.a();
            optimal_floor = family.curve().container_area();
            break;
        case TorusSpec::Family::Brendel: {
            const auto& curve = family.curve();
            if (coordinate == 0) {
                const double m = curve.min_modulus();
                radius = std::sqrt(std::max(0.0, 1.0 - family.k() * m * m));
            } else {
                radius = curve.max_modulus();
            }
            limit_value = family.a();
            optimal_floor = curve.container_area();
            break;
        }
        case TorusSpec::Family::ChekanovCPn: {
            // the translation would act in a chart coordinate; its support
            // must stay inside the unit chart ball together with the other
            // coordinates
            const auto& curve = family.curve();
            radius = curve.max_modulus();
            const double other = std::sqrt(static_cast<double>(family.n() - 1)) * radius;
            const double extent = 3.05 * radius + 0.10 * radius;  // shift + support slack
            if (extent * extent + other * other >= 1.0) {
                const double amax =
                    kPi / (3.15 * 3.15 + static_cast<double>(family.n() - 1));
                std::ostringstream os;
                os << "certify_translation_displacement: translated support leaves the chart"
                      " ball; maximal feasible confinement area is about "
                   << amax;
                throw DoesNotFit(os.str());
            }
            limit_value = family.a();
            optimal_floor = curve.container_area();
            break;
        }
    }

    TranslationCertificate cert;
    cert.confinement_area = kPi * radius * radius;
    cert.limit_value = limit_value;
    cert.optimal_floor = optimal_floor;

    const HamiltonianSpec h = HamiltonianSpec::plane_translation(
        cert.confinement_area, 0.05 * radius, 0.3 * radius, coordinate);

    cert.support_radius = h.support_radius();
    cert.shift = h.shift();
    const auto breakdown = hofer_breakdown(h, 512);
    cert.measured_energy = breakdown.total;
    cert.core_energy = breakdown.core;
    cert.overhead = breakdown.overhead;
    cert.ratio = cert.measured_energy / cert.optimal_floor;

    // interval separation in the chosen coordinate: |z| <= radius before,
    // |z - shift| <= radius after, so the gap is the margin
    cert.interval.method = DisjointnessCertificate::Method::MomentInterval;
    cert.interval.separation = h.shift() - 2.0 * radius;
    {
        std::ostringstream os;
        os << "coordinate " << coordinate + 1 << " confined to |z| <= " << radius
           << "; translated by " << h.shift() << "; gap " << cert.interval.separation;
        cert.interval.detail = os.str();
    }

    // RK4 cross-check on sampled torus points: inside the capsule the flow
    // is an exact translation
    const int d = family.dim();
    const int per_dim = std::max(2, static_cast<int>(std::llround(
                                        std::pow(static_cast<double>(samples), 1.0 / d))));
    std::vector<double> params(static_cast<std::size_t>(d), 0.0);
    long total = 1;
    for (int i = 0; i < d; ++i) total *= per_dim;
    for (long c = 0; c < total; ++c) {
        long rem = c;
        for (int i = 0; i < d; ++i) {
            params[static_cast<std::size_t>(i)] = static_cast<double>(rem % per_dim) / per_dim;
            rem /= per_dim;
        }
        const std::span<const double> angles(params.data(),
                                             static_cast<std::size_t>(family.angle_count()));
        const double t = family.uses_curve() ? params[static_cast<std::size_t>(d - 1)] : 0.0;
        const CVec p = family.parametrize(angles, t);
        const CVec q = flow(h, p, 1.0, rk_step);
        CVec expect = p;
        expect[static_cast<std::size_t>(coordinate)] += h.shift();
        cert.flow_deviation = std::max(cert.flow_deviation, distance(q, expect));
        cert.energy_drift =
            std::max(cert.energy_drift, std::abs(h.value(q) - h.value(p)));
    }
    cert.interval.samples = total;
    cert.interval.verdict = cert.interval.separation > 0.0 && cert.flow_deviation < 1e-6;
    return cert;
}

}  // namespace hbarlab
