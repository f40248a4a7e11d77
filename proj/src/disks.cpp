#include "hbarlab/disks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbarlab/errors.hpp"
#include "hbarlab/numeric.hpp"
#include "hbarlab/reduction.hpp"

namespace hbarlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(double theta) {
    return Complex(std::cos(kTwoPi * theta), std::sin(kTwoPi * theta));
}

Complex curve_centroid(const CurveSpec& curve) {
    const int n = 4096;
    Complex s = 0.0;
    for (int i = 0; i < n; ++i) s += curve.point(static_cast<double>(i) / n);
    return s / static_cast<double>(n);
}

double wrap_unit(double x) { return x - std::floor(x); }

}  // namespace

Complex default_base_point(const CurveSpec& curve) {
    const int n = 4096;
    double best = -1.0;
    for (int i = 0; i < n; ++i) best = std::max(best, std::abs(curve.point(static_cast<double>(i) / n)));
    for (int i = 0; i < n; ++i) {
        const Complex z = curve.point(static_cast<double>(i) / n);
        if (std::abs(z) >= best - 1e-12) return z;
    }
    return curve.point(0.0);
}

DiskMap standard_disk(DiskFamily family, const TorusSpec& spec, Complex w0) {
    DiskMap d;
    d.ambient = spec.ambient_dim();

    if (family == DiskFamily::Alpha || family == DiskFamily::Beta1 ||
        family == DiskFamily::Beta2) {
        if (spec.family() != TorusSpec::Family::Brendel)
            throw DomainError("standard_disk: alpha/beta disks need the k-family torus");
    } else if (spec.family() != TorusSpec::Family::ChekanovCn) {
        throw DomainError("standard_disk: the Chekanov alpha disk needs a C^n Chekanov torus");
    }

    const CurveSpec& curve = spec.curve();

    if (family == DiskFamily::Beta1 || family == DiskFamily::Beta2) {
        if (w0 == Complex{}) w0 = default_base_point(curve);
        const auto hit = curve.closest_point(w0);
        if (hit.dist > 1e-9) {
            std::ostringstream os;
            os << "standard_disk: base point (" << w0.real() << ", " << w0.imag()
               << ") is not on the curve (distance " << hit.dist << ")";
            throw BadBasePoint(os.str());
        }
        const double t0 = hit.t;
        const int k = spec.k();
        const double c1 = std::sqrt(1.0 - k * std::norm(w0));
        const double rho = std::abs(w0);

        if (family == DiskFamily::Beta1) {
            d.label = "beta1";
            d.holomorphic = true;
            d.eval = [c1, rho, w0, k](Complex z) {
                Complex zk = 1.0;
                for (int i = 0; i < k; ++i) zk *= z;
                return CVec{c1 * z, rho, w0 * zk};
            };
            d.boundary = [c1, rho, w0, k](double t) {
                return CVec{c1 * unit_phase(t), rho, w0 * unit_phase(k * t)};
            };
            d.boundary_derivative = [c1, rho, w0, k](double t) {
                return CVec{Complex(0, kTwoPi) * c1 * unit_phase(t), 0.0,
                            Complex(0, kTwoPi * k) * w0 * unit_phase(k * t)};
            };
            d.boundary_frame = [spec, t0](double t) {
                const double th[2] = {t, 0.0};
                return spec.tangents(std::span<const double>(th, 2), t0);
            };
        } else {
            d.label = "beta2";
            d.holomorphic = false;  // third slot is anti-holomorphic
            d.eval = [c1, rho, w0](Complex z) {
                return CVec{c1, rho * z, w0 * std::conj(z)};
            };
            d.boundary = [c1, rho, w0](double t) {
                return CVec{c1, rho * unit_phase(t), w0 * unit_phase(-t)};
            };
            d.boundary_derivative = [c1, rho, w0](double t) {
                return CVec{0.0, Complex(0, kTwoPi) * rho * unit_phase(t),
                            Complex(0, -kTwoPi) * w0 * unit_phase(-t)};
            };
            d.boundary_frame = [spec, t0](double t) {
                const double th[2] = {0.0, t};
                return spec.tangents(std::span<const double>(th, 2), t0);
            };
        }
        return d;
    }

    // the filling-disk families: radial interpolation from the curve centroid
    const Complex anchor = curve_centroid(curve);
    auto fill = [curve, anchor](Complex zeta) {
        const double s = std::abs(zeta);
        const double t = s > 0.0 ? wrap_unit(std::arg(zeta) / kTwoPi) : 0.0;
        return anchor + s * (curve.point(t) - anchor);
    };

    if (family == DiskFamily::Alpha) {
        const int k = spec.k();
        d.label = "alpha";
        d.holomorphic = false;
        d.eval = [fill, k](Complex zeta) {
            const Complex w = fill(zeta);
            return CVec{std::sqrt(std::max(0.0, 1.0 - k * std::norm(w))), std::abs(w), w};
        };
        d.boundary = [curve, k](double t) {
            const Complex z = curve.point(t);
            return CVec{std::sqrt(1.0 - k * std::norm(z)), std::abs(z), z};
        };
        d.boundary_derivative = [curve, k](double t) {
            const Complex z = curve.point(t);
            const Complex zp = curve.derivative(t);
            const double rho = std::abs(z);
            const double drho = (std::conj(z) * zp).real() / rho;
            const double r1 = std::sqrt(1.0 - k * std::norm(z));
            return CVec{-k * rho * drho / r1, drho, zp};
        };
        d.boundary_frame = [spec](double t) {
            const double th[2] = {0.0, 0.0};
            return spec.tangents(std::span<const double>(th, 2), t);
        };
        d.boundary_breakpoints = curve.piece_boundaries();
        return d;
    }

    // ChekanovAlpha
    const int n = spec.n();
    d.label = "chekanov-alpha";
    d.holomorphic = false;
    d.ambient = n;
    d.eval = [fill, n](Complex zeta) {
        const Complex w = fill(zeta);
        CVec u(static_cast<std::size_t>(n));
        for (int j = 0; j < n - 1; ++j) u[static_cast<std::size_t>(j)] = std::abs(w);
        u[static_cast<std::size_t>(n - 1)] = w;
        return u;
    };
    d.boundary = [curve, n](double t) {
        const Complex z = curve.point(t);
        CVec u(static_cast<std::size_t>(n));
        for (int j = 0; j < n - 1; ++j) u[static_cast<std::size_t>(j)] = std::abs(z);
        u[static_cast<std::size_t>(n - 1)] = z;
        return u;
    };
    d.boundary_derivative = [curve, n](double t) {
        const Complex z = curve.point(t);
        const Complex zp = curve.derivative(t);
        const double drho = (std::conj(z) * zp).real() / std::abs(z);
        CVec u(static_cast<std::size_t>(n));
        for (int j = 0; j < n - 1; ++j) u[static_cast<std::size_t>(j)] = drho;
        u[static_cast<std::size_t>(n - 1)] = zp;
        return u;
    };
    d.boundary_frame = [spec, n](double t) {
        std::vector<double> th(static_cast<std::size_t>(n - 1), 0.0);
        return spec.tangents(std::span<const double>(th.data(), th.size()), t);
    };
    d.boundary_breakpoints = curve.piece_boundaries();
    return d;
}

double disk_area(const DiskMap& u, double abs_tol) {
    return boundary_line_integral(u.boundary, u.boundary_derivative, abs_tol,
                                  u.boundary_breakpoints);
}

int maslov_index(const DiskMap& u) {
    auto det2 = [&](double t) {
        const auto frame = u.boundary_frame(t);
        const Complex d = complex_det(frame);
        if (std::abs(d) <= 1e-8) {
            std::ostringstream os;
            os << "maslov_index: frame determinant " << std::abs(d) << " at t = " << t;
            throw DegenerateFrame(os.str());
        }
        return d * d;
    };
    return winding_number_adaptive(det2, 256).winding;
}

Hypersurface Hypersurface::plane13(const TorusSpec& spec) {
    Hypersurface s;
    s.kind_ = Kind::Plane13;
    s.check_disjoint(spec);
    return s;
}

Hypersurface Hypersurface::plane12(const TorusSpec& spec) {
    Hypersurface s;
    s.kind_ = Kind::Plane12;
    s.check_disjoint(spec);
    return s;
}

Hypersurface Hypersurface::sigma_f(const TorusSpec& spec, Complex w0) {
    if (spec.family() != TorusSpec::Family::Brendel)
        throw DomainError("sigma_f: needs the k-family torus");
    Hypersurface s;
    s.kind_ = Kind::SigmaF;
    s.k_ = spec.k();
    const CurveSpec& curve = spec.curve();
    if (w0 == Complex{}) w0 = default_base_point(curve);

    // interior point of the filling disk: mid-annulus modulus, 13 degrees
    // past the negative real axis (off every real multiple of w0)
    double mid;
    if (curve.kind() == CurveSpec::Kind::Keyhole)
        mid = 0.5 * (curve.inner_radius() + curve.outer_radius());
    else
        mid = std::abs(curve.center());
    Complex eps_point = std::polar(mid, kPi + 13.0 * kPi / 180.0);
    if (curve.kind() == CurveSpec::Kind::Circle)
        eps_point = curve.center() + std::polar(0.5 * curve.radius(), std::arg(curve.center()) + kPi / 2.0);
    s.epsilon_point_ = eps_point;

    // the point must be enclosed by the curve
    const auto tr = winding_number_adaptive(
        [&](double t) { return curve.point(t) - eps_point; }, 2048);
    if (tr.winding != 1)
        throw DomainError("sigma_f: the chosen interior point is not enclosed by the curve");
    const double sins = std::abs(std::sin(std::arg(eps_point) - std::arg(w0)));
    if (sins < 1e-9)
        throw DomainError("sigma_f: interior point is real proportional to the base point");

    // eps = F(section(eps_point)) with F(z) = z_1^{-k} z_2 z_3
    const double r1sq = 1.0 - s.k_ * std::norm(eps_point);
    s.epsilon_ = std::pow(r1sq, -0.5 * s.k_) * std::abs(eps_point) * eps_point;
    s.check_disjoint(spec);
    return s;
}

Complex Hypersurface::g(const CVec& z) const {
    switch (kind_) {
        case Kind::Plane13: return z[1];
        case Kind::Plane12: return z[2];
        case Kind::SigmaF: {
            Complex zk = 1.0;
            for (int i = 0; i < k_; ++i) zk *= z[0];
            return epsilon_ * zk - z[1] * z[2];
        }
    }
    return {};
}

void Hypersurface::check_disjoint(const TorusSpec& spec) {
    const int grid = 24;
    double m = 1e300;
    const int d = spec.dim();
    std::vector<double> params(static_cast<std::size_t>(d), 0.0);
    const long total = static_cast<long>(std::pow(static_cast<double>(grid), d));
    for (long c = 0; c < total; ++c) {
        long rem = c;
        for (int i = 0; i < d; ++i) {
            params[static_cast<std::size_t>(i)] = static_cast<double>(rem % grid) / grid;
            rem /= grid;
        }
        const std::span<const double> angles(params.data(),
                                             static_cast<std::size_t>(spec.angle_count()));
        const double t = spec.uses_curve() ? params[static_cast<std::size_t>(d - 1)] : 0.0;
        m = std::min(m, std::abs(g(spec.parametrize(angles, t))));
    }
    min_on_torus_ = m;
    if (m <= 1e-6) {
        std::ostringstream os;
        os << "hypersurface meets the torus: min |g| = " << m << " on a " << grid << "^" << d
           << " grid";
        throw DomainError(os.str());
    }
}

int intersection_number(const DiskMap& u, const Hypersurface& S) {
    auto f = [&](double t) { return S.g(u.boundary(t)); };
    double m = 1e300;
    for (int i = 0; i < 2048; ++i) m = std::min(m, std::abs(f(static_cast<double>(i) / 2048)));
    if (m <= 1e-9) {
        std::ostringstream os;
        os << "intersection_number: boundary reaches the divisor, min |g o u| = " << m;
        throw BoundaryTouchesDivisor(os.str());
    }
    return winding_number_adaptive(f, 512).winding;
}

Complex blaschke(Complex w, Complex z) {
    return ((1.0 - std::conj(w)) / (1.0 - w)) * ((z - w) / (1.0 - std::conj(w) * z));
}

Complex blaschke_derivative(Complex w, Complex z) {
    const Complex den = 1.0 - std::conj(w) * z;
    return ((1.0 - std::conj(w)) / (1.0 - w)) * (1.0 - std::norm(w)) / (den * den);
}

BrendelParams brendel_parameters(const TorusSpec& spec, const CVec& p) {
    BrendelParams bp;
    bp.theta1 = wrap_unit(std::arg(p[0]) / kTwoPi);
    bp.theta2 = wrap_unit(std::arg(p[1]) / kTwoPi);
    const Complex z = q_map_extended(p, spec.k());
    bp.t = spec.curve().closest_point(z).t;
    return bp;
}

double boundary_on_torus_residual(const DiskMap& u, const TorusSpec& spec, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        const CVec p = u.boundary(t);
        CVec q;
        if (spec.family() == TorusSpec::Family::Brendel) {
            const auto bp = brendel_parameters(spec, p);
            const double th[2] = {bp.theta1, bp.theta2};
            q = spec.parametrize(std::span<const double>(th, 2), bp.t);
        } else if (spec.family() == TorusSpec::Family::ChekanovCn) {
            const int n = spec.n();
            std::vector<double> th(static_cast<std::size_t>(n - 1));
            double sum = 0.0;
            for (int j = 0; j < n - 1; ++j) {
                th[static_cast<std::size_t>(j)] =
                    wrap_unit(std::arg(p[static_cast<std::size_t>(j)]) / kTwoPi);
                sum += th[static_cast<std::size_t>(j)];
            }
            const Complex z = p[static_cast<std::size_t>(n - 1)] * unit_phase(sum);
            const double tc = spec.curve().closest_point(z).t;
            q = spec.parametrize(std::span<const double>(th.data(), th.size()), tc);
        } else {
            throw DomainError("boundary_on_torus_residual: unsupported family");
        }
        worst = std::max(worst, distance(p, q));
    }
    return worst;
}

double cauchy_riemann_residual(const DiskMap& u, int grid) {
    const double h = 1e-6;
    double worst = 0.0;
    for (int i = 1; i <= grid; ++i) {
        const double s = 0.98 * i / grid;
        for (int j = 0; j < grid; ++j) {
            const Complex z = std::polar(s, kTwoPi * j / grid);
            const CVec fx = (1.0 / (2.0 * h)) * (u.eval(z + h) - u.eval(z - h));
            const CVec fy =
                (1.0 / (2.0 * h)) * (u.eval(z + Complex(0, h)) - u.eval(z - Complex(0, h)));
            for (std::size_t c = 0; c < fx.dim(); ++c) {
                const Complex dbar = 0.5 * (fx[c] + Complex(0, 1) * fy[c]);
                worst = std::max(worst, std::abs(dbar));
            }
        }
    }
    return worst;
}

namespace {

struct ZeroGroup {
    Complex w;
    int multiplicity = 0;
    double safe_radius = 0.0;
};

std::vector<ZeroGroup> group_zeros(const std::vector<Complex>& zeros) {
    std::vector<ZeroGroup> gs;
    for (const Complex& z : zeros) {
        bool merged = false;
        for (auto& g : gs)
            if (std::abs(g.w - z) < 1e-12) {
                ++g.multiplicity;
                merged = true;
                break;
            }
        if (!merged) gs.push_back({z, 1, 0.0});
    }
    for (auto& g : gs) {
        double r = std::min(1e-3, 0.25 * (1.0 - std::abs(g.w)));
        for (const auto& o : gs)
            if (&o != &g) r = std::min(r, 0.25 * std::abs(o.w - g.w));
        g.safe_radius = r;
    }
    return gs;
}

}  // namespace

DiskMap blaschke_transport(const DiskMap& u, const TorusSpec& spec,
                           const std::vector<Complex>& zeros, TransportDirection dir) {
    if (!u.holomorphic)
        throw DomainError("blaschke_transport: the disk must be holomorphic");
    if (spec.family() != TorusSpec::Family::Brendel)
        throw DomainError("blaschke_transport: needs the k-family torus");
    for (const Complex& w : zeros)
        if (std::abs(w) >= 1.0)
            throw DomainError("blaschke_transport: zeros must be interior points");

    const std::size_t divided = dir == TransportDirection::MoveFromSlot2 ? 1 : 2;
    const std::size_t multiplied = dir == TransportDirection::MoveFromSlot2 ? 2 : 1;

    const auto groups = group_zeros(zeros);
    for (const auto& g : groups) {
        const double r = std::max(g.safe_radius, 1e-6);
        const auto tr = winding_number_adaptive(
            [&](double s) { return u.eval(g.w + std::polar(r, kTwoPi * s))[divided]; }, 256);
        if (tr.winding < g.multiplicity) {
            std::ostringstream os;
            os << "blaschke_transport: (" << g.w.real() << ", " << g.w.imag()
               << ") has local winding " << tr.winding << " in slot " << divided + 1
               << ", need multiplicity " << g.multiplicity;
            throw NotAZero(os.str());
        }
    }

    auto product = [zeros](Complex z) {
        Complex b = 1.0;
        for (const Complex& w : zeros) b *= blaschke(w, z);
        return b;
    };
    auto product_log_derivative = [zeros](Complex z) {
        // B'/B = sum f'_w / f_w = sum [1/(z-w) + conj(w)/(1-conj(w) z)]
        Complex s = 0.0;
        for (const Complex& w : zeros)
            s += 1.0 / (z - w) + std::conj(w) / (1.0 - std::conj(w) * z);
        return s;
    };

    DiskMap out;
    out.ambient = u.ambient;
    out.holomorphic = true;
    {
        std::ostringstream os;
        os << u.label << (dir == TransportDirection::MoveFromSlot2 ? " - " : " + ")
           << zeros.size() << "*beta2";
        out.label = os.str();
    }

    auto base_eval = u.eval;
    auto raw = [base_eval, product, divided, multiplied](Complex z) {
        CVec v = base_eval(z);
        const Complex b = product(z);
        v[divided] /= b;
        v[multiplied] *= b;
        return v;
    };
    out.eval = [raw, groups](Complex z) {
        for (const auto& g : groups) {
            if (std::abs(z - g.w) < g.safe_radius) {
                // removable singularity: mean value over a small circle
                const double r = 2.0 * g.safe_radius;
                CVec acc = raw(z + Complex(r, 0.0));
                const int m = 32;
                for (int i = 1; i < m; ++i)
                    acc += raw(z + std::polar(r, kTwoPi * i / m));
                acc *= 1.0 / m;
                return acc;
            }
        }
        return raw(z);
    };

    auto base_boundary = u.boundary;
    auto base_boundary_derivative = u.boundary_derivative;
    out.boundary = [base_boundary, product, divided, multiplied](double t) {
        CVec v = base_boundary(t);
        const Complex b = product(unit_phase(t));
        v[divided] /= b;
        v[multiplied] *= b;
        return v;
    };
    out.boundary_derivative = [base_boundary, base_boundary_derivative, product,
                               product_log_derivative, divided, multiplied](double t) {
        const Complex z = unit_phase(t);
        const Complex dz = Complex(0, kTwoPi) * z;
        const CVec v = base_boundary(t);
        const CVec dv = base_boundary_derivative(t);
        const Complex b = product(z);
        const Complex dlog = product_log_derivative(z) * dz;  // (B'/B) dz/dt
        CVec w = dv;
        w[divided] = (dv[divided] - v[divided] * dlog) / b;
        w[multiplied] = dv[multiplied] * b + v[multiplied] * dlog * b;
        return w;
    };
    auto bd = out.boundary;
    out.boundary_frame = [spec, bd](double t) {
        const auto bp = brendel_parameters(spec, bd(t));
        const double th[2] = {bp.theta1, bp.theta2};
        return spec.tangents(std::span<const double>(th, 2), bp.t);
    };
    return out;
}

DiskReport analyze_disk(const DiskMap& u, const TorusSpec& spec, const Hypersurface& s13,
                        const Hypersurface& s12, const Hypersurface& sf, bool with_cr_check) {
    DiskReport r;
    r.label = u.label;
    r.area = disk_area(u);
    r.maslov = maslov_index(u);
    r.plane13 = intersection_number(u, s13);
    r.plane12 = intersection_number(u, s12);
    r.sigma_f = intersection_number(u, sf);
    const int k = spec.k();
    r.r = r.plane13;
    r.q = (static_cast<long long>(r.plane12) + r.r) / k;
    r.p = static_cast<long long>(r.sigma_f) - r.q * k;
    r.boundary_residual = boundary_on_torus_residual(u, spec);
    if (u.holomorphic && with_cr_check) r.cr_residual = cauchy_riemann_residual(u);
    return r;
}

}  // namespace hbarlab
