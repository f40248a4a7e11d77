#include "hbarlab/tori.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hbarlab/errors.hpp"
#include "hbarlab/rng.hpp"

namespace hbarlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(double theta) {  // e^{2 pi i theta}
    return Complex(std::cos(kTwoPi * theta), std::sin(kTwoPi * theta));
}
}  // namespace

TorusSpec TorusSpec::product(std::vector<double> areas) {
    if (areas.empty()) throw ParameterOutOfRange("product torus: need at least one area");
    for (double a : areas)
        if (!(a > 0.0)) throw ParameterOutOfRange("product torus: areas must be positive");
    TorusSpec s;
    s.family_ = Family::Product;
    s.n_ = static_cast<int>(areas.size());
    s.areas_ = std::move(areas);
    return s;
}

TorusSpec TorusSpec::chekanov_cn(int n, CurveSpec curve) {
    if (n < 2) throw ParameterOutOfRange("chekanov torus: need n >= 2");
    if (curve.container_area() > kPi / n + 1e-12) {
        std::ostringstream os;
        os << "chekanov torus: curve container " << curve.container_area()
           << " exceeds pi/n = " << kPi / n;
        throw ParameterOutOfRange(os.str());
    }
    TorusSpec s;
    s.family_ = Family::ChekanovCn;
    s.n_ = n;
    s.curve_ = std::move(curve);
    return s;
}

TorusSpec TorusSpec::chekanov_cpn(int n, CurveSpec curve, int chart_slot) {
    TorusSpec base = chekanov_cn(n, std::move(curve));
    if (n * base.curve_->container_area() >= kPi) {
        std::ostringstream os;
        os << "projective chekanov torus: n * container = " << n * base.curve_->container_area()
           << " must stay below pi to fit the chart ball";
        throw ParameterOutOfRange(os.str());
    }
    if (chart_slot < 0 || chart_slot > n)
        throw ParameterOutOfRange("projective chekanov torus: chart_slot out of range");
    base.family_ = Family::ChekanovCPn;
    base.chart_slot_ = chart_slot;
    return base;
}

TorusSpec TorusSpec::brendel(int k, CurveSpec curve) {
    if (k < 2) throw ParameterOutOfRange("brendel torus: need k >= 2");
    if (curve.container_area() > kPi / k + 1e-12) {
        std::ostringstream os;
        os << "brendel torus: curve container " << curve.container_area() << " exceeds pi/k = "
           << kPi / k;
        throw CurveTooLarge(os.str());
    }
    const double a = curve.target_area();
    if (a < kPi / (k + 1) - 1e-12 || a >= kPi / k) {
        std::ostringstream os;
        os << "brendel torus: area " << a << " outside [pi/(k+1), pi/k) = [" << kPi / (k + 1)
           << ", " << kPi / k << ")";
        throw ParameterOutOfRange(os.str());
    }
    TorusSpec s;
    s.family_ = Family::Brendel;
    s.k_ = k;
    s.n_ = 3;
    s.curve_ = std::move(curve);
    return s;
}

int TorusSpec::dim() const {
    switch (family_) {
        case Family::Product: return n_;
        case Family::ChekanovCn:
        case Family::ChekanovCPn: return n_;
        case Family::Brendel: return 3;
    }
    return 0;
}

int TorusSpec::angle_count() const { return uses_curve() ? dim() - 1 : dim(); }

int TorusSpec::ambient_dim() const {
    return family_ == Family::ChekanovCPn ? n_ + 1 : n_;
}

double TorusSpec::a() const {
    if (!uses_curve()) throw DomainError("a(): product torus has no curve parameter");
    return curve_->target_area();
}

const CurveSpec& TorusSpec::curve() const {
    if (!curve_) throw DomainError("curve(): product torus has no curve");
    return *curve_;
}

namespace {

CVec chekanov_point(int n, const CurveSpec& curve, std::span<const double> angles, double t) {
    const Complex z = curve.point(t);
    const double rho = std::abs(z);
    CVec u(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int j = 0; j < n - 1; ++j) {
        u[static_cast<std::size_t>(j)] = rho * unit_phase(angles[static_cast<std::size_t>(j)]);
        sum += angles[static_cast<std::size_t>(j)];
    }
    // phase constraint: the angles sum to 1 over all n factors
    u[static_cast<std::size_t>(n - 1)] = unit_phase(1.0 - sum) * z;
    return u;
}

std::vector<CVec> chekanov_tangents(int n, const CurveSpec& curve,
                                    std::span<const double> angles, double t) {
    const Complex z = curve.point(t);
    const Complex zp = curve.derivative(t);
    const double rho = std::abs(z);
    const double drho = (std::conj(z) * zp).real() / rho;
    double sum = 0.0;
    for (int j = 0; j < n - 1; ++j) sum += angles[static_cast<std::size_t>(j)];
    const Complex last_phase = unit_phase(1.0 - sum);

    std::vector<CVec> frame;
    frame.reserve(static_cast<std::size_t>(n));
    const CVec u = chekanov_point(n, curve, angles, t);
    for (int j = 0; j < n - 1; ++j) {
        CVec v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(j)] = Complex(0, kTwoPi) * u[static_cast<std::size_t>(j)];
        v[static_cast<std::size_t>(n - 1)] =
            -Complex(0, kTwoPi) * u[static_cast<std::size_t>(n - 1)];
        frame.push_back(std::move(v));
    }
    CVec vt(static_cast<std::size_t>(n));
    for (int j = 0; j < n - 1; ++j)
        vt[static_cast<std::size_t>(j)] = drho * unit_phase(angles[static_cast<std::size_t>(j)]);
    vt[static_cast<std::size_t>(n - 1)] = last_phase * zp;
    frame.push_back(std::move(vt));
    return frame;
}

}  // namespace

CVec TorusSpec::parametrize(std::span<const double> angles, double t) const {
    if (static_cast<int>(angles.size()) != angle_count())
        throw DomainError("parametrize: wrong number of angles");
    switch (family_) {
        case Family::Product: {
            CVec u(static_cast<std::size_t>(n_));
            for (int j = 0; j < n_; ++j)
                u[static_cast<std::size_t>(j)] =
                    std::sqrt(areas_[static_cast<std::size_t>(j)] / kPi) *
                    unit_phase(angles[static_cast<std::size_t>(j)]);
            return u;
        }
        case Family::ChekanovCn:
            return chekanov_point(n_, *curve_, angles, t);
        case Family::ChekanovCPn:
            return darboux_chart(chekanov_point(n_, *curve_, angles, t), chart_slot_);
        case Family::Brendel: {
            const Complex z = curve_->point(t);
            const double rho2 = std::norm(z);
            const double s = 1.0 - k_ * rho2;
            if (s <= 0.0) throw DomainError("brendel torus: curve point with 1 - k|z|^2 <= 0");
            CVec u(3);
            u[0] = std::sqrt(s) * unit_phase(angles[0]);
            u[1] = std::abs(z) * unit_phase(angles[1]);
            u[2] = unit_phase(k_ * angles[0] - angles[1]) * z;
            return u;
        }
    }
    throw DomainError("parametrize: unknown family");
}

std::vector<CVec> TorusSpec::tangents(std::span<const double> angles, double t) const {
    if (static_cast<int>(angles.size()) != angle_count())
        throw DomainError("tangents: wrong number of angles");
    switch (family_) {
        case Family::Product: {
            std::vector<CVec> frame;
            frame.reserve(static_cast<std::size_t>(n_));
            for (int j = 0; j < n_; ++j) {
                CVec v(static_cast<std::size_t>(n_));
                v[static_cast<std::size_t>(j)] =
                    Complex(0, kTwoPi) * std::sqrt(areas_[static_cast<std::size_t>(j)] / kPi) *
                    unit_phase(angles[static_cast<std::size_t>(j)]);
                frame.push_back(std::move(v));
            }
            return frame;
        }
        case Family::ChekanovCn:
            return chekanov_tangents(n_, *curve_, angles, t);
        case Family::ChekanovCPn: {
            const CVec zeta = chekanov_point(n_, *curve_, angles, t);
            const auto dzeta = chekanov_tangents(n_, *curve_, angles, t);
            const double s0 = std::sqrt(std::max(0.0, 1.0 - zeta.norm_sq()));
            std::vector<CVec> frame;
            frame.reserve(dzeta.size());
            for (const auto& v : dzeta) {
                // d sqrt(1 - |zeta|^2) = -Re<zeta, v> / s0
                const double ds0 = -hermitian_dot(zeta, v).real() / s0;
                CVec w(static_cast<std::size_t>(n_ + 1));
                int src = 0;
                for (int slot = 0; slot <= n_; ++slot) {
                    if (slot == chart_slot_)
                        w[static_cast<std::size_t>(slot)] = ds0;
                    else
                        w[static_cast<std::size_t>(slot)] = v[static_cast<std::size_t>(src++)];
                }
                frame.push_back(std::move(w));
            }
            return frame;
        }
        case Family::Brendel: {
            const Complex z = curve_->point(t);
            const Complex zp = curve_->derivative(t);
            const double rho = std::abs(z);
            const double s = 1.0 - k_ * rho * rho;
            if (s <= 0.0) throw DomainError("brendel torus: curve point with 1 - k|z|^2 <= 0");
            const double r1 = std::sqrt(s);
            const double drho = (std::conj(z) * zp).real() / rho;
            const Complex e1 = unit_phase(angles[0]);
            const Complex e2 = unit_phase(angles[1]);
            const Complex e3 = unit_phase(k_ * angles[0] - angles[1]);

            CVec d1(3), d2(3), dt(3);
            d1[0] = Complex(0, kTwoPi) * r1 * e1;
            d1[2] = Complex(0, kTwoPi * k_) * e3 * z;
            d2[1] = Complex(0, kTwoPi) * rho * e2;
            d2[2] = -Complex(0, kTwoPi) * e3 * z;
            dt[0] = (-k_ * rho * drho / r1) * e1;
            dt[1] = drho * e2;
            dt[2] = e3 * zp;
            return {d1, d2, dt};
        }
    }
    throw DomainError("tangents: unknown family");
}

CVec darboux_chart(const CVec& zeta, int chart_slot) {
    const int n = static_cast<int>(zeta.dim());
    if (chart_slot < 0 || chart_slot > n) throw OutOfChart("darboux_chart: slot out of range");
    const double r2 = zeta.norm_sq();
    if (r2 >= 1.0) {
        std::ostringstream os;
        os << "darboux_chart: |zeta| = " << std::sqrt(r2) << " >= 1";
        throw OutOfChart(os.str());
    }
    CVec w(static_cast<std::size_t>(n + 1));
    int src = 0;
    for (int slot = 0; slot <= n; ++slot) {
        if (slot == chart_slot)
            w[static_cast<std::size_t>(slot)] = std::sqrt(1.0 - r2);
        else
            w[static_cast<std::size_t>(slot)] = zeta[static_cast<std::size_t>(src++)];
    }
    return w;
}

double fubini_study_form(const CVec& u, const CVec& v, const CVec& w) {
    const double q = 1.0 + u.norm_sq();
    const Complex uw = hermitian_dot(u, w);
    // (H w)_i = w_i / q - u_i <u, w> / q^2
    Complex s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i)
        s += std::conj(v[i]) * (w[i] / q - u[i] * uw / (q * q));
    return s.imag();
}

CVec dehomogenize(const CVec& w, int slot) {
    const Complex d = w[static_cast<std::size_t>(slot)];
    if (std::abs(d) < 1e-14) throw DomainError("dehomogenize: slot coordinate vanishes");
    CVec u(w.dim() - 1);
    std::size_t dst = 0;
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (static_cast<int>(i) != slot) u[dst++] = w[i] / d;
    return u;
}

CVec dehomogenize_tangent(const CVec& w, const CVec& dw, int slot) {
    const Complex d = w[static_cast<std::size_t>(slot)];
    const Complex dd = dw[static_cast<std::size_t>(slot)];
    CVec v(w.dim() - 1);
    std::size_t dst = 0;
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (static_cast<int>(i) != slot) v[dst++] = (dw[i] * d - w[i] * dd) / (d * d);
    return v;
}

std::vector<double> projective_moment(const CVec& w) {
    const double n2 = w.norm_sq();
    std::vector<double> m(w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i) m[i] = kPi * std::norm(w[i]) / n2;
    return m;
}

namespace {

void scale_slot3(CVec& v, double s) {
    if (v.dim() >= 3) v[2] *= s;
}

}  // namespace

double lagrangian_residual(const TorusSpec& spec, int samples, double slot3_scale) {
    if (samples < 2) throw ParameterOutOfRange("lagrangian_residual: samples >= 2");
    const int d = spec.dim();
    std::vector<double> params(static_cast<std::size_t>(d), 0.0);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);

    double worst = 0.0;
    const long total = static_cast<long>(std::pow(static_cast<double>(samples), d));
    for (long c = 0; c < total; ++c) {
        long rem = c;
        for (int i = 0; i < d; ++i) {
            idx[static_cast<std::size_t>(i)] = static_cast<int>(rem % samples);
            rem /= samples;
            params[static_cast<std::size_t>(i)] =
                static_cast<double>(idx[static_cast<std::size_t>(i)]) / samples;
        }
        const std::span<const double> angles(params.data(),
                                             static_cast<std::size_t>(spec.angle_count()));
        const double t = spec.uses_curve() ? params[static_cast<std::size_t>(d - 1)] : 0.0;
        auto frame = spec.tangents(angles, t);
        if (slot3_scale != 1.0)
            for (auto& v : frame) scale_slot3(v, slot3_scale);

        if (spec.projective()) {
            const CVec p = spec.parametrize(angles, t);
            const int slot = spec.chart_slot();
            const CVec u = dehomogenize(p, slot);
            std::vector<CVec> aff;
            aff.reserve(frame.size());
            for (const auto& v : frame) aff.push_back(dehomogenize_tangent(p, v, slot));
            for (std::size_t i = 0; i < aff.size(); ++i)
                for (std::size_t j = i + 1; j < aff.size(); ++j)
                    worst = std::max(worst, std::abs(fubini_study_form(u, aff[i], aff[j])));
        } else {
            for (std::size_t i = 0; i < frame.size(); ++i)
                for (std::size_t j = i + 1; j < frame.size(); ++j)
                    worst = std::max(worst, std::abs(omega_std(frame[i], frame[j])));
        }
    }
    return worst;
}

double chart_pullback_defect(int n, int chart_slot, int points, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int trial = 0; trial < points; ++trial) {
        CVec zeta(static_cast<std::size_t>(n));
        do {
            for (int i = 0; i < n; ++i)
                zeta[static_cast<std::size_t>(i)] =
                    Complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        } while (zeta.norm_sq() > 0.8);

        auto affine = [&](const CVec& z) {
            return dehomogenize(darboux_chart(z, chart_slot), chart_slot);
        };
        const CVec u = affine(zeta);
        const double h = 1e-5;
        std::vector<CVec> push;
        for (int dir = 0; dir < 2 * n; ++dir) {
            CVec zp = zeta, zm = zeta;
            const Complex step = (dir % 2 == 0) ? Complex(h, 0.0) : Complex(0.0, h);
            zp[static_cast<std::size_t>(dir / 2)] += step;
            zm[static_cast<std::size_t>(dir / 2)] -= step;
            push.push_back((1.0 / (2.0 * h)) * (affine(zp) - affine(zm)));
        }
        auto unit = [&](int dir) {
            CVec v(static_cast<std::size_t>(n));
            v[static_cast<std::size_t>(dir / 2)] = (dir % 2 == 0) ? 1.0 : Complex(0.0, 1.0);
            return v;
        };
        for (int i = 0; i < 2 * n; ++i)
            for (int j = i + 1; j < 2 * n; ++j) {
                const double fs = fubini_study_form(u, push[static_cast<std::size_t>(i)],
                                                    push[static_cast<std::size_t>(j)]);
                worst = std::max(worst, std::abs(fs - omega_std(unit(i), unit(j))));
            }
    }
    return worst;
}

double embedding_min_separation(const TorusSpec& spec, int grid) {
    const int d = spec.dim();
    const long total = static_cast<long>(std::pow(static_cast<double>(grid), d));
    std::vector<CVec> pts;
    pts.reserve(static_cast<std::size_t>(total));
    std::vector<double> params(static_cast<std::size_t>(d), 0.0);
    for (long c = 0; c < total; ++c) {
        long rem = c;
        for (int i = 0; i < d; ++i) {
            params[static_cast<std::size_t>(i)] = static_cast<double>(rem % grid) / grid;
            rem /= grid;
        }
        const std::span<const double> angles(params.data(),
                                             static_cast<std::size_t>(spec.angle_count()));
        const double t = spec.uses_curve() ? params[static_cast<std::size_t>(d - 1)] : 0.0;
        pts.push_back(spec.parametrize(angles, t));
    }
    double best = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dist = spec.projective() ? fs_chordal_distance(pts[i], pts[j])
                                                  : distance(pts[i], pts[j]);
            best = std::min(best, dist);
        }
    return best;
}

}  // namespace hbarlab
