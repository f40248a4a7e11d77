#include "hbarlab/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbarlab/errors.hpp"
#include "hbarlab/numeric.hpp"

namespace hbarlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

/// One closed-form path segment over a global parameter span [t0, t1].
struct CurveSpec::Piece {
    double t0 = 0.0, t1 = 0.0;

    enum class Type { Arc, Line, Hermite } type = Type::Line;

    // Arc: P(s) = radius * exp(i(a0 + s(a1 - a0))), a1 < a0 means clockwise.
    double radius = 0.0, a0 = 0.0, a1 = 0.0;
    // Line: P(s) = p0 + s(p1 - p0).
    Complex p0, p1;
    // Hermite: endpoint tangents m0, m1 (per unit local parameter).
    Complex m0, m1;

    Complex pos(double s) const {
        switch (type) {
            case Type::Arc: {
                const double a = a0 + s * (a1 - a0);
                return radius * Complex(std::cos(a), std::sin(a));
            }
            case Type::Line:
                return p0 + s * (p1 - p0);
            case Type::Hermite: {
                const double s2 = s * s, s3 = s2 * s;
                return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * m0 +
                       (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * m1;
            }
        }
        return {};
    }

    Complex vel(double s) const {  // dP/ds
        switch (type) {
            case Type::Arc: {
                const double a = a0 + s * (a1 - a0);
                return (a1 - a0) * radius * Complex(-std::sin(a), std::cos(a));
            }
            case Type::Line:
                return p1 - p0;
            case Type::Hermite: {
                const double s2 = s * s;
                return (6 * s2 - 6 * s) * p0 + (3 * s2 - 4 * s + 1) * m0 +
                       (-6 * s2 + 6 * s) * p1 + (3 * s2 - 2 * s) * m1;
            }
        }
        return {};
    }
};

namespace {

using Piece = CurveSpec::Piece;

double piece_length(const Piece& p) {
    switch (p.type) {
        case Piece::Type::Arc:
            return std::abs(p.a1 - p.a0) * p.radius;
        case Piece::Type::Line:
            return std::abs(p.p1 - p.p0);
        case Piece::Type::Hermite:
            // pseudo-length: quarter-circle ratio over the chord, good enough
            // for parameter allocation (exactness is not needed here)
            return 1.1107 * std::abs(p.p1 - p.p0);
    }
    return 0.0;
}

/// Build the keyhole path for a given outer radius R. Geometry:
/// counterclockwise outer arc, lower slit edge inward, clockwise inner
/// circle around the puncture, upper slit edge outward; the four corners
/// are replaced by cubic Hermite fillets matching position and velocity,
/// so the parametrized loop is C^1 with constant speed on base pieces.
std::vector<Piece> build_keyhole_path(double R, double r, double h, double cut) {
    const double phiR = std::asin(h / R);
    const double phir = std::asin(h / r);
    const double xR = std::sqrt(R * R - h * h);
    const double xr = std::sqrt(r * r - h * h);

    Piece outer;
    outer.type = Piece::Type::Arc;
    outer.radius = R;
    outer.a0 = phiR + cut / R;
    outer.a1 = kTwoPi - phiR - cut / R;

    Piece low;
    low.type = Piece::Type::Line;
    low.p0 = Complex(xR - cut, -h);
    low.p1 = Complex(xr + cut, -h);

    Piece inner;
    inner.type = Piece::Type::Arc;
    inner.radius = r;
    inner.a0 = -phir - cut / r;
    inner.a1 = -kTwoPi + phir + cut / r;  // clockwise

    Piece up;
    up.type = Piece::Type::Line;
    up.p0 = Complex(xr + cut, h);
    up.p1 = Complex(xR - cut, h);

    std::vector<Piece> base = {outer, low, inner, up};

    // Interleave fillets: after piece i comes the fillet to piece i+1.
    std::vector<Piece> path;
    for (std::size_t i = 0; i < base.size(); ++i) {
        path.push_back(base[i]);
        const Piece& a = base[i];
        const Piece& b = base[(i + 1) % base.size()];
        Piece f;
        f.type = Piece::Type::Hermite;
        f.p0 = a.pos(1.0);
        f.p1 = b.pos(0.0);
        const double lf = 1.1107 * std::abs(f.p1 - f.p0);
        const Complex ta = a.vel(1.0), tb = b.vel(0.0);
        f.m0 = ta / std::abs(ta) * lf;
        f.m1 = tb / std::abs(tb) * lf;
        path.push_back(f);
    }

    // Allocate parameter spans proportional to length: constant global speed,
    // and the Hermite endpoint tangents then match the neighbors' d/dt.
    double total = 0.0;
    for (const auto& p : path) total += piece_length(p);
    double t = 0.0;
    for (auto& p : path) {
        p.t0 = t;
        t += piece_length(p) / total;
        p.t1 = t;
    }
    path.back().t1 = 1.0;
    return path;
}

double path_area(const std::vector<Piece>& path, double abs_tol = 1e-11) {
    // 1/2 integral of Im(conj(P) dP), piece by piece (each piece is smooth).
    double area = 0.0;
    for (const auto& p : path) {
        area += 0.5 * integrate(
                          [&](double s) { return (std::conj(p.pos(s)) * p.vel(s)).imag(); },
                          0.0, 1.0, abs_tol);
    }
    return area;
}

}  // namespace

Complex CurveSpec::point(double t) const {
    t -= std::floor(t);
    if (kind_ == Kind::Circle)
        return center_ + radius_ * Complex(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
    const auto& path = *pieces_;
    // binary search for the piece containing t
    std::size_t lo = 0, hi = path.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (t < path[mid].t1)
            hi = mid;
        else
            lo = mid + 1;
    }
    const Piece& p = path[lo];
    return p.pos((t - p.t0) / (p.t1 - p.t0));
}

Complex CurveSpec::derivative(double t) const {
    t -= std::floor(t);
    if (kind_ == Kind::Circle)
        return radius_ * kTwoPi * Complex(-std::sin(kTwoPi * t), std::cos(kTwoPi * t));
    const auto& path = *pieces_;
    std::size_t lo = 0, hi = path.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (t < path[mid].t1)
            hi = mid;
        else
            lo = mid + 1;
    }
    const Piece& p = path[lo];
    return p.vel((t - p.t0) / (p.t1 - p.t0)) / (p.t1 - p.t0);
}

double CurveSpec::loop_area(const CurveSpec& c, double abs_tol) {
    if (c.kind_ == Kind::Circle) return kPi * c.radius_ * c.radius_;
    return path_area(*c.pieces_, abs_tol);
}

std::vector<double> CurveSpec::piece_boundaries() const {
    std::vector<double> ts;
    if (kind_ != Kind::Keyhole) return ts;
    for (const auto& p : *pieces_) ts.push_back(p.t0);
    return ts;
}

std::vector<Complex> CurveSpec::sample(int n) const {
    std::vector<Complex> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = point(static_cast<double>(i) / n);
    return pts;
}

CurveSpec::Closest CurveSpec::closest_point(const Complex& z) const {
    const int n = 4096;
    std::vector<double> d2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        d2[static_cast<std::size_t>(i)] = std::norm(point(static_cast<double>(i) / n) - z);

    // golden-section refinement of one bracketed minimum of |P(t) - z|^2
    // (derivative-free: the objective is only piecewise C^2)
    auto refine = [&](double center) {
        double lo = center - 1.0 / n, hi = center + 1.0 / n;
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        double f1 = std::norm(point(x1) - z), f2 = std::norm(point(x2) - z);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = std::norm(point(x1) - z);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = std::norm(point(x2) - z);
            }
        }
        return 0.5 * (lo + hi);
    };

    // The slit edges run closer together than the sample spacing, so the
    // globally nearest sample can sit on the wrong branch: refine around
    // every local minimum of the sampled distance and keep the best.
    Closest best{0.0, 1e300};
    for (int i = 0; i < n; ++i) {
        const double here = d2[static_cast<std::size_t>(i)];
        if (here <= d2[static_cast<std::size_t>((i + 1) % n)] &&
            here <= d2[static_cast<std::size_t>((i + n - 1) % n)]) {
            double t = refine(static_cast<double>(i) / n);
            t -= std::floor(t);
            const double dist = std::abs(point(t) - z);
            if (dist < best.dist) best = {t, dist};
        }
    }
    return best;
}

void CurveSpec::finalize_bounds_and_checks() {
    const int n = 200000;
    double maxm = 0.0, minm = 1e300, maxspeed = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        const double m = std::abs(point(t));
        maxm = std::max(maxm, m);
        minm = std::min(minm, m);
        maxspeed = std::max(maxspeed, std::abs(derivative(t)));
    }
    const double pad = 0.5 * maxspeed / n;  // Lipschitz padding per interval
    max_modulus_ = maxm + pad;
    min_modulus_ = std::max(0.0, minm - pad);
    max_moment_ = kPi * max_modulus_ * max_modulus_;

    const double container_radius = std::sqrt(container_area_ / kPi);
    if (max_modulus_ >= container_radius) {
        std::ostringstream os;
        os << "curve exceeds its container: max |z| = " << max_modulus_
           << " vs container radius " << container_radius;
        throw Infeasible(os.str());
    }
    if (min_modulus_ <= 0.0) throw Infeasible("curve touches the origin");

    // contractibility in the punctured disk
    const auto tr = winding_number_adaptive([this](double t) { return point(t); }, 1024);
    if (tr.winding != 0) throw Infeasible("curve winds around the origin");
}

CurveSpec make_circle(Complex center, double target_area, double container_area) {
    if (target_area <= 0.0) throw Infeasible("make_circle: target_area must be positive");
    CurveSpec c;
    c.kind_ = CurveSpec::Kind::Circle;
    c.center_ = center;
    c.radius_ = std::sqrt(target_area / kPi);
    c.target_area_ = target_area;
    c.container_area_ = container_area;
    c.measured_area_ = target_area;
    if (std::abs(center) <= c.radius_)
        throw Infeasible("make_circle: circle encloses the origin (|center| <= radius)");
    c.finalize_bounds_and_checks();
    return c;
}

CurveSpec make_keyhole(double target_area, double container_area) {
    if (!(0.0 < target_area && target_area < container_area))
        throw Infeasible("make_keyhole: need 0 < target_area < container_area");

    const double container_radius = std::sqrt(container_area / kPi);

    // The smoothing scale tracks the outer radius, which is only known after
    // the first bisection, so the construction runs in passes. Later passes
    // also offset the bisection target by half the measured gap between the
    // smooth area and its uniform-4096-sample shoelace estimate (an O(n^-2)
    // polygon deficit on the outer arc): both readings then land within half
    // a deficit of the requested area.
    double smoothing = 2.5e-4 * container_radius;
    double area_offset = 0.0;
    double outer = 0.0;
    std::shared_ptr<std::vector<Piece>> path;

    for (int pass = 0; pass < 3; ++pass) {
        const double s = smoothing;
        const double r = 10.0 * s;   // inner circle radius
        const double h = s;          // slit half-width
        const double cut = 3.0 * s;  // corner trim on each side

        const double r_max = container_radius - 2.0 * s;
        const double r_min = 25.0 * s;
        if (r_max <= r_min)
            throw Infeasible("make_keyhole: container too small for the slit/inner overhead");

        auto area_at = [&](double R) { return path_area(build_keyhole_path(R, r, h, cut)); };
        const double goal = target_area + area_offset;

        const double amax = area_at(r_max);
        if (amax < goal) {
            std::ostringstream os;
            os << "make_keyhole: target area " << target_area
               << " not reachable, achievable maximum is " << amax;
            throw Infeasible(os.str());
        }
        const double amin = area_at(r_min);
        if (amin > goal) {
            std::ostringstream os;
            os << "make_keyhole: target area " << target_area
               << " below the inner/slit overhead, achievable minimum is " << amin;
            throw Infeasible(os.str());
        }

        double lo = r_min, hi = r_max;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (area_at(mid) < goal)
                lo = mid;
            else
                hi = mid;
            if (hi - lo < 1e-15 * container_radius) break;
        }
        outer = 0.5 * (lo + hi);
        path = std::make_shared<std::vector<Piece>>(build_keyhole_path(outer, r, h, cut));
        if (pass == 0) smoothing = 2.5e-4 * outer;

        // polygon deficit of this build
        CurveSpec probe;
        probe.kind_ = CurveSpec::Kind::Keyhole;
        probe.pieces_ = path;
        const double smooth = path_area(*path);
        const double polygon = shoelace_area(probe.sample(4096));
        area_offset = 0.5 * (smooth - polygon);
    }

    CurveSpec c;
    c.kind_ = CurveSpec::Kind::Keyhole;
    c.target_area_ = target_area;
    c.container_area_ = container_area;
    c.outer_radius_ = outer;
    c.inner_radius_ = 10.0 * smoothing;
    c.slit_half_width_ = smoothing;
    c.smoothing_ = smoothing;
    c.pieces_ = path;
    c.measured_area_ = path_area(*path);
    if (std::abs(c.measured_area_ - target_area) > 1e-6) {
        std::ostringstream os;
        os << "make_keyhole: bisection failed, area " << c.measured_area_ << " vs target "
           << target_area;
        throw Infeasible(os.str());
    }
    c.finalize_bounds_and_checks();
    return c;
}

double shoelace_area(const std::vector<Complex>& pts) {
    double s = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& a = pts[i];
        const Complex& b = pts[(i + 1) % n];
        s += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * s;
}

}  // namespace hbarlab
