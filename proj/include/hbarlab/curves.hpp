#pragma once

#include <memory>
#include <vector>

#include "hbarlab/cvec.hpp"

namespace hbarlab {

/// A closed simple C^1 plane curve in a punctured disk: winding number about
/// the origin is zero, the enclosed area matches target_area, and the whole
/// curve stays strictly inside the open disk of area container_area centered
/// at the origin. Immutable after construction.
class CurveSpec {
 public:
    enum class Kind { Circle, Keyhole };

    Kind kind() const { return kind_; }
    double target_area() const { return target_area_; }
    double container_area() const { return container_area_; }
    double measured_area() const { return measured_area_; }

    /// Circle parameters (kind Circle only).
    Complex center() const { return center_; }
    double radius() const { return radius_; }

    /// Keyhole parameters (kind Keyhole only).
    double outer_radius() const { return outer_radius_; }
    double inner_radius() const { return inner_radius_; }
    double slit_half_width() const { return slit_half_width_; }
    double smoothing() const { return smoothing_; }

    /// Point and velocity at parameter t in [0, 1); periodic.
    Complex point(double t) const;
    Complex derivative(double t) const;

    /// Certified modulus bounds over the whole curve (dense samples plus
    /// Lipschitz padding from the speed bound).
    double max_modulus() const { return max_modulus_; }
    double min_modulus() const { return min_modulus_; }
    /// sup over the curve of pi |z|^2.
    double max_moment() const { return max_moment_; }

    /// Enclosed-area functional of the parametrized loop (signed).
    static double loop_area(const CurveSpec& c, double abs_tol = 1e-10);

    /// Parameter of the closest curve point to z (Newton-refined from the
    /// nearest dense sample), and the attained distance.
    struct Closest {
        double t;
        double dist;
    };
    Closest closest_point(const Complex& z) const;

    /// Uniform closed sampling (n points, last != first).
    std::vector<Complex> sample(int n) const;

    /// Parameters where the closed-form segments join (keyhole only).
    std::vector<double> piece_boundaries() const;

    friend CurveSpec make_circle(Complex center, double target_area, double container_area);
    friend CurveSpec make_keyhole(double target_area, double container_area);

    struct Piece;  // closed-form path segment

 private:
    CurveSpec() = default;
    void finalize_bounds_and_checks();

    Kind kind_ = Kind::Circle;
    double target_area_ = 0.0;
    double container_area_ = 0.0;
    double measured_area_ = 0.0;

    Complex center_;
    double radius_ = 0.0;

    double outer_radius_ = 0.0;
    double inner_radius_ = 0.0;
    double slit_half_width_ = 0.0;
    double smoothing_ = 0.0;

    double max_modulus_ = 0.0;
    double min_modulus_ = 0.0;
    double max_moment_ = 0.0;

    std::shared_ptr<const std::vector<Piece>> pieces_;  // keyhole only
};

/// Circle of area target_area centered away from the origin (winding about
/// 0 must be zero, so |center| > radius is required).
CurveSpec make_circle(Complex center, double target_area, double container_area);

/// Keyhole: outer circle hugging the container, a thin slit along the
/// positive real axis leading to a small circle that excludes the origin,
/// corners blended with cubic fillets (C^1). The outer radius is tuned by
/// bisection until the enclosed area matches target_area to 1e-9.
/// Throws Infeasible when the target cannot fit, reporting the achievable
/// maximum.
CurveSpec make_keyhole(double target_area, double container_area);

/// Signed shoelace area of a closed polygon (positively oriented > 0).
double shoelace_area(const std::vector<Complex>& pts);

}  // namespace hbarlab
