#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hbarlab/curves.hpp"
#include "hbarlab/cvec.hpp"
#include "hbarlab/tori.hpp"

namespace hbarlab {

/// Standard toric moment map mu_j = pi |z_j|^2.
std::vector<double> moment_map(const CVec& z);

/// (mu_1 - mu_2, ..., mu_1 - mu_n): the Hamiltonians of the T^{n-1} action
/// behind the Chekanov construction.
std::vector<double> chekanov_moment(const CVec& z);

/// nu_k = (mu_1 + k mu_3, mu_2 - mu_3) on C^3.
std::array<double, 2> nu_k(const CVec& z, int k);

/// The T^2 action generated by nu_k:
/// (theta_1, theta_2) . z = (e^{2pi i theta_1} z_1, e^{2pi i theta_2} z_2,
///                           e^{2pi i (k theta_1 - theta_2)} z_3).
CVec torus_action(double theta1, double theta2, const CVec& z, int k);

/// A point of C^3 tagged with its membership in the regular part Z_k of the
/// level set nu_k = (pi, 0) (non-trivially stabilized strata removed):
/// r_1 != 0, r_2 = r_3 != 0 and 1 = r_1^2 + k r_3^2, all within 1e-10.
struct LevelPoint {
    CVec point;
    int k = 2;
    bool on_Z = false;
};

LevelPoint make_level_point(const CVec& z, int k);

/// The reduction map on Z_k, constant on T^2 orbits, landing in the
/// punctured open disk of area pi/k:
/// (r_1 e^{2pi i t1}, r_2 e^{2pi i t2}, r_3 e^{2pi i t3})
///   |-> r_3 e^{2pi i (-k t1 + t2 + t3)}.
/// Throws NotOnLevelSet unless p.on_Z.
Complex q_map(const LevelPoint& p);

/// Smooth extension of the same formula to a neighborhood (z_1, z_2 != 0);
/// agrees with q_map on Z_k. Used for finite differencing.
Complex q_map_extended(const CVec& z, int k);

/// Inverse section of the reduction: w in the punctured open disk of area
/// pi/k maps to (sqrt(1 - k|w|^2), |w|, w), which lies on Z_k and satisfies
/// q(g(w)) = w. Throws OutOfDisk otherwise.
LevelPoint section_g(const Complex& w, int k);

struct ReducedFormReport {
    int k = 0;
    int samples = 0;
    double max_defect = 0.0;
    std::uint64_t seed = 0;
    /// defect against the deliberately wrong target form (2 rho drho dphi),
    /// which a correct implementation must reject
    double control_defect = 0.0;
};

/// Checks omega_std(v, v') = (rho drho ^ dphi)(dq v, dq v') for random
/// points of Z_k and random tangent pairs; tangents are produced by
/// orthogonal projection onto ker d(nu_k) (tiny SVD of the 2x6 real
/// Jacobian, threshold 1e-10), dq by central differences of calibrated step
/// 1e-6. rho drho ^ dphi is the Euclidean area form of the target disk.
ReducedFormReport verify_reduced_form(int k, int samples, std::uint64_t seed = 0);

/// Lift a contractible curve from the reduced disk: the resulting torus is
/// the union of T^2 orbits of the section over the curve. Throws
/// CurveTooLarge if the curve's container exceeds pi/k and CurveHitsOrigin
/// if the curve reaches 0.
TorusSpec lift_curve(const CurveSpec& curve, int k);

/// Max over a grid of |action(theta, g(curve(t))) - parametrize(theta, t)|:
/// agreement of the lift with the closed-form parametrization.
double lift_consistency(const CurveSpec& curve, int k, int grid);

/// Max over sampled torus points of the distance from q(point) to the curve,
/// and of the nu_k level residual |nu_k - (pi, 0)|.
struct FiberCheck {
    double max_curve_dist = 0.0;
    double max_level_residual = 0.0;
};
FiberCheck check_fibers(const TorusSpec& brendel_spec, int grid);

}  // namespace hbarlab
