#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hbarlab/curves.hpp"
#include "hbarlab/cvec.hpp"

namespace hbarlab {

/// One of the four torus families. Product tori live in C^n where n is the
/// number of areas; Chekanov tori are lifts of a contractible loop through
/// the T^{n-1} reduction of C^n; the projective variant pushes the latter
/// through a Darboux chart into CP^n; the k-family in C^3 lifts the loop
/// through the T^2 reduction at level (pi, 0). Immutable after construction.
class TorusSpec {
 public:
    enum class Family { Product, ChekanovCn, ChekanovCPn, Brendel };

    static TorusSpec product(std::vector<double> areas);
    static TorusSpec chekanov_cn(int n, CurveSpec curve);
    static TorusSpec chekanov_cpn(int n, CurveSpec curve, int chart_slot = 1);
    static TorusSpec brendel(int k, CurveSpec curve);

    Family family() const { return family_; }
    bool projective() const { return family_ == Family::ChekanovCPn; }
    bool uses_curve() const { return family_ != Family::Product; }

    /// Torus dimension (free angles plus one curve parameter when present).
    int dim() const;
    /// Number of free angle parameters.
    int angle_count() const;
    /// Complex dimension of the ambient coordinate vector (n, or n+1 for
    /// homogeneous coordinates on CP^n).
    int ambient_dim() const;

    int n() const { return n_; }
    int k() const { return k_; }
    int chart_slot() const { return chart_slot_; }
    /// Enclosed area of the generating curve (curve families only).
    double a() const;
    const std::vector<double>& areas() const { return areas_; }
    const CurveSpec& curve() const;

    /// The point at the given angles (each in [0,1)) and curve parameter.
    CVec parametrize(std::span<const double> angles, double t) const;

    /// Analytic coordinate tangent frame at the given parameters: dim()
    /// vectors (d/d theta_1, ..., d/d t last when a curve is present).
    /// For the projective family these are tangents of the unit-norm
    /// homogeneous representative.
    std::vector<CVec> tangents(std::span<const double> angles, double t) const;

 private:
    TorusSpec() = default;

    Family family_ = Family::Product;
    int n_ = 0;          // ambient C^n for the Chekanov families
    int k_ = 0;          // reduction weight for the C^3 family
    int chart_slot_ = 1;
    std::vector<double> areas_;
    std::optional<CurveSpec> curve_;
};

/// Darboux chart onto the complement of the hyperplane {w_slot = 0} in CP^n:
/// zeta in the open unit ball of C^n maps to the homogeneous unit vector with
/// sqrt(1 - |zeta|^2) in chart_slot and zeta's entries in the remaining slots
/// in order. Pulls the Fubini-Study form (line integral pi) back to omega_std.
CVec darboux_chart(const CVec& zeta, int chart_slot);

/// Fubini-Study form at the affine point u (chart {w_slot = 1}) evaluated on
/// tangent vectors v, w. Hermitian coefficient matrix
/// H(u) = I/(1+|u|^2) - u u^dagger/(1+|u|^2)^2, normalized so a line has
/// area pi; omega(v, w) = Im(v^dagger H w).
double fubini_study_form(const CVec& u, const CVec& v, const CVec& w);

/// Dehomogenize a homogeneous point to the affine chart {w_slot = 1}.
CVec dehomogenize(const CVec& w, int slot);
/// Pushforward of a homogeneous-representative tangent to the affine chart.
CVec dehomogenize_tangent(const CVec& w, const CVec& dw, int slot);

/// Toric moment coordinates pi |w_j|^2 / |w|^2 on CP^n (sum = pi).
std::vector<double> projective_moment(const CVec& w);

/// Max over a samples^dim parameter grid of |omega(v_i, v_j)| over all
/// coordinate tangent pairs; omega_std for the affine families and the
/// Fubini-Study form for the projective one. slot3_scale != 1 multiplies the
/// third ambient coordinate (C^3 families) and serves as a deliberately
/// broken control.
double lagrangian_residual(const TorusSpec& spec, int samples, double slot3_scale = 1.0);

/// Minimum image separation over distinct nodes of a grid^dim parameter
/// grid; positive for an embedding.
double embedding_min_separation(const TorusSpec& spec, int grid);

/// Finite-difference pullback oracle for the chart: max over random interior
/// points of |(chart^* omega_FS)(e_i, e_j) - omega_std(e_i, e_j)| with the
/// pushforwards differentiated numerically. Independent of the analytic
/// tangent machinery.
double chart_pullback_defect(int n, int chart_slot, int points, std::uint64_t seed);

}  // namespace hbarlab
