#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hbarlab/cvec.hpp"
#include "hbarlab/tori.hpp"

namespace hbarlab {

/// A smooth map from the closed unit disk to C^n with boundary on a torus.
/// All invariants computed from it (area, Maslov index, intersection
/// numbers) are boundary data, so the interior extension only matters for
/// the holomorphicity check.
struct DiskMap {
    std::string label;
    bool holomorphic = false;
    int ambient = 3;
    std::function<CVec(Complex)> eval;                        ///< closed unit disk
    std::function<CVec(double)> boundary;                     ///< t in [0,1)
    std::function<CVec(double)> boundary_derivative;          ///< d/dt
    std::function<std::vector<CVec>(double)> boundary_frame;  ///< torus tangent frame
    /// joints of a piecewise boundary parametrization (quadrature hints)
    std::vector<double> boundary_breakpoints;
};

enum class DiskFamily { Alpha, Beta1, Beta2, ChekanovAlpha };

/// Base point for the beta disks: the first curve point of maximal modulus.
Complex default_base_point(const CurveSpec& curve);

/// The explicit representatives:
///   Alpha         w in D        -> (sqrt(1-k|w|^2), |w|, w)
///   Beta1         z in unit disk-> (sqrt(1-k|w0|^2) z, |w0|, w0 z^k)
///   Beta2         z             -> (sqrt(1-k|w0|^2), |w0| z, w0 conj(z))
///   ChekanovAlpha w in D        -> (|w|, ..., |w|, w)
/// The filling disk D of the curve is parametrized by radial interpolation
/// from the curve centroid; only its boundary enters any invariant. Beta1 is
/// holomorphic; Beta2 is anti-holomorphic in its third slot and carries
/// holomorphic = false. w0 must lie on the curve (BadBasePoint otherwise).
DiskMap standard_disk(DiskFamily family, const TorusSpec& spec, Complex w0 = {});

/// Signed omega_std-area of the disk's relative class, via the Liouville
/// boundary integral.
double disk_area(const DiskMap& u, double abs_tol = 1e-9);

/// Maslov index: winding of det^2 of the boundary tangent frame, read as an
/// n x n complex matrix in the constant trivialization. Throws
/// DegenerateFrame when |det| <= 1e-8 at a sample.
int maslov_index(const DiskMap& u);

/// A complex hypersurface disjoint from the torus, presented by a defining
/// function g; intersection numbers with disks are boundary windings of
/// g o u.
class Hypersurface {
 public:
    enum class Kind { Plane13, Plane12, SigmaF };

    /// {z_2 = 0}, the z1-z3 plane.
    static Hypersurface plane13(const TorusSpec& spec);
    /// {z_3 = 0}, the z1-z2 plane. The homological count already comes out
    /// of the winding with g = z_3, since every boundary loop here avoids
    /// {z_3 = 0}; no transversality perturbation is modeled.
    static Hypersurface plane12(const TorusSpec& spec);
    /// {eps z_1^k = z_2 z_3} with eps = F(g(eps_point)),
    /// F(z) = z_1^{-k} z_2 z_3, and eps_point a fixed interior point of the
    /// filling disk on the ray at 193 degrees (13 degrees past the negative
    /// real axis, which keeps it off every real multiple of the base point).
    static Hypersurface sigma_f(const TorusSpec& spec, Complex w0 = {});

    Kind kind() const { return kind_; }
    Complex g(const CVec& z) const;
    Complex epsilon() const { return epsilon_; }
    Complex epsilon_point() const { return epsilon_point_; }
    /// Verified minimum of |g| over a torus sample grid.
    double min_on_torus() const { return min_on_torus_; }

 private:
    Hypersurface() = default;
    void check_disjoint(const TorusSpec& spec);

    Kind kind_ = Kind::Plane13;
    int k_ = 2;
    Complex epsilon_;
    Complex epsilon_point_;
    double min_on_torus_ = 0.0;
};

/// Homological intersection number of the disk's class with the divisor:
/// the boundary winding of g o u. Throws BoundaryTouchesDivisor when the
/// boundary modulus of g o u dips to 1e-9.
int intersection_number(const DiskMap& u, const Hypersurface& S);

/// The disk automorphism building block with a single simple zero at w,
/// modulus one on the boundary circle, normalized to fix 1.
Complex blaschke(Complex w, Complex z);
Complex blaschke_derivative(Complex w, Complex z);

enum class TransportDirection { MoveFromSlot2, MoveFromSlot3 };

/// Trade interior zeros between the second and third slots of a holomorphic
/// disk on the k-family torus: divide the designated slot by the Blaschke
/// product of the given zeros and multiply the other slot by it. The
/// boundary stays on the torus, the area is unchanged, and the class shifts
/// by r times the beta_2 generator. Listed zeros are verified by local
/// winding (NotAZero otherwise). The quotient slot is evaluated near its
/// removed singularities through a mean-value average on a small circle.
DiskMap blaschke_transport(const DiskMap& u, const TorusSpec& spec,
                           const std::vector<Complex>& zeros, TransportDirection dir);

/// Torus parameters of a point on the k-family torus, recovered through the
/// reduction map and a nearest-parameter search on the curve.
struct BrendelParams {
    double theta1 = 0.0, theta2 = 0.0, t = 0.0;
};
BrendelParams brendel_parameters(const TorusSpec& spec, const CVec& p);

/// Max over boundary samples of the distance from the boundary point to the
/// torus (parameters recovered, then re-evaluated).
double boundary_on_torus_residual(const DiskMap& u, const TorusSpec& spec, int samples = 256);

/// Max of |du/dzbar| over an interior grid x grid polar grid (central
/// differences); near zero for a holomorphic disk.
double cauchy_riemann_residual(const DiskMap& u, int grid = 64);

/// Everything the reports need about one disk.
struct DiskReport {
    std::string label;
    double area = 0.0;
    int maslov = 0;
    int plane13 = 0, plane12 = 0, sigma_f = 0;
    long long p = 0, q = 0, r = 0;  ///< class in the (alpha, beta1, beta2) basis
    double boundary_residual = 0.0;
    double cr_residual = -1.0;  ///< -1 when not applicable
};

DiskReport analyze_disk(const DiskMap& u, const TorusSpec& spec, const Hypersurface& s13,
                        const Hypersurface& s12, const Hypersurface& sf,
                        bool with_cr_check = true);

}  // namespace hbarlab
