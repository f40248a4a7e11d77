#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "hbarlab/cvec.hpp"
#include "hbarlab/errors.hpp"

namespace hbarlab {

/// Modulus floor below which a value counts as passing through the divisor.
/// One order above double-precision noise after O(10^3) operations.
inline constexpr double kDegeneracyFloor = 1e-12;

/// Record of one continuous-argument tracking run.
struct WindingTrace {
    std::vector<std::pair<double, Complex>> samples;  ///< (parameter, value)
    double total_turns = 0.0;  ///< unwrapped argument change, in revolutions
    double max_step = 0.0;     ///< largest consecutive argument jump, radians
    int winding = 0;           ///< rounded total_turns
    double residual = 0.0;     ///< |total_turns - winding|, must be < 0.1
};

/// Winding number of a closed sequence of nonzero complex values around 0.
/// The sequence is cyclic: if the first and last entries differ, the loop is
/// closed implicitly. Throws DegenerateValue if any modulus is below the
/// floor and Undersampled if a consecutive argument jump reaches pi/2 or the
/// rounding residual reaches 0.1 turns.
int winding_number(const std::vector<Complex>& values);

/// As above but recording the trace.
WindingTrace winding_trace(const std::vector<Complex>& values);

/// Winding number of the loop t in [0,1] -> f(t) around 0, with automatic
/// dyadic refinement of the sample grid: starting from initial_samples, the
/// grid doubles whenever a jump reaches pi/2, up to 2^20 samples
/// (divisor-winding integrands z^k with k <= 10 stay far below this).
WindingTrace winding_number_adaptive(const std::function<Complex(double)>& f,
                                     int initial_samples = 256);

/// ---- Quadrature ----------------------------------------------------------

/// Adaptive composite Gauss-Legendre of order 10 on [a, b], absolute
/// tolerance abs_tol. Boundary integrands here are piecewise analytic, so
/// convergence is spectral away from the finitely many joints; subdivision
/// localizes those. Throws QuadratureFailure past max depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9, int max_depth = 48);

/// Integral over the loop of the Liouville primitive
/// lambda = 1/2 sum (x_j dy_j - y_j dx_j): for a closed C^1 loop u with
/// derivative du this equals the omega_std-area of any disk filling u.
/// Integrand: 1/2 sum_j Im(conj(u_j) du_j). Known joints of a piecewise
/// parametrization go in breakpoints: adaptive panels cannot be trusted to
/// find features much narrower than their node spacing on their own.
double boundary_line_integral(const std::function<CVec(double)>& u,
                              const std::function<CVec(double)>& du,
                              double abs_tol = 1e-9,
                              const std::vector<double>& breakpoints = {});

/// ---- Linear algebra ------------------------------------------------------

/// Determinant of the n x n complex matrix whose columns are given.
/// LU with partial pivoting; deterministic for a fixed input order.
/// A zero determinant is a valid return, callers decide what it means.
Complex complex_det(const std::vector<CVec>& columns);

}  // namespace hbarlab
