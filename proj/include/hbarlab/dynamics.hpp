#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hbarlab/cvec.hpp"
#include "hbarlab/tori.hpp"

namespace hbarlab {

/// A time-independent Hamiltonian of one of two shapes:
///  - PlaneTranslation: a compactly supported translation field on one
///    complex coordinate. H = shift * y * chi, where chi is 1 on a capsule
///    covering the swept disk and decays to 0 across a C^2 cutoff band;
///    inside the capsule the time-1 map is exactly z -> z + shift.
///  - ProjectiveSwap: H([w]) = pi |w_i - w_j|^2 / (2 sum |w_l|^2) on CP^n,
///    whose time-1 map exchanges the two homogeneous slots.
class HamiltonianSpec {
 public:
    enum class Kind { PlaneTranslation, ProjectiveSwap };

    static HamiltonianSpec plane_translation(double disk_area, double margin,
                                             double cutoff_width, int coordinate = 0);
    static HamiltonianSpec projective_swap(int n, int slot_i = 1, int slot_j = 2);

    Kind kind() const { return kind_; }
    int coordinate() const { return coordinate_; }
    int n() const { return n_; }
    std::pair<int, int> slots() const { return {slot_i_, slot_j_}; }
    double disk_area() const { return disk_area_; }
    double margin() const { return margin_; }
    double cutoff_width() const { return cutoff_width_; }
    double scale() const { return scale_; }
    /// Same Hamiltonian multiplied by a constant (norm homogeneity).
    HamiltonianSpec scaled(double c) const;

    /// Translation distance 2 sqrt(A/pi) + margin.
    double shift() const;
    /// Capsule radius (disk radius plus a small pad) and support bound.
    double core_radius() const;
    double support_radius() const;

    /// Value at a point: a plain C^n point for PlaneTranslation (only the
    /// chosen coordinate matters), homogeneous coordinates for the swap.
    double value(const CVec& p) const;

    /// Hamiltonian vector field of the translation on its coordinate plane.
    Complex plane_field(Complex z) const;

 private:
    HamiltonianSpec() = default;
    Kind kind_ = Kind::PlaneTranslation;
    int coordinate_ = 0;
    int n_ = 2;
    int slot_i_ = 1, slot_j_ = 2;
    double disk_area_ = 1.0, margin_ = 0.0, cutoff_width_ = 0.1;
    double scale_ = 1.0;
};

/// Hofer norm of the (autonomous) Hamiltonian: its oscillation max - min
/// over a grid with one local refinement pass; the time integral is trivial.
/// grid is the number of nodes per real dimension (>= 64 intended for
/// production use; the swap on CP^n has 2n real dimensions per chart).
double hofer_norm(const HamiltonianSpec& h, int grid);

struct HoferBreakdown {
    double total = 0.0;
    double core = 0.0;      ///< closed-form 2 * shift * core_radius part
    double overhead = 0.0;  ///< cutoff-band excess
};
HoferBreakdown hofer_breakdown(const HamiltonianSpec& h, int grid);

/// Flow the point to time t in [0, 1]. The swap uses its closed form; the
/// translation integrates the field with fixed-step RK4, monitoring the
/// conservation of H (StepFailure past 1e-6 drift).
CVec flow(const HamiltonianSpec& h, const CVec& p, double t, double rk_step = 1e-3);

struct DisjointnessCertificate {
    enum class Method { MomentInterval, PointSampling };
    Method method = Method::MomentInterval;
    bool verdict = false;
    double separation = 0.0;           ///< moment gap or minimum point distance
    double sampling_resolution = 0.0;  ///< PointSampling only
    long samples = 0;
    std::string detail;
    bool has_witness = false;  ///< near-collision pair for failed verdicts
    CVec witness_before, witness_after;
};

/// Swap-displacement certificate for the projective Chekanov torus: the
/// torus moment image is the diagonal {(s,...,s)} and the swapped image
/// replaces one entry by pi - n s, so a strict gap pi - n s_max > s_max
/// separates them. Rigorous via certified curve bounds; cross-checked by
/// point sampling (advisory). Throws ChartMismatch when the swapped slots
/// both lie in chart coordinates: the torus is then swap-invariant and a
/// coincidence witness is reported in the message.
struct SwapCertificate {
    DisjointnessCertificate interval;
    DisjointnessCertificate sampling;
    double s_max = 0.0;
    double gap = 0.0;
};
SwapCertificate certify_swap_displacement(int n, double a, const CurveSpec& curve,
                                          int chart_slot = 1,
                                          std::pair<int, int> swap_slots = {1, 2},
                                          long samples = 10000);

/// Best near-coincidence between the swapped image and the torus itself
/// (used for the ChartMismatch control).
DisjointnessCertificate swap_invariance_witness(int n, const CurveSpec& curve, int chart_slot,
                                                std::pair<int, int> swap_slots, long samples);

/// Translation-displacement certificate: the family is confined in the
/// chosen coordinate to a disk of known area, and translating that disk by
/// twice its radius plus a margin separates the tori. The measured Hofer
/// energy of the cutoff translation is reported against the confinement
/// area (the sharp displacement cost it approximates).
struct TranslationCertificate {
    DisjointnessCertificate interval;
    double confinement_area = 0.0;  ///< area of the confining coordinate disk
    double measured_energy = 0.0;
    double core_energy = 0.0;
    double overhead = 0.0;
    double optimal_floor = 0.0;  ///< the sharp cost: confinement area
    double limit_value = 0.0;    ///< its margin-to-zero limit (a, or the factor area)
    double ratio = 0.0;          ///< measured_energy / optimal_floor
    double flow_deviation = 0.0; ///< max |RK4 flow - exact translation| on samples
    double energy_drift = 0.0;   ///< max |H(p_t) - H(p_0)| along sampled orbits
    double support_radius = 0.0; ///< transverse support bound of the cutoff field
    double shift = 0.0;          ///< translation distance
};
TranslationCertificate certify_translation_displacement(const TorusSpec& family, int coordinate,
                                                        double rk_step = 1e-3,
                                                        int samples = 200);

}  // namespace hbarlab
