#pragma once

#include <array>
#include <string>
#include <vector>

#include "hbarlab/curves.hpp"
#include "hbarlab/tori.hpp"

namespace hbarlab {

/// Endpoints of the moment-image line of the level set nu_k = (pi, 0):
/// x = (pi - k s, s, s) for s in [0, pi/k], so (pi, 0, 0) and
/// (0, pi/k, pi/k).
std::array<std::array<double, 3>, 2> brendel_line_endpoints(int k);

/// Moment segment of the lifted torus on that line: s ranges over
/// pi |z|^2 along the curve.
std::array<std::array<double, 3>, 2> brendel_segment_endpoints(int k, const CurveSpec& curve);

/// Moment-image figures, all computed from the actual constructions.
void fig_chekanov_moment(const std::string& path, const CurveSpec& curve);
void fig_brendel_moment(const std::string& path, int k, const CurveSpec& curve);
void fig_cp2_polytope(const std::string& path, const CurveSpec& curve, bool with_swap_image);
void fig_keyhole(const std::string& path, const CurveSpec& curve);
void fig_brendel_segment_pair(const std::string& generic_path, const std::string& optimized_path,
                              int k, const CurveSpec& generic, const CurveSpec& optimized);
/// Before/after scatter of the third-coordinate moment values under the
/// translation displacement, projected to the (x1, x3) plane.
void fig_translation_displacement(const std::string& path, const TorusSpec& family,
                                  int coordinate, double shift);

/// Writes the full figure set into the directory; returns the file names.
std::vector<std::string> write_all_figures(const std::string& out_dir);

}  // namespace hbarlab
