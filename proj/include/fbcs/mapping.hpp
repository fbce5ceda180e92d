#pragma once

#include <array>

#include "fbcs/colorspace.hpp"
#include "fbcs/grid.hpp"

namespace fbcs {

/// S = p e_x + q e_y on the color plane. q follows the y-up convention.
struct PlanarVector {
  double p = 0.0;
  double q = 0.0;

  bool operator==(const PlanarVector&) const = default;
};

using VectorField2D = Grid<PlanarVector>;
using ImageGrid = Grid<RgbIntensity>;

/// How backward_map brings lifted CS coordinates into [0, 1].
///
/// Automatic divides every coordinate by the largest lifted coordinate of the whole field, so
/// the output uses the full range and is invariant under positive scaling of the input.
/// Fixed multiplies by a caller-chosen factor and clamps channels that overshoot.
class ScalePolicy {
 public:
  enum class Mode { automatic, fixed };

  static ScalePolicy automatic() noexcept { return ScalePolicy(Mode::automatic, 1.0); }
  /// Throws DomainError unless factor is finite and positive.
  static ScalePolicy fixed(double factor);

  Mode mode() const noexcept { return mode_; }
  double factor() const noexcept { return factor_; }

 private:
  ScalePolicy(Mode mode, double factor) noexcept : mode_(mode), factor_(factor) {}

  Mode mode_;
  double factor_;
};

/// Projections of e_r, e_g, e_b onto the color plane, in that order.
/// G carries +sqrt(1/2) and B -sqrt(1/2) on the y axis so that lift() inverts project().
std::array<PlanarVector, 3> projected_basis() noexcept;

/// Orthogonal projection of a color vector onto the plane normal to the gray axis.
PlanarVector project(const ColorVector& s) noexcept;

/// Unique spectral color vector (min channel exactly 0) that projects onto v.
/// Throws DomainError for non-finite input.
ColorVector lift(const PlanarVector& v);

/// Image -> vector field, one projected color vector per pixel.
VectorField2D forward_map(const ImageGrid& img);

/// Vector field -> image: lift every cell, scale by the policy, square to intensities.
/// Throws DomainError if any cell is non-finite.
ImageGrid backward_map(const VectorField2D& f, const ScalePolicy& policy);

/// Scale factor backward_map uses for `f` under `policy`.
double scale_factor(const VectorField2D& f, const ScalePolicy& policy);

/// Per pixel: subtract the minimum CS coordinate from all three and square back. This is the
/// direct route to what backward_map(forward_map(img), fixed(1)) computes.
ImageGrid achromatic_free_equivalent(const ImageGrid& img);

/// Throws RangeError if any pixel is outside [0, 1] or non-finite.
void validate(const ImageGrid& img);

}  // namespace fbcs
