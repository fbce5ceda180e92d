#pragma once

#include <cstddef>

#include "fbcs/grid.hpp"
#include "fbcs/mapping.hpp"

namespace fbcs {

using ScalarField2D = Grid<double>;

// Differential operators treat cells as unit-spaced points in a right-handed frame: x is the
// column index and y grows upward, so y = height - 1 - row. Interior cells use central
// differences; the outermost rows and columns use first-order one-sided differences. All three
// operators are exact on fields that are affine in x and y. Grids must be at least 2x2.

/// y coordinate of a raster row in the operators' y-up frame.
inline double y_up(std::size_t row, std::size_t height) noexcept {
  return static_cast<double>(height - 1 - row);
}

/// dp/dx + dq/dy.
ScalarField2D divergence(const VectorField2D& f);

/// z component of the curl: dq/dx - dp/dy.
ScalarField2D curl_z(const VectorField2D& f);

/// (ds/dx, ds/dy).
VectorField2D gradient(const ScalarField2D& s);

/// Rescales each field independently onto [-1, 1] and pairs them as (a, b). Constant fields map
/// to 0. Throws DimensionError when the shapes differ.
VectorField2D compose(const ScalarField2D& a, const ScalarField2D& b);

/// Affine map of [min(s), max(s)] onto [lo, hi]; a constant field maps to (lo + hi) / 2.
/// Throws DomainError unless lo < hi.
ScalarField2D minmax_normalize(const ScalarField2D& s, double lo, double hi);

}  // namespace fbcs
