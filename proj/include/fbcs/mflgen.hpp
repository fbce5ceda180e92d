#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fbcs/mapping.hpp"

namespace fbcs {

/// A corrosion pit for the synthetic leakage-field generator. Position is in cell units with
/// y counted in raster rows (row 0 at the top); it may lie outside the grid.
struct PitSpec {
  double x = 0.0;
  double y = 0.0;
  double depth = 1.0;   // field strength proxy, > 0
  double radius = 1.0;  // softening length in cells, > 0
};

/// Synthetic magnetic-flux-leakage field. Each pit acts as a point dipole magnetized along -x,
/// buried `radius` cells below the sensor plane; the sensors record its in-plane components.
/// With d = (dx, dy) measured in the y-up frame and rho^2 = |d|^2 + radius^2:
///
///   contribution = 2 depth radius^2 (radius^2 + dy^2 - 2 dx^2, -3 dx dy) / rho^5
///
/// which peaks at the pit center with value (2 depth / radius, 0) and decays monotonically
/// along every ray. Contributions superpose and `background` is added to every cell.
///
/// This is a visualization stand-in, not a validated MFL model.
/// Throws DomainError for non-positive or non-finite depth/radius.
VectorField2D generate_mfl(const std::vector<PitSpec>& pits, std::size_t width,
                           std::size_t height, const PlanarVector& background = {});

/// Field of one pit at cell (x, y), y in raster rows.
PlanarVector pit_contribution(const PitSpec& pit, double x, double y) noexcept;

/// Parses "x,y,depth,radius;x,y,depth,radius;...". An empty or blank string yields no pits.
/// Throws DomainError naming the offending entry.
std::vector<PitSpec> parse_pits(std::string_view text);

}  // namespace fbcs
