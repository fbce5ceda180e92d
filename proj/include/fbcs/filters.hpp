#pragma once

#include "fbcs/fieldops.hpp"
#include "fbcs/mapping.hpp"

namespace fbcs {

/// Keeps the spectral part of every pixel and a fraction `beta` of its achromatic part.
/// beta = 0 removes the achromatic component entirely; beta = 1 returns the input unchanged.
/// Throws DomainError for beta outside [0, 1].
ImageGrid achromatic_filter(const ImageGrid& img, double beta);

/// |s_w| = sqrt(3) * min(sqrt(I_R), sqrt(I_G), sqrt(I_B)) per pixel.
ScalarField2D achromatic_map(const ImageGrid& img);

/// Gradient of the achromatic map rendered through backward_map with automatic scaling. Hue
/// encodes gradient direction and brightness its magnitude. Needs at least 2x2 pixels.
ImageGrid achromatic_gradient_image(const ImageGrid& img);

}  // namespace fbcs
