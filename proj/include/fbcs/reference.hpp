#pragma once

// Serial reference versions of the grid kernels. They share the per-cell arithmetic with the
// OpenMP kernels in the main namespace and must produce bit-identical results; the test suite
// and the benchmarks compare the two.

#include <vector>

#include "fbcs/fieldops.hpp"
#include "fbcs/mapping.hpp"
#include "fbcs/mflgen.hpp"

namespace fbcs::reference {

VectorField2D forward_map(const ImageGrid& img);
ImageGrid backward_map(const VectorField2D& f, const ScalePolicy& policy);
ImageGrid achromatic_free_equivalent(const ImageGrid& img);

ScalarField2D divergence(const VectorField2D& f);
ScalarField2D curl_z(const VectorField2D& f);
VectorField2D gradient(const ScalarField2D& s);

ImageGrid achromatic_filter(const ImageGrid& img, double beta);
ScalarField2D achromatic_map(const ImageGrid& img);

VectorField2D generate_mfl(const std::vector<PitSpec>& pits, std::size_t width,
                           std::size_t height, const PlanarVector& background = {});

}  // namespace fbcs::reference
