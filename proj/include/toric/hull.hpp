// Floating-point convex hull of a finite cloud, reported as outward facet
// directions with their supports. Dimension 1 is min/max, dimension 2 is the
// monotone chain, higher dimensions a dimension-generic quickhull. Triangular
// output facets of one geometric facet are fine: the inverse pipeline merges
// directions after rationalization.

#pragma once

#include "toric/errors.hpp"

#include <vector>

namespace toric {

struct HullFacet {
  std::vector<double> normal;  // outward, unit length
  double support;              // max over the cloud of <normal, x>
};

// throws HullDegenerate when the cloud spans a proper affine subspace
std::vector<HullFacet> convex_hull_facets(const std::vector<std::vector<double>>& points);

}  // namespace toric
