// Exact H-polytope geometry: P = { x : <normal_f, x> + offset_f >= 0 }.
// Coordinates are rationals in 2pi-units. Boundedness and bounding boxes come
// from Fourier-Motzkin elimination, vertices from n-subset intersection with
// full feasibility checks, volume from a pulling triangulation.

#pragma once

#include "toric/errors.hpp"
#include "toric/linalg.hpp"
#include "toric/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

struct Halfspace {
  IVec normal;  // integer, inward
  Rat offset;
};

struct HPolytope {
  size_t dim = 0;
  std::vector<Halfspace> facets;
};

struct Vertex {
  RVec x;
  std::vector<size_t> active;  // indices of facets tight at x, sorted
};

// lexicographic comparison helpers
bool rvec_less(const RVec& a, const RVec& b);
bool rvec_eq(const RVec& a, const RVec& b);

Rat facet_value(const Halfspace& h, const RVec& x);
bool contains(const HPolytope& p, const RVec& x);

// same halfspace up to positive scaling (normals reduced to primitive)
bool halfspace_equal_normalized(const Halfspace& a, const Halfspace& b);

struct AxisRange {
  bool feasible = true;
  std::optional<Rat> lo, hi;  // absent = unbounded on that side
};

// exact projection of P onto one coordinate via Fourier-Motzkin
AxisRange coordinate_range(const HPolytope& p, size_t axis);

struct BoundingBox {
  bool feasible = true;
  bool bounded = true;
  std::vector<Rat> lo, hi;  // valid when feasible && bounded
};
BoundingBox bounding_box(const HPolytope& p);

// All vertices, sorted lexicographically, each with its full active facet
// set. Throws Unbounded / NotFullDimensional; throws NotSimple when a vertex
// has more than dim tight facets unless require_simple is false (the inverse
// pipeline needs the relaxed variant for intermediate polytopes).
std::vector<Vertex> vertex_enumeration(const HPolytope& p, bool require_simple = true);

// (offset + step * Z^dim) intersect P, boundary included, sorted lex.
// step must be positive.
std::vector<RVec> lattice_points(const HPolytope& p, const Rat& step, const RVec& offset);

// Euclidean volume in the coordinate units, exact. Pulling triangulation from
// the lexicographically smallest vertex of every face; needs a simple
// polytope, which vertex_enumeration enforces.
Rat polytope_volume(const HPolytope& p);

// Hausdorff distance between finite nonempty point sets (throws EmptySet).
// Exact squared distances are compared over Q, a single sqrt at the end; the
// double overload works on raw float clouds.
double hausdorff_distance(const std::vector<RVec>& a, const std::vector<RVec>& b);
double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b);

}  // namespace toric
