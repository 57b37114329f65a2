// Named example polytopes (2pi-units): the interval, the standard simplices,
// the unit square and the first two Hirzebruch trapezoids. These are the
// fixtures the acceptance checks quantify over.

#pragma once

#include "toric/delzant.hpp"

#include <vector>

namespace toric {

DelzantPolytope cp1();          // [0, 2pi]
DelzantPolytope cp2();          // triangle, vertices 0, 2pi e1, 2pi e2
DelzantPolytope cp1xcp1();      // square [0, 2pi]^2
DelzantPolytope hirzebruch1();  // trapezoid, vertices (0,0),(2,0),(1,1),(0,1) times 2pi
DelzantPolytope hirzebruch2();  // trapezoid, vertices (0,0),(3,0),(1,1),(0,1) times 2pi
DelzantPolytope cp3();          // 3-simplex (not part of library())

// the five standard fixtures above, in a fixed order
std::vector<DelzantPolytope> library();

}  // namespace toric
