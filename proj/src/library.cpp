#include "toric/library.hpp"

namespace toric {

namespace {

Halfspace hs(std::vector<long> normal, long num, long den = 1) {
  IVec n(normal.size());
  for (size_t i = 0; i < normal.size(); ++i) n[i] = normal[i];
  return {std::move(n), Rat(num, den)};
}

}  // namespace

DelzantPolytope cp1() {
  return require_delzant({1, {hs({1}, 0), hs({-1}, 1)}}, "cp1");
}

DelzantPolytope cp2() {
  return require_delzant({2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, 1)}}, "cp2");
}

DelzantPolytope cp1xcp1() {
  return require_delzant(
      {2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, 1), hs({0, -1}, 1)}}, "cp1xcp1");
}

DelzantPolytope hirzebruch1() {
  return require_delzant(
      {2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, 1), hs({-1, -1}, 2)}}, "hirzebruch1");
}

DelzantPolytope hirzebruch2() {
  return require_delzant(
      {2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, 1), hs({-1, -2}, 3)}}, "hirzebruch2");
}

DelzantPolytope cp3() {
  return require_delzant(
      {3, {hs({1, 0, 0}, 0), hs({0, 1, 0}, 0), hs({0, 0, 1}, 0), hs({-1, -1, -1}, 1)}}, "cp3");
}

std::vector<DelzantPolytope> library() {
  return {cp1(), cp2(), cp1xcp1(), hirzebruch1(), hirzebruch2()};
}

}  // namespace toric
