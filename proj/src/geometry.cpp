#include "toric/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace toric {

bool rvec_less(const RVec& a, const RVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool rvec_eq(const RVec& a, const RVec& b) { return a == b; }

Rat facet_value(const Halfspace& h, const RVec& x) { return dot(h.normal, x) + h.offset; }

bool contains(const HPolytope& p, const RVec& x) {
  for (const auto& h : p.facets)
    if (facet_value(h, x) < 0) return false;
  return true;
}

bool halfspace_equal_normalized(const Halfspace& a, const Halfspace& b) {
  Int ga = gcd_vec(a.normal), gb = gcd_vec(b.normal);
  if (ga == 0 || gb == 0) return ga == gb && a.offset * gb == b.offset * ga;
  if (a.normal.size() != b.normal.size()) return false;
  for (size_t i = 0; i < a.normal.size(); ++i)
    if (a.normal[i] * gb != b.normal[i] * ga) return false;
  return a.offset / Rat(ga) == b.offset / Rat(gb);
}

namespace {

struct LinCons {
  IVec a;
  Rat b;  // <a, x> + b >= 0
};

// Eliminate variable v from the system; returns false on detected
// infeasibility (a derived constraint with zero normal and negative offset).
bool fm_eliminate(std::vector<LinCons>& cons, size_t v, size_t dim) {
  std::vector<LinCons> pos, neg, keep;
  for (auto& c : cons) {
    if (c.a[v] > 0)
      pos.push_back(std::move(c));
    else if (c.a[v] < 0)
      neg.push_back(std::move(c));
    else
      keep.push_back(std::move(c));
  }
  // dedup by normal, keeping the tightest offset only
  std::map<IVec, Rat> tight;
  auto push = [&](IVec a, Rat b) -> bool {
    bool allzero = true;
    for (const Int& x : a)
      if (x != 0) {
        allzero = false;
        break;
      }
    if (allzero) return b >= 0;
    Int g = gcd_vec(a);
    for (Int& x : a) x /= g;
    b /= Rat(g);
    auto it = tight.find(a);
    if (it == tight.end())
      tight.emplace(std::move(a), std::move(b));
    else if (b < it->second)
      it->second = b;
    return true;
  };
  for (auto& c : keep) {
    Rat b = c.b;
    if (!push(std::move(c.a), std::move(b))) return false;
  }
  for (const auto& p : pos)
    for (const auto& q : neg) {
      // p.a[v] * q + (-q.a[v]) * p cancels the v coefficient exactly
      IVec a(dim);
      for (size_t j = 0; j < dim; ++j) a[j] = p.a[v] * q.a[j] - q.a[v] * p.a[j];
      Rat b = Rat(p.a[v]) * q.b - Rat(q.a[v]) * p.b;
      if (!push(std::move(a), std::move(b))) return false;
    }
  cons.clear();
  for (auto& [a, b] : tight) cons.push_back({a, b});
  return true;
}

}  // namespace

AxisRange coordinate_range(const HPolytope& p, size_t axis) {
  std::vector<LinCons> cons;
  AxisRange r;
  for (const auto& h : p.facets) {
    bool allzero = true;
    for (const Int& x : h.normal)
      if (x != 0) allzero = false;
    if (allzero) {
      if (h.offset < 0) {
        r.feasible = false;
        return r;
      }
      continue;
    }
    cons.push_back({h.normal, h.offset});
  }
  for (size_t v = 0; v < p.dim; ++v) {
    if (v == axis) continue;
    if (!fm_eliminate(cons, v, p.dim)) {
      r.feasible = false;
      return r;
    }
  }
  for (const auto& c : cons) {
    const Int& cv = c.a[axis];
    if (cv == 0) {
      if (c.b < 0) {
        r.feasible = false;
        return r;
      }
      continue;
    }
    Rat bound = -c.b / Rat(cv);
    if (cv > 0) {  // x >= bound
      if (!r.lo || bound > *r.lo) r.lo = bound;
    } else {  // x <= bound
      if (!r.hi || bound < *r.hi) r.hi = bound;
    }
  }
  if (r.lo && r.hi && *r.lo > *r.hi) r.feasible = false;
  return r;
}

BoundingBox bounding_box(const HPolytope& p) {
  BoundingBox box;
  box.lo.resize(p.dim);
  box.hi.resize(p.dim);
  for (size_t i = 0; i < p.dim; ++i) {
    AxisRange r = coordinate_range(p, i);
    if (!r.feasible) {
      box.feasible = false;
      return box;
    }
    if (!r.lo || !r.hi) {
      box.bounded = false;
      return box;
    }
    box.lo[i] = *r.lo;
    box.hi[i] = *r.hi;
  }
  return box;
}

std::vector<Vertex> vertex_enumeration(const HPolytope& p, bool require_simple) {
  size_t n = p.dim, F = p.facets.size();
  if (n == 0) throw NotFullDimensional("polytope dimension is zero");

  BoundingBox box = bounding_box(p);
  if (!box.feasible) throw NotFullDimensional("polytope is empty");
  if (!box.bounded) throw Unbounded("polytope is unbounded");

  std::vector<Vertex> verts;
  std::vector<size_t> idx(n);
  // iterate over all n-subsets of facets in lexicographic index order
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  if (F < n) throw NotFullDimensional("fewer facets than dimension");
  for (;;) {
    std::vector<IVec> A(n);
    RVec b(n);
    for (size_t i = 0; i < n; ++i) {
      A[i] = p.facets[idx[i]].normal;
      b[i] = -p.facets[idx[i]].offset;
    }
    if (auto x = solve_square(A, b)) {
      if (contains(p, *x)) {
        bool dup = false;
        for (const auto& v : verts)
          if (rvec_eq(v.x, *x)) {
            dup = true;
            break;
          }
        if (!dup) verts.push_back({*x, {}});
      }
    }
    // next combination
    size_t i = n;
    while (i > 0) {
      --i;
      if (idx[i] != i + F - n) {
        ++idx[i];
        for (size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) goto done;
    }
    if (F == n) break;  // single combination only
  }
done:

  if (verts.empty()) throw NotFullDimensional("polytope has no vertices");

  for (auto& v : verts) {
    for (size_t f = 0; f < F; ++f)
      if (facet_value(p.facets[f], v.x) == 0) v.active.push_back(f);
  }

  std::sort(verts.begin(), verts.end(),
            [](const Vertex& a, const Vertex& b) { return rvec_less(a.x, b.x); });

  std::vector<RVec> diffs;
  for (size_t i = 1; i < verts.size(); ++i) {
    RVec d(n);
    for (size_t j = 0; j < n; ++j) d[j] = verts[i].x[j] - verts[0].x[j];
    diffs.push_back(std::move(d));
  }
  if (rational_rank(diffs) < n)
    throw NotFullDimensional("vertex set spans a proper affine subspace");

  if (require_simple) {
    for (size_t i = 0; i < verts.size(); ++i)
      if (verts[i].active.size() != n)
        throw NotSimple("vertex " + format_rvec(verts[i].x) + " lies on " +
                        std::to_string(verts[i].active.size()) + " facets, expected " +
                        std::to_string(n));
  }
  return verts;
}

std::vector<RVec> lattice_points(const HPolytope& p, const Rat& step, const RVec& offset) {
  if (step <= 0) throw Error("lattice step must be positive");
  BoundingBox box = bounding_box(p);
  if (!box.feasible) return {};
  if (!box.bounded) throw Unbounded("cannot enumerate lattice points of an unbounded polytope");

  size_t n = p.dim;
  std::vector<Int> lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = rat_ceil((box.lo[i] - offset[i]) / step);
    hi[i] = rat_floor((box.hi[i] - offset[i]) / step);
    if (lo[i] > hi[i]) return {};
  }

  std::vector<RVec> out;
  RVec x(n);
  // nested scan in lex order over multi-indices; recursion depth = dim
  auto scan = [&](auto&& self, size_t d) -> void {
    if (d == n) {
      if (contains(p, x)) out.push_back(x);
      return;
    }
    for (Int m = lo[d]; m <= hi[d]; ++m) {
      x[d] = offset[d] + step * Rat(m);
      self(self, d + 1);
    }
  };
  scan(scan, 0);
  return out;  // lex order by construction
}

namespace {

Rat rat_det(std::vector<RVec> m) {
  size_t n = m.size();
  Rat det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// vertex sets of each proper face are recovered from facet incidences; the
// pulling triangulation cones the lex-min vertex of each face over the
// triangulations of the facets of that face which miss it
struct Pulling {
  const std::vector<Vertex>& verts;
  std::vector<std::vector<bool>> on_facet;  // [facet][vertex]
  size_t nfacets;
  std::vector<std::vector<size_t>> simplices;

  void face(const std::vector<size_t>& W, size_t d, std::vector<size_t>& chain) {
    if (d == 0) {
      std::vector<size_t> s = chain;
      s.push_back(W[0]);
      simplices.push_back(std::move(s));
      return;
    }
    size_t base = W[0];  // verts are lex-sorted, so min index is lex-min
    chain.push_back(base);
    std::set<std::vector<size_t>> seen;
    for (size_t f = 0; f < nfacets; ++f) {
      if (on_facet[f][base]) continue;
      std::vector<size_t> G;
      for (size_t w : W)
        if (on_facet[f][w]) G.push_back(w);
      if (G.empty()) continue;
      // dimension check: common active count must match a (d-1)-face
      if (d >= 2) {
        size_t common = 0;
        for (size_t g = 0; g < nfacets; ++g) {
          bool all = true;
          for (size_t w : G)
            if (!on_facet[g][w]) {
              all = false;
              break;
            }
          if (all) ++common;
        }
        size_t n = verts[0].x.size();
        if (n - common != d - 1) continue;  // lower-dimensional contact, skip
      } else if (G.size() != 1) {
        continue;
      }
      if (!seen.insert(G).second) continue;
      face(G, d - 1, chain);
    }
    chain.pop_back();
  }
};

}  // namespace

Rat polytope_volume(const HPolytope& p) {
  std::vector<Vertex> verts = vertex_enumeration(p);
  size_t n = p.dim, F = p.facets.size();

  Pulling pull{verts, {}, F, {}};
  pull.on_facet.assign(F, std::vector<bool>(verts.size(), false));
  for (size_t v = 0; v < verts.size(); ++v)
    for (size_t f : verts[v].active) pull.on_facet[f][v] = true;

  std::vector<size_t> all(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) all[i] = i;
  std::vector<size_t> chain;
  pull.face(all, n, chain);

  Rat total = 0;
  Int fact = 1;
  for (size_t i = 2; i <= n; ++i) fact *= Int(i);
  for (const auto& s : pull.simplices) {
    std::vector<RVec> m(n, RVec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = verts[s[i + 1]].x[j] - verts[s[0]].x[j];
    Rat d = rat_det(std::move(m));
    if (d < 0) d = -d;
    total += d;
  }
  return total / Rat(fact);
}

double hausdorff_distance(const std::vector<RVec>& a, const std::vector<RVec>& b) {
  if (a.empty() || b.empty()) throw EmptySet("hausdorff_distance needs nonempty sets");
  Rat worst = 0;
  auto one_sided = [&](const std::vector<RVec>& from, const std::vector<RVec>& to) {
    for (const auto& x : from) {
      bool first = true;
      Rat best = 0;
      for (const auto& y : to) {
        Rat d2 = 0;
        for (size_t i = 0; i < x.size(); ++i) {
          Rat d = x[i] - y[i];
          d2 += d * d;
        }
        if (first || d2 < best) {
          best = d2;
          first = false;
        }
        if (best == 0) break;
      }
      if (best > worst) worst = best;
    }
  };
  one_sided(a, b);
  one_sided(b, a);
  return std::sqrt(to_double(worst));
}

double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b) {
  if (a.empty() || b.empty()) throw EmptySet("hausdorff_distance needs nonempty sets");

  // sort by first coordinate so the inner scan can stop once the coordinate
  // gap alone exceeds the best squared distance found so far
  auto sorted = [](std::vector<std::vector<double>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<std::vector<double>> sa = sorted(a), sb = sorted(b);

  auto one_sided = [](const std::vector<std::vector<double>>& from,
                      const std::vector<std::vector<double>>& to) {
    double worst = 0.0;
    for (const auto& x : from) {
      auto it = std::lower_bound(to.begin(), to.end(), x);
      size_t center = size_t(it - to.begin());
      double best = std::numeric_limits<double>::infinity();
      auto consider = [&](size_t j) {
        double d2 = 0;
        for (size_t i = 0; i < x.size(); ++i) {
          double d = x[i] - to[j][i];
          d2 += d * d;
        }
        if (d2 < best) best = d2;
      };
      // walk outward in both directions
      size_t up = center;
      while (up < to.size()) {
        double gap = to[up][0] - x[0];
        if (gap > 0 && gap * gap >= best) break;
        consider(up);
        ++up;
      }
      size_t down = center;
      while (down > 0) {
        --down;
        double gap = x[0] - to[down][0];
        if (gap > 0 && gap * gap >= best) break;
        consider(down);
      }
      if (best > worst) worst = best;
    }
    return worst;
  };
  return std::sqrt(std::max(one_sided(sa, sb), one_sided(sb, sa)));
}

}  // namespace toric
