#include "toric/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace toric {

namespace {

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double cloud_scale(const std::vector<std::vector<double>>& pts) {
  double s = 1.0;
  for (const auto& p : pts)
    for (double x : p) s = std::max(s, std::fabs(x));
  return s;
}

// determinant of a tiny dense matrix, plain elimination
double tiny_det(std::vector<std::vector<double>> m) {
  size_t n = m.size();
  double d = 1.0;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    for (size_t i = k + 1; i < n; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[p][k])) p = i;
    if (m[p][k] == 0.0) return 0.0;
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      double f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

// generalized cross product: normal of the hyperplane spanned by
// p[1]-p[0], ..., p[n-1]-p[0] in R^n (sign arbitrary, fixed by the caller)
std::vector<double> hyperplane_normal(const std::vector<std::vector<double>>& p) {
  size_t n = p[0].size();
  std::vector<std::vector<double>> e(n - 1, std::vector<double>(n));
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = 0; j < n; ++j) e[i][j] = p[i + 1][j] - p[0][j];
  std::vector<double> nrm(n);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
    for (size_t r = 0; r + 1 < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r][cc++] = e[r][c];
      }
    }
    nrm[j] = (j % 2 == 0 ? 1.0 : -1.0) * tiny_det(minor);
  }
  return nrm;
}

std::vector<HullFacet> hull_1d(const std::vector<std::vector<double>>& pts, double eps) {
  double lo = pts[0][0], hi = pts[0][0];
  for (const auto& p : pts) {
    lo = std::min(lo, p[0]);
    hi = std::max(hi, p[0]);
  }
  if (hi - lo <= eps) throw HullDegenerate("all points coincide");
  return {{{1.0}, hi}, {{-1.0}, -lo}};
}

std::vector<HullFacet> hull_2d(const std::vector<std::vector<double>>& pts, double eps) {
  std::vector<std::vector<double>> s = pts;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() < 3) throw HullDegenerate("fewer than 3 distinct points");

  double sc = cloud_scale(pts);
  double tol = eps * sc * sc;  // cross products scale like length^2
  auto cross = [](const std::vector<double>& o, const std::vector<double>& a,
                  const std::vector<double>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };

  // monotone chain, strict turns only (collinear points dropped)
  std::vector<std::vector<double>> h(2 * s.size());
  size_t m = 0;
  for (const auto& p : s) {
    while (m >= 2 && cross(h[m - 2], h[m - 1], p) <= tol) --m;
    h[m++] = p;
  }
  size_t lower = m + 1;
  for (size_t i = s.size() - 1; i-- > 0;) {
    const auto& p = s[i];
    while (m >= lower && cross(h[m - 2], h[m - 1], p) <= tol) --m;
    h[m++] = p;
  }
  h.resize(m - 1);  // CCW vertex loop
  if (h.size() < 3) throw HullDegenerate("points are collinear");

  std::vector<HullFacet> out;
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    double ex = b[0] - a[0], ey = b[1] - a[1];
    double len = std::hypot(ex, ey);
    std::vector<double> nrm = {ey / len, -ex / len};  // outward for a CCW loop
    double sup = -std::numeric_limits<double>::infinity();
    for (const auto& p : pts) sup = std::max(sup, dotd(nrm, p));
    out.push_back({std::move(nrm), sup});
  }
  return out;
}

struct QFacet {
  std::vector<int> vtx;        // n point indices, sorted
  std::vector<double> nrm;     // outward unit
  double off = 0;              // <nrm, x> = off on the plane
  std::vector<int> outside;
  std::vector<int> nb;         // adjacent facet ids
  bool dead = false;
};

std::vector<HullFacet> hull_nd(const std::vector<std::vector<double>>& pts, double eps) {
  size_t n = pts[0].size();
  size_t N = pts.size();
  double scale = cloud_scale(pts);
  double out_eps = eps * scale;

  // greedy affinely independent seed: extreme along axis 0, then repeatedly
  // the point farthest from the affine hull built so far (Gram-Schmidt)
  std::vector<int> seed;
  {
    int lo = 0, hi = 0;
    for (int i = 1; i < int(N); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    if (lo == hi) throw HullDegenerate("cloud has no extent along axis 0");
    seed = {lo, hi};
    std::vector<std::vector<double>> basis;  // orthonormal
    auto residual = [&](int idx) {
      std::vector<double> v(n);
      for (size_t j = 0; j < n; ++j) v[j] = pts[idx][j] - pts[seed[0]][j];
      for (const auto& b : basis) {
        double c = dotd(v, b);
        for (size_t j = 0; j < n; ++j) v[j] -= c * b[j];
      }
      return v;
    };
    auto push_basis = [&](int idx) {
      std::vector<double> v = residual(idx);
      double norm = std::sqrt(dotd(v, v));
      for (auto& x : v) x /= norm;
      basis.push_back(std::move(v));
    };
    push_basis(hi);
    while (seed.size() < n + 1) {
      int best = -1;
      double bd = 0;
      for (int i = 0; i < int(N); ++i) {
        std::vector<double> v = residual(i);
        double d = std::sqrt(dotd(v, v));
        if (d > bd) {
          bd = d;
          best = i;
        }
      }
      if (best < 0 || bd <= out_eps)
        throw HullDegenerate("cloud spans a proper affine subspace");
      seed.push_back(best);
      if (seed.size() < n + 1) push_basis(best);
    }
  }

  std::vector<double> inner(n, 0.0);
  for (int s : seed)
    for (size_t j = 0; j < n; ++j) inner[j] += pts[s][j] / double(n + 1);

  std::vector<QFacet> fs;
  auto make_facet = [&](std::vector<int> vtx) {
    std::sort(vtx.begin(), vtx.end());
    std::vector<std::vector<double>> corners;
    for (int v : vtx) corners.push_back(pts[v]);
    std::vector<double> nrm = hyperplane_normal(corners);
    double len = std::sqrt(dotd(nrm, nrm));
    if (len == 0.0) throw HullDegenerate("degenerate facet in hull construction");
    for (auto& x : nrm) x /= len;
    double off = dotd(nrm, pts[vtx[0]]);
    if (dotd(nrm, inner) > off) {  // flip outward
      for (auto& x : nrm) x = -x;
      off = -off;
    }
    QFacet f;
    f.vtx = std::move(vtx);
    f.nrm = std::move(nrm);
    f.off = off;
    return f;
  };

  for (size_t skip = 0; skip < seed.size(); ++skip) {
    std::vector<int> vtx;
    for (size_t i = 0; i < seed.size(); ++i)
      if (i != skip) vtx.push_back(seed[i]);
    fs.push_back(make_facet(vtx));
  }
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = 0; j < fs.size(); ++j)
      if (i != j) fs[i].nb.push_back(int(j));

  auto dist = [&](const QFacet& f, int p) { return dotd(f.nrm, pts[p]) - f.off; };

  std::set<int> in_seed(seed.begin(), seed.end());
  for (int i = 0; i < int(N); ++i) {
    if (in_seed.count(i)) continue;
    for (auto& f : fs)
      if (dist(f, i) > out_eps) {
        f.outside.push_back(i);
        break;
      }
  }

  for (;;) {
    int fi = -1;
    for (int i = 0; i < int(fs.size()); ++i)
      if (!fs[i].dead && !fs[i].outside.empty()) {
        fi = i;
        break;
      }
    if (fi < 0) break;

    int apex = fs[fi].outside[0];
    double bd = dist(fs[fi], apex);
    for (int p : fs[fi].outside) {
      double d = dist(fs[fi], p);
      if (d > bd) {
        bd = d;
        apex = p;
      }
    }

    // visible set by flood fill across adjacency
    std::vector<int> stack = {fi}, visible;
    std::set<int> vis = {fi};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      visible.push_back(f);
      for (int g : fs[f].nb) {
        if (fs[g].dead || vis.count(g)) continue;
        if (dist(fs[g], apex) > out_eps) {
          vis.insert(g);
          stack.push_back(g);
        }
      }
    }

    // horizon ridges: (visible facet, hidden neighbor) pairs
    struct Ridge {
      std::vector<int> verts;
      int hidden;
    };
    std::vector<Ridge> horizon;
    for (int f : visible)
      for (int g : fs[f].nb) {
        if (fs[g].dead || vis.count(g)) continue;
        std::vector<int> shared;
        std::set_intersection(fs[f].vtx.begin(), fs[f].vtx.end(), fs[g].vtx.begin(),
                              fs[g].vtx.end(), std::back_inserter(shared));
        if (shared.size() == n - 1) horizon.push_back({std::move(shared), g});
      }

    std::vector<int> cand;
    for (int f : visible) {
      for (int p : fs[f].outside)
        if (p != apex) cand.push_back(p);
      fs[f].dead = true;
      fs[f].outside.clear();
    }

    std::vector<int> fresh;
    std::map<std::vector<int>, std::vector<int>> ridge_owners;  // sub-ridge -> new facet ids
    for (const Ridge& r : horizon) {
      std::vector<int> vtx = r.verts;
      vtx.push_back(apex);
      QFacet nf = make_facet(std::move(vtx));
      int id = int(fs.size());
      nf.nb.push_back(r.hidden);
      fs[r.hidden].nb.push_back(id);  // dead links pruned below
      fs.push_back(std::move(nf));
      fresh.push_back(id);
      // register the (n-1)-subsets containing the apex for sibling adjacency
      for (size_t drop = 0; drop < fs[id].vtx.size(); ++drop) {
        if (fs[id].vtx[drop] == apex) continue;
        std::vector<int> key;
        for (size_t i = 0; i < fs[id].vtx.size(); ++i)
          if (i != drop) key.push_back(fs[id].vtx[i]);
        ridge_owners[key].push_back(id);
      }
    }
    for (const auto& [key, owners] : ridge_owners) {
      for (size_t i = 0; i < owners.size(); ++i)
        for (size_t j = i + 1; j < owners.size(); ++j) {
          fs[owners[i]].nb.push_back(owners[j]);
          fs[owners[j]].nb.push_back(owners[i]);
        }
    }
    // prune dead/duplicate adjacency entries
    for (int id : fresh) {
      auto& nb = fs[id].nb;
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (const Ridge& r : horizon) {
      auto& nb = fs[r.hidden].nb;
      nb.erase(std::remove_if(nb.begin(), nb.end(), [&](int g) { return fs[g].dead; }), nb.end());
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }

    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int p : cand) {
      for (int id : fresh)
        if (dist(fs[id], p) > out_eps) {
          fs[id].outside.push_back(p);
          break;
        }
    }
  }

  std::vector<HullFacet> out;
  for (const auto& f : fs) {
    if (f.dead) continue;
    double sup = -std::numeric_limits<double>::infinity();
    for (const auto& p : pts) sup = std::max(sup, dotd(f.nrm, p));
    out.push_back({f.nrm, sup});
  }
  return out;
}

}  // namespace

std::vector<HullFacet> convex_hull_facets(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw HullDegenerate("empty cloud");
  size_t n = points[0].size();
  for (const auto& p : points)
    if (p.size() != n) throw HullDegenerate("inconsistent point dimensions");
  const double eps = 1e-9;
  if (n == 0) throw HullDegenerate("zero-dimensional points");
  if (n == 1) return hull_1d(points, eps * cloud_scale(points));
  if (n == 2) return hull_2d(points, eps);
  return hull_nd(points, eps);
}

}  // namespace toric
