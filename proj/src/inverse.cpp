#include "toric/inverse.hpp"

#include "toric/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace toric {

Rat best_rational(double x, long max_den) {
  if (max_den < 1) throw Error("denominator bound must be positive");
  if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
  bool neg = x < 0;
  double y = std::fabs(x);

  // continued fraction convergents h/k; when the denominator cap is crossed,
  // the best approximation is the previous convergent or a semiconvergent
  long h2 = 1, k2 = 0;  // h_{j-2} / k_{j-2}
  long h1 = long(std::floor(y)), k1 = 1;
  double frac = y - std::floor(y);
  for (int iter = 0; iter < 64; ++iter) {
    if (frac < 1e-15) break;
    double inv = 1.0 / frac;
    double af = std::floor(inv);
    if (af > 9e17) break;  // effectively exact already
    long a = long(af);
    frac = inv - af;
    long h = a * h1 + h2, k = a * k1 + k2;
    if (k > max_den) {
      long t = (max_den - k2) / k1;  // largest admissible semiconvergent step
      if (t > 0) {
        long hs = t * h1 + h2, ks = t * k1 + k2;
        double e1 = std::fabs(y - double(h1) / double(k1));
        double es = std::fabs(y - double(hs) / double(ks));
        if (es < e1) {
          h1 = hs;
          k1 = ks;
        }
      }
      break;
    }
    h2 = h1;
    k2 = k1;
    h1 = h;
    k1 = k;
  }
  Rat r{Int(h1), Int(k1)};
  return neg ? Rat(-r) : r;
}

IVec rationalize_direction(const std::vector<double>& dir, long max_den) {
  size_t n = dir.size();
  size_t m = 0;
  for (size_t i = 1; i < n; ++i)
    if (std::fabs(dir[i]) > std::fabs(dir[m])) m = i;
  if (dir[m] == 0.0) throw ZeroVector();
  RVec ratios(n);
  for (size_t i = 0; i < n; ++i) ratios[i] = best_rational(dir[i] / dir[m], max_den);
  Int den = 1;
  for (const Rat& r : ratios) den = boost::multiprecision::lcm(den, rat_den(r));
  IVec w(n);
  for (size_t i = 0; i < n; ++i) w[i] = rat_num(ratios[i] * Rat(den));
  w = primitive_part(w);
  if ((dir[m] > 0) != (w[m] > 0))
    for (Int& x : w) x = -x;
  return w;
}

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// least squares fit y = sum_j a_j u^j, returns the intercept a_0
double ls_intercept(const std::vector<double>& u, const std::vector<double>& y, int degree) {
  int d = std::min<int>(degree, int(u.size()) - 1);
  if (d < 0) throw Error("no samples to fit");
  int m = d + 1;
  std::vector<std::vector<double>> A(m, std::vector<double>(m + 1, 0.0));
  for (size_t s = 0; s < u.size(); ++s) {
    std::vector<double> pw(2 * m - 1, 1.0);
    for (int j = 1; j < 2 * m - 1; ++j) pw[j] = pw[j - 1] * u[s];
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) A[i][j] += pw[i + j];
      A[i][m] += (i == 0 ? 1.0 : pw[i]) * y[s];
    }
  }
  // tiny Gaussian solve
  for (int k = 0; k < m; ++k) {
    int p = k;
    for (int i = k + 1; i < m; ++i)
      if (std::fabs(A[i][k]) > std::fabs(A[p][k])) p = i;
    std::swap(A[p], A[k]);
    if (A[k][k] == 0.0) throw Error("degenerate extrapolation system");
    for (int i = 0; i < m; ++i) {
      if (i == k) continue;
      double f = A[i][k] / A[k][k];
      for (int j = k; j <= m; ++j) A[i][j] -= f * A[k][j];
    }
  }
  return A[0][m] / A[0][0];
}

RateFit fit_rate(const std::vector<ResidualEntry>& residuals, int order) {
  RateFit fit;
  fit.exponent = double(order);
  double logsum = 0;
  for (const auto& r : residuals) {
    if (r.hausdorff <= 0.0) continue;
    logsum += std::log(std::pow(double(r.k), fit.exponent) * r.hausdorff);
    ++fit.samples;
  }
  fit.C = fit.samples ? std::exp(logsum / double(fit.samples)) : 0.0;
  return fit;
}

}  // namespace

ReconstructionResult limit_polytope(const std::vector<SpectrumCloud>& clouds,
                                    const ReconstructionConfig& cfg) {
  if (clouds.empty()) throw Error("no clouds given");
  if (clouds.size() < cfg.min_clouds)
    throw Error("need at least " + std::to_string(cfg.min_clouds) + " clouds, got " +
                std::to_string(clouds.size()));
  size_t n = clouds[0].dim();
  if (n == 0) throw Error("clouds carry no points");
  std::vector<const SpectrumCloud*> cl;
  for (const auto& c : clouds) {
    if (c.k < 1) throw Error("cloud has non-positive k");
    if (c.points.empty()) throw Error("cloud at k=" + std::to_string(c.k) + " is empty");
    if (c.dim() != n) throw DimensionMismatch("clouds disagree on dimension");
    cl.push_back(&c);
  }
  std::sort(cl.begin(), cl.end(),
            [](const SpectrumCloud* a, const SpectrumCloud* b) { return a->k < b->k; });
  for (size_t i = 1; i < cl.size(); ++i)
    if (cl[i]->k == cl[i - 1]->k)
      throw Error("duplicate cloud at k=" + std::to_string(cl[i]->k));

  long k_max = cl.back()->k;
  double tau = cfg.tolerance.value_or(0.4 * TWO_PI / double(k_max));
  std::ostringstream cert;
  cert << "clouds: " << cl.size() << ", k_max = " << k_max << ", tolerance = " << fmt_double(tau)
       << " (absolute), denominator bound = " << cfg.denominator_bound << "\n";

  // hull of the largest cloud; points sorted for determinism
  std::vector<std::vector<double>> top = cl.back()->points;
  std::sort(top.begin(), top.end());
  top.erase(std::unique(top.begin(), top.end()), top.end());
  std::vector<HullFacet> hull = convex_hull_facets(top);
  cert << "hull: " << hull.size() << " facet(s)\n";

  // rationalize outward directions, cross-validate against the cloud support
  std::set<IVec> seen;
  std::vector<IVec> normals;  // inward
  std::vector<std::string> rejected;
  for (const auto& hf : hull) {
    IVec w;
    try {
      w = rationalize_direction(hf.normal, cfg.denominator_bound);
    } catch (const Error&) {
      rejected.push_back("unrationalizable direction");
      continue;
    }
    double wn = 0;
    std::vector<double> wd(n);
    for (size_t i = 0; i < n; ++i) {
      wd[i] = w[i].convert_to<double>();
      wn += wd[i] * wd[i];
    }
    wn = std::sqrt(wn);
    double sup = -std::numeric_limits<double>::infinity();
    for (const auto& p : top) {
      double v = 0;
      for (size_t i = 0; i < n; ++i) v += wd[i] * p[i];
      sup = std::max(sup, v);
    }
    // a genuine facet direction supports an (n-1)-dimensional contact set;
    // count cloud points within tau of the supporting hyperplane
    size_t contact = 0;
    for (const auto& p : top) {
      double v = 0;
      for (size_t i = 0; i < n; ++i) v += wd[i] * p[i];
      if (sup - v <= tau * wn) ++contact;
    }
    if (contact < n) {
      rejected.push_back("direction " + format_ivec(w) + " supports only " +
                         std::to_string(contact) + " point(s)");
      continue;
    }
    IVec inward(n);
    for (size_t i = 0; i < n; ++i) inward[i] = -w[i];
    if (seen.insert(inward).second) normals.push_back(inward);
  }
  for (const auto& r : rejected) cert << "rejected: " << r << "\n";
  cert << "directions kept: " << normals.size() << "\n";
  if (normals.empty())
    throw RationalizationFailed("no facet direction survived rationalization; " +
                                std::to_string(rejected.size()) + " rejected");

  // per-cloud supports in 2pi-units, extrapolated to 1/k -> 0
  std::vector<double> uvals;
  for (const auto* c : cl) uvals.push_back(1.0 / double(c->k));
  std::vector<Rat> offsets;
  for (const IVec& x : normals) {
    std::vector<double> lam;
    std::vector<double> xd(n);
    for (size_t i = 0; i < n; ++i) xd[i] = x[i].convert_to<double>();
    for (const auto* c : cl) {
      double mn = std::numeric_limits<double>::infinity();
      for (const auto& p : c->points) {
        double v = 0;
        for (size_t i = 0; i < n; ++i) v += xd[i] * p[i];
        mn = std::min(mn, v);
      }
      lam.push_back(-mn / TWO_PI);
    }
    offsets.push_back(rat_from_double(ls_intercept(uvals, lam, cfg.noise_order)));
  }

  HPolytope raw;
  raw.dim = n;
  for (size_t f = 0; f < normals.size(); ++f) raw.facets.push_back({normals[f], offsets[f]});

  std::vector<Vertex> raw_verts;
  try {
    raw_verts = vertex_enumeration(raw, /*require_simple=*/false);
  } catch (const Error& e) {
    throw RationalizationFailed(std::string("surviving directions do not bound a polytope: ") +
                                e.what());
  }
  RVec v0 = raw_verts[0].x;
  cert << "raw lex-min vertex at " << format_rvec(v0) << " (translated to the origin)\n";

  // translate by -v0, then snap offsets to integers
  HPolytope snapped;
  snapped.dim = n;
  double worst_snap = 0;
  for (size_t f = 0; f < raw.facets.size(); ++f) {
    Rat shifted = raw.facets[f].offset + dot(raw.facets[f].normal, v0);
    Int z = rat_round_nearest(shifted);
    Rat move = shifted - Rat(z);
    if (move < 0) move = -move;
    double move_abs = to_absolute(move);
    worst_snap = std::max(worst_snap, move_abs);
    if (move_abs > tau) {
      throw SnapExceeded("facet " + format_ivec(raw.facets[f].normal) + " offset " +
                         format_rational(shifted) + " is " + fmt_double(move_abs) +
                         " (absolute) from the nearest integer, tolerance " + fmt_double(tau));
    }
    snapped.facets.push_back({raw.facets[f].normal, Rat(z)});
  }
  cert << "snap: worst offset move " << fmt_double(worst_snap) << " (absolute)\n";

  // exact dedup, then drop halfspaces with lower-dimensional contact sets
  {
    std::vector<Halfspace> uniq;
    for (const auto& h : snapped.facets) {
      bool dup = false;
      for (const auto& u : uniq)
        if (u.normal == h.normal && u.offset == h.offset) dup = true;
      if (!dup) uniq.push_back(h);
    }
    if (uniq.size() != snapped.facets.size())
      cert << "merged " << snapped.facets.size() - uniq.size() << " duplicate facet(s)\n";
    snapped.facets = std::move(uniq);
  }
  std::vector<Vertex> sv;
  try {
    sv = vertex_enumeration(snapped, /*require_simple=*/false);
  } catch (const Error& e) {
    throw RationalizationFailed(std::string("snapped polytope is degenerate: ") + e.what());
  }
  HPolytope kept;
  kept.dim = n;
  for (size_t f = 0; f < snapped.facets.size(); ++f) {
    std::vector<RVec> contact;
    for (const auto& v : sv)
      if (facet_value(snapped.facets[f], v.x) == 0) contact.push_back(v.x);
    bool facet_rank = false;
    if (contact.size() >= n) {
      std::vector<RVec> diffs;
      for (size_t i = 1; i < contact.size(); ++i) {
        RVec d(n);
        for (size_t j = 0; j < n; ++j) d[j] = contact[i][j] - contact[0][j];
        diffs.push_back(std::move(d));
      }
      facet_rank = rational_rank(diffs) == n - 1;
    } else if (n == 1) {
      facet_rank = contact.size() == 1;
    }
    if (facet_rank)
      kept.facets.push_back(snapped.facets[f]);
    else
      cert << "dropped redundant halfspace " << format_ivec(snapped.facets[f].normal)
           << " (contact dimension below " << n - 1 << ")\n";
  }

  ValidationReport rep = validate_delzant(kept, "reconstructed");
  if (!rep.ok) {
    std::string msg = "reconstructed polytope is not Delzant";
    for (const auto& v : rep.violations) msg += "; " + v.kind + ": " + v.detail;
    throw NotDelzant(msg);
  }
  DelzantPolytope d = std::move(*rep.polytope);

  PrequantizationResult pr = check_prequantizable(d);
  if (!pr.ok) {
    std::string msg = "reconstructed polytope is not prequantizable";
    for (const auto& o : pr.offenders)
      msg += "; edge " + format_rvec(d.vertices[o.u].x) + "-" + format_rvec(d.vertices[o.v].x) +
             " length " + format_rational(o.length);
    throw NotPrequantizable(msg);
  }
  DelzantPolytope final_p = translate(d, pr.translation);
  cert << "validated Delzant with " << final_p.facets.size() << " facet(s), canonical shift "
       << format_rvec(pr.translation) << "\n";

  ReconstructionResult res;
  res.translation.resize(n);
  for (size_t i = 0; i < n; ++i) res.translation[i] = -v0[i] + pr.translation[i];

  // residuals against the reconstruction carried back into the data frame;
  // the lattice anchor translates with the polytope, so this is exact
  RVec back(n);
  for (size_t i = 0; i < n; ++i) back[i] = -res.translation[i];
  DelzantPolytope data_frame = translate(final_p, back);
  for (const auto* c : cl) {
    SpectrumCloud model = to_cloud(model_spectrum_exact(data_frame, c->k), n, "model");
    res.residuals.push_back({c->k, hausdorff_distance(c->points, model.points)});
  }
  res.rate = fit_rate(res.residuals, cfg.noise_order);
  cert << "residuals:";
  for (const auto& r : res.residuals) cert << " k=" << r.k << ":" << fmt_double(r.hausdorff);
  cert << "\nrate fit: C = " << fmt_double(res.rate.C) << " at exponent "
       << fmt_double(res.rate.exponent) << " over " << res.rate.samples << " sample(s)\n";

  res.polytope = std::move(final_p);
  res.certificate = cert.str();
  return res;
}

ConvergenceReport convergence_report(const std::vector<SpectrumCloud>& clouds,
                                     const DelzantPolytope& p) {
  if (clouds.empty()) throw Error("no clouds given");
  ConvergenceReport rep;
  for (const auto& c : clouds) {
    if (c.dim() != p.dim) throw DimensionMismatch("cloud dimension differs from the polytope");
    SpectrumCloud model = to_cloud(model_spectrum_exact(p, c.k), p.dim, "model");
    rep.residuals.push_back({c.k, hausdorff_distance(c.points, model.points)});

    WorstOffender w;
    w.k = c.k;
    w.distance = -1;
    for (const auto& pt : c.points) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& mp : model.points) {
        double d2 = 0;
        for (size_t i = 0; i < pt.size(); ++i) d2 += (pt[i] - mp[i]) * (pt[i] - mp[i]);
        best = std::min(best, d2);
      }
      best = std::sqrt(best);
      if (best > w.distance) {
        w.distance = best;
        w.point = pt;
      }
    }
    rep.worst.push_back(std::move(w));
  }
  rep.rate = fit_rate(rep.residuals, 1);
  return rep;
}

bool isomorphic(const DelzantPolytope& a, const DelzantPolytope& b) {
  return polytope_equal(a, b);
}

}  // namespace toric
