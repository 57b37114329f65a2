#include "toric/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace toric {

SpectrumCloud to_cloud(const ExactSpectrum& s, size_t dim, const std::string& source) {
  SpectrumCloud c;
  c.k = s.k;
  c.exact = true;
  c.source = source;
  c.points.reserve(s.points.size());
  for (const auto& p : s.points) {
    std::vector<double> q(dim);
    for (size_t i = 0; i < dim; ++i) q[i] = to_absolute(p[i]);
    c.points.push_back(std::move(q));
  }
  return c;
}

namespace {

RVec require_prequantized_anchor(const DelzantPolytope& p) {
  PrequantizationResult pr = check_prequantizable(p);
  if (!pr.ok) {
    std::string msg = "polytope is not prequantizable;";
    for (const auto& o : pr.offenders)
      msg += " edge " + format_rvec(p.vertices[o.u].x) + "-" + format_rvec(p.vertices[o.v].x) +
             " has lattice length " + format_rational(o.length);
    throw NotPrequantizable(msg);
  }
  return p.vertices[0].x;  // lex-smallest vertex anchors the lattice
}

}  // namespace

ExactSpectrum model_spectrum_exact(const DelzantPolytope& p, long k) {
  if (k < 1) throw Error("k must be a positive integer");
  RVec v0 = require_prequantized_anchor(p);
  ExactSpectrum s;
  s.k = k;
  s.points = lattice_points(p.hp(), Rat(1, k), v0);
  return s;
}

SpectrumCloud model_spectrum(const DelzantPolytope& p, long k) {
  return to_cloud(model_spectrum_exact(p, k), p.dim, "model");
}

ExactSpectrum metaplectic_spectrum_exact(const DelzantPolytope& p, long k) {
  if (k < 1) throw Error("k must be a positive integer");
  RVec v0 = require_prequantized_anchor(p);
  HalfFormResult hf = half_form_vector(p);
  if (!hf.ok) {
    std::string msg = "no half-form parity vector; conflicting facet set {";
    for (size_t i = 0; i < hf.certificate.size(); ++i) {
      if (i) msg += ",";
      msg += std::to_string(hf.certificate[i]);
    }
    throw NoHalfForm(msg + "}");
  }
  RVec offset(p.dim);
  for (size_t i = 0; i < p.dim; ++i) offset[i] = v0[i] + Rat(hf.u[i], 2 * k);
  ExactSpectrum s;
  s.k = k;
  s.points = lattice_points(p.hp(), Rat(1, k), offset);
  // parity forces every facet value into (odd/2)/k territory, never 0; keep
  // the theorem honest here rather than trusting the enumeration boundary
  for (const auto& pt : s.points)
    for (const auto& h : p.facets)
      if (facet_value(h, pt) < Rat(1, 2 * k))
        throw InconsistentSystem("metaplectic point " + format_rvec(pt) +
                                 " has facet clearance below 1/(2k)");
  return s;
}

SpectrumCloud metaplectic_spectrum(const DelzantPolytope& p, long k) {
  return to_cloud(metaplectic_spectrum_exact(p, k), p.dim, "metaplectic");
}

long quantum_dimension(const DelzantPolytope& p, long k, bool metaplectic) {
  ExactSpectrum s = metaplectic ? metaplectic_spectrum_exact(p, k) : model_spectrum_exact(p, k);
  return long(s.points.size());
}

WeylReport weyl_report(const DelzantPolytope& p, long k) {
  WeylReport r;
  r.k = k;
  r.count = quantum_dimension(p, k, false);
  Rat vol = polytope_volume(p);
  Rat kn = 1;
  for (size_t i = 0; i < p.dim; ++i) kn *= Rat(k);
  Rat leading = kn * vol;
  r.leading = to_double(leading);
  Rat gap = Rat(r.count) - leading;
  if (gap < 0) gap = -gap;
  r.relative_gap = to_double(gap * Rat(k) / kn);  // |count - leading| / k^(n-1)
  return r;
}

double Polynomial::eval(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& t : terms) {
    double m = to_double(t.coeff);
    for (size_t i = 0; i < dim; ++i)
      for (unsigned e = 0; e < t.exps[i]; ++e) m *= x[i];
    s += m;
  }
  return s;
}

Rat Polynomial::eval(const RVec& x) const {
  Rat s = 0;
  for (const auto& t : terms) {
    Rat m = t.coeff;
    for (size_t i = 0; i < dim; ++i)
      for (unsigned e = 0; e < t.exps[i]; ++e) m *= x[i];
    s += m;
  }
  return s;
}

double DeformationSeries::sup_g1_estimate(const std::vector<double>& lo,
                                          const std::vector<double>& hi, size_t samples) const {
  if (g.empty()) return 0.0;
  const auto& g1 = g[0];
  double sup = 0.0;
  std::vector<double> x(dim);
  std::vector<size_t> idx(dim, 0);
  for (;;) {
    for (size_t i = 0; i < dim; ++i) {
      double t = samples > 1 ? double(idx[i]) / double(samples - 1) : 0.0;
      x[i] = lo[i] + t * (hi[i] - lo[i]);
    }
    double norm2 = 0.0;
    for (const auto& comp : g1) {
      double v = comp.eval(x);
      norm2 += v * v;
    }
    sup = std::max(sup, std::sqrt(norm2));
    size_t d = 0;
    while (d < dim && ++idx[d] == samples) idx[d++] = 0;
    if (d == dim) break;
  }
  return sup;
}

SpectrumCloud apply_deformation(const SpectrumCloud& c, const DeformationSeries& g) {
  if (g.order != g.g.size())
    throw Error("deformation order disagrees with the number of coefficient tuples");
  SpectrumCloud out;
  out.k = c.k;
  out.exact = g.order == 0 ? c.exact : false;
  out.source = c.source.empty() ? "deformed" : c.source + "+deformed";
  if (g.order == 0) {
    out.points = c.points;  // bitwise identity
    out.source = c.source;
    return out;
  }
  double k = double(c.k);
  for (const auto& p : c.points) {
    if (p.size() != g.dim) throw DimensionMismatch("deformation dimension mismatch");
    std::vector<double> q = p;
    double scale = 1.0;
    for (size_t j = 0; j < g.order; ++j) {
      scale /= k;
      for (size_t i = 0; i < g.dim; ++i) q[i] += scale * g.g[j][i].eval(p);
    }
    out.points.push_back(std::move(q));
  }
  // collisions are possible for non-injective deformations; flag, don't guess
  auto sorted = out.points;
  std::sort(sorted.begin(), sorted.end());
  size_t collisions = 0;
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) ++collisions;
  if (collisions > 0) out.source += ";collisions=" + std::to_string(collisions);
  return out;
}

SpectrumCloud add_noise(const SpectrumCloud& c, double C, double N, uint64_t seed) {
  SpectrumCloud out;
  out.k = c.k;
  out.exact = false;
  out.source = c.source.empty() ? "noisy" : c.source + "+noise";
  std::mt19937_64 rng(seed);
  // hand-rolled uniforms: distribution objects are not bit-portable
  auto uniform = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
  double radius = C * std::pow(double(c.k), -N);
  size_t n = c.dim();
  for (const auto& p : c.points) {
    std::vector<double> dir(n);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (size_t i = 0; i < n; ++i) {
        // Box-Muller
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        dir[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        norm2 += dir[i] * dir[i];
      }
    } while (norm2 == 0.0);
    double r = radius * std::pow(uniform(), 1.0 / double(n)) / std::sqrt(norm2);
    std::vector<double> q = p;
    for (size_t i = 0; i < n; ++i) q[i] += r * dir[i];
    out.points.push_back(std::move(q));
  }
  return out;
}

double orbit_average(
    const std::function<double(const std::vector<double>&, const std::vector<double>&)>& f,
    const DelzantPolytope& p, const RVec& e, const OrbitMode& mode, size_t n_samples) {
  if (e.size() != p.dim) throw DimensionMismatch("sample point has wrong dimension");
  if (!contains(p.hp(), e))
    throw OutOfPolytope("point " + format_rvec(e) + " lies outside the polytope");
  if (n_samples == 0) throw Error("orbit average needs at least one sample");
  std::vector<double> eabs = to_absolute(e);
  size_t n = p.dim;
  if (!mode.full) {
    if (mode.component >= n) throw Error("orbit component out of range");
    std::vector<double> theta(n, 0.0);
    double acc = 0.0;
    for (size_t j = 0; j < n_samples; ++j) {
      theta[mode.component] = TWO_PI * double(j) / double(n_samples);
      acc += f(theta, eabs);
    }
    return acc / double(n_samples);
  }
  std::vector<size_t> idx(n, 0);
  std::vector<double> theta(n);
  double acc = 0.0;
  size_t total = 0;
  for (;;) {
    for (size_t i = 0; i < n; ++i) theta[i] = TWO_PI * double(idx[i]) / double(n_samples);
    acc += f(theta, eabs);
    ++total;
    size_t d = 0;
    while (d < n && ++idx[d] == n_samples) idx[d++] = 0;
    if (d == n) break;
  }
  return acc / double(total);
}

}  // namespace toric
