// Forward semiclassical data of a toric system: exact joint spectra on the
// scaled lattice, metaplectic (half-form) spectra, polynomial deformations of
// order 1/k, synthetic noise, Weyl counting and torus orbit averages.
//
// Exact spectra live in 2pi-units as rationals; SpectrumCloud is the float
// boundary type with points in absolute units.

#pragma once

#include "toric/delzant.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace toric {

struct ExactSpectrum {
  long k = 0;
  std::vector<RVec> points;  // 2pi-units, lex sorted
};

struct SpectrumCloud {
  long k = 0;
  std::vector<std::vector<double>> points;  // absolute units
  bool exact = false;
  std::string source;

  size_t dim() const { return points.empty() ? 0 : points[0].size(); }
};

SpectrumCloud to_cloud(const ExactSpectrum& s, size_t dim, const std::string& source);

// (v0 + (1/k) Z^n) intersect P, v0 the lex-smallest vertex. Requires a
// prequantizable polytope (throws NotPrequantizable); the set is independent
// of which vertex anchors the lattice.
ExactSpectrum model_spectrum_exact(const DelzantPolytope& p, long k);
SpectrumCloud model_spectrum(const DelzantPolytope& p, long k);

// (v0 + (1/k)(Z^n + u/2)) intersect P with u the half-form parity vector;
// throws NoHalfForm when none exists. Every point is automatically interior
// with facet clearance >= 1/(2k) in 2pi-units (pi/k in absolute units).
ExactSpectrum metaplectic_spectrum_exact(const DelzantPolytope& p, long k);
SpectrumCloud metaplectic_spectrum(const DelzantPolytope& p, long k);

long quantum_dimension(const DelzantPolytope& p, long k, bool metaplectic = false);

struct WeylReport {
  long k = 0;
  long count = 0;
  double leading = 0;       // k^n * vol (2pi-unit volume)
  double relative_gap = 0;  // |count - leading| / k^(n-1)
};
WeylReport weyl_report(const DelzantPolytope& p, long k);

// multivariate polynomial with exact rational coefficients, evaluated either
// exactly on rational points or in double on absolute coordinates
struct Term {
  std::vector<unsigned> exps;
  Rat coeff;
};

struct Polynomial {
  size_t dim = 0;
  std::vector<Term> terms;

  double eval(const std::vector<double>& x) const;
  Rat eval(const RVec& x) const;
};

struct DeformationSeries {
  size_t dim = 0;
  size_t order = 0;                         // J
  std::vector<std::vector<Polynomial>> g;   // g[j][i]: i-th component of g_{j+1}

  // grid estimate of sup |g_1| (Euclidean norm) over a box, samples per axis
  double sup_g1_estimate(const std::vector<double>& lo, const std::vector<double>& hi,
                         size_t samples = 64) const;
};

// x -> x + sum_j k^{-j} g_j(x) on the absolute-unit points; J = 0 is the
// bitwise identity. Colliding output points are flagged in the source field.
SpectrumCloud apply_deformation(const SpectrumCloud& c, const DeformationSeries& g);

// adds a uniform perturbation of radius C * k^{-N} to every point;
// deterministic for a fixed seed
SpectrumCloud add_noise(const SpectrumCloud& c, double C, double N, uint64_t seed);

struct OrbitMode {
  bool full = false;  // average over the whole torus instead of one circle
  size_t component = 0;
};

// time average of f along the i-th circle action (or the full torus) through
// the fiber over E (2pi-units, must lie in P). f receives the angle vector
// (radians) and E in absolute units. N samples per circle.
double orbit_average(
    const std::function<double(const std::vector<double>&, const std::vector<double>&)>& f,
    const DelzantPolytope& p, const RVec& e, const OrbitMode& mode, size_t n_samples = 256);

}  // namespace toric
