// Inverse pipeline: recover the Delzant polytope from joint-spectrum clouds.
//
// Stages: float hull of the largest-k cloud; rationalize facet directions
// with bounded denominators (continued fractions) and cross-validate each
// against the cloud support; merge duplicates; per-cloud supports
// extrapolated in 1/k to the semiclassical limit; translate the raw
// intersection so its lex-min vertex sits at the origin; snap offsets to
// integers within the tolerance; drop halfspaces whose exact contact set is
// lower-dimensional (junk directions become redundant after the snap);
// validate, check prequantization, re-translate to the canonical frame.
// Residuals are computed against the reconstructed polytope mapped back into
// the data frame, which is exact for lattice spectra.

#pragma once

#include "toric/delzant.hpp"
#include "toric/quantum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct ReconstructionConfig {
  std::optional<double> tolerance;  // absolute units; default 0.4 * 2pi / k_max
  long denominator_bound = 32;      // Q, per-component denominator cap
  size_t min_clouds = 1;
  int noise_order = 1;  // assumed residual decay k^-N; also the extrapolation degree
};

struct ResidualEntry {
  long k = 0;
  double hausdorff = 0;
};

struct RateFit {
  double C = 0;         // geometric mean of k^exponent * residual, zeros excluded
  double exponent = 1;
  size_t samples = 0;   // residuals that entered the fit
};

struct ReconstructionResult {
  DelzantPolytope polytope;  // canonical frame
  RVec translation;          // polytope = (limit of the clouds) + translation, 2pi-units
  std::vector<ResidualEntry> residuals;
  RateFit rate;
  std::string certificate;   // per-stage audit trail
};

ReconstructionResult limit_polytope(const std::vector<SpectrumCloud>& clouds,
                                    const ReconstructionConfig& cfg = {});

struct WorstOffender {
  long k = 0;
  std::vector<double> point;  // cloud point farthest from the model spectrum
  double distance = 0;
};

struct ConvergenceReport {
  std::vector<ResidualEntry> residuals;
  RateFit rate;
  std::vector<WorstOffender> worst;  // one per cloud
};

ConvergenceReport convergence_report(const std::vector<SpectrumCloud>& clouds,
                                     const DelzantPolytope& p);

// exact equality of canonical facet data, no frame change applied; callers
// translate into a common frame first. Throws DimensionMismatch
bool isomorphic(const DelzantPolytope& a, const DelzantPolytope& b);

// exposed for direct testing against brute force
// best rational approximation p/q of x with 1 <= q <= max_den
Rat best_rational(double x, long max_den);

// primitive integer vector parallel to the given direction within the
// component-wise denominator bound; orientation preserved
IVec rationalize_direction(const std::vector<double>& dir, long max_den);

}  // namespace toric
