// Independent Fock-space oracle. Basis monomials are indexed by alpha in N^F;
// an index is admissible when the reduction constraints hold, i.e. for every
// integer kernel relation Y of the facet-normal map,
//     sum_f Y_f alpha_f = k <Y, lambda>           (plain)
//     sum_f Y_f (2 alpha_f + 1) = 2k <Y, lambda>  (metaplectic)
// Each admissible alpha determines one joint eigenvalue through the facet
// equations <X_f, l> = (alpha_f (+1/2))/k - lambda_f, solved exactly on the
// base-vertex block and verified on all remaining facets. This path never
// touches the lattice enumeration it is meant to check.

#pragma once

#include "toric/delzant.hpp"

#include <vector>

namespace toric {

struct OracleEntry {
  std::vector<long> alpha;
  RVec point;  // 2pi-units
};

struct OracleSpectrum {
  long k = 0;
  bool metaplectic = false;
  std::vector<OracleEntry> entries;  // sorted by point, lex
};

// All admissible multi-indices, lex sorted. The search box per facet is
// 0 <= alpha_f <= k * max_{vertices} (<X_f, v> + lambda_f), with the vertex
// list recovered from (pi, lambda). Metaplectic enumeration requires the
// half-form parity vector to exist (throws NoHalfForm otherwise).
std::vector<std::vector<long>> admissible_indices(const ConstructionData& cd, long k,
                                                  bool metaplectic = false);

OracleSpectrum oracle_spectrum(const ConstructionData& cd, long k, bool metaplectic = false);

// d with <gamma, X_f> = 1 + 2 d_f for the half-form gamma, reported alongside
// the metaplectic oracle (existence is equivalent to the parity criterion)
struct HalfFormDivisor {
  std::vector<int> gamma;
  std::vector<Int> d;
};
HalfFormDivisor half_form_divisor(const ConstructionData& cd);

struct BijectionReport {
  bool equal = false;
  size_t model_size = 0, oracle_size = 0;
  std::vector<RVec> model_only, oracle_only;           // 2pi-units, canonical frame
  std::vector<std::vector<long>> unmatched_alpha;      // oracle entries missing a partner
};

// Compares the lattice-side spectrum with the oracle spectrum point set for
// one (P, k), both computed in the canonical integral frame (P translated by
// its prequantization vector). Throws NotPrequantizable / NoHalfForm.
BijectionReport bijection_check(const DelzantPolytope& p, long k, bool metaplectic = false);

}  // namespace toric
