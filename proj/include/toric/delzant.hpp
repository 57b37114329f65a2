// Delzant polytope validation and derived combinatorial data. A validated
// polytope carries its facets in canonical order (sorted by normal, then
// offset) and its lex-sorted vertex list with full active-facet sets, so
// everything downstream is deterministic.
//
// Validation outcomes are values, not exceptions: callers branch on the
// report. Operations with hard preconditions (quantum model, oracle) throw.

#pragma once

#include "toric/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct DelzantPolytope {
  size_t dim = 0;
  std::vector<Halfspace> facets;  // canonical order, primitive inward normals
  std::vector<Vertex> vertices;   // lex sorted, active indexes the canonical facets
  std::string name;

  HPolytope hp() const { return {dim, facets}; }
};

struct Violation {
  std::string kind;    // "non-primitive normal", "unbounded", "not simple", ...
  std::string detail;  // indices / witness values, human readable
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
  std::optional<DelzantPolytope> polytope;  // present iff ok
};

// Checks, in order: nonzero primitive normals, no duplicate halfspaces,
// bounded, nonempty and full-dimensional, simple, and |det| = 1 for the
// active normals at every vertex. All violations are collected.
ValidationReport validate_delzant(const HPolytope& p, const std::string& name = "");

// throwing convenience: NotDelzant with the joined violation text
DelzantPolytope require_delzant(const HPolytope& p, const std::string& name = "");

// edges as vertex index pairs (u < v), deterministic order
struct Edge {
  size_t u, v;
};
std::vector<Edge> polytope_edges(const DelzantPolytope& p);

// lattice length: l such that e = l * (primitive integer vector)
Rat edge_length(const RVec& edge_vector);

struct EdgeOffense {
  size_t u, v;
  Rat length;
};

struct PrequantizationResult {
  bool ok = false;
  RVec translation;                  // c = -v0, lex-smallest vertex; valid iff ok
  std::vector<EdgeOffense> offenders;  // edges with non-integral lattice length
};
PrequantizationResult check_prequantizable(const DelzantPolytope& p);

struct HalfFormResult {
  bool ok = false;
  std::vector<int> u;                // entries 0/1, the class u mod 2; valid iff ok
  std::vector<size_t> certificate;   // facet indices whose parity constraints conflict
};
// solves <u, X_f> = 1 (mod 2) over all facets
HalfFormResult half_form_vector(const DelzantPolytope& p);

// exact equality of canonical facet lists; throws DimensionMismatch
bool polytope_equal(const DelzantPolytope& a, const DelzantPolytope& b);

// rigid translation P + c (normals fixed, offsets and vertices shifted)
DelzantPolytope translate(const DelzantPolytope& p, const RVec& c);

struct ConstructionData {
  IntMatrix pi;       // dim x F, column f = normal of facet f (canonical order)
  IntMatrix kernel;   // F x (F - dim), integer basis of ker(pi)
  RVec lambda;        // offsets, all integral
  RVec base_vertex;   // lex-smallest vertex
};
// throws NotPrequantized unless every offset is an integer
ConstructionData construction_data(const DelzantPolytope& p);

// image of P under x -> A x + t for unimodular integer A; the result is
// re-validated from scratch. Throws NotUnimodular / DimensionMismatch.
DelzantPolytope unimodular_image(const DelzantPolytope& p, const IntMatrix& a, const RVec& t);

Rat polytope_volume(const DelzantPolytope& p);

}  // namespace toric
