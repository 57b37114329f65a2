// File formats. Parsing goes through nlohmann::json with strict key checking
// (unknown fields rejected, "schema" must be 1 when present). Writing is a
// small hand-rolled emitter: key order is fixed, floats carry 17 significant
// digits via std::to_chars, so identical data produces identical bytes.
//
// Polytope files store offsets as exact "p/q" strings in 2pi-units; cloud
// files store float points in absolute units.

#pragma once

#include "toric/delzant.hpp"
#include "toric/inverse.hpp"
#include "toric/quantum.hpp"

#include <string>
#include <vector>

namespace toric {

std::string format_float(double x);  // shortest of: 17 significant digits

// polytope documents
struct PolytopeDoc {
  HPolytope hp;
  std::string name;
};
PolytopeDoc parse_polytope_json(const std::string& text);
std::string write_polytope_json(const DelzantPolytope& p);

// spectrum clouds and bundles
SpectrumCloud parse_cloud_json(const std::string& text);
std::string write_cloud_json(const SpectrumCloud& c);
bool looks_like_bundle(const std::string& text);
std::vector<SpectrumCloud> parse_bundle_json(const std::string& text);
std::string write_bundle_json(const std::vector<SpectrumCloud>& clouds);

// deformation series (polynomials over absolute coordinates)
DeformationSeries parse_deformation_json(const std::string& text);

ReconstructionConfig parse_config_json(const std::string& text);

std::string write_reconstruction_json(const ReconstructionResult& r);

struct ManifestInput {
  std::string path;
  std::string fnv1a64;  // 16 hex digits
};
struct RunManifest {
  std::string command;                // subcommand name
  std::vector<std::string> argv;      // full invocation
  std::vector<ManifestInput> inputs;
  std::vector<std::string> outputs;
  long threads = 1;
  bool has_seed = false;
  uint64_t seed = 0;
};
std::string write_manifest_json(const RunManifest& m);

std::string write_csv(const std::vector<std::vector<double>>& points);

uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file(const std::string& path);           // throws Error
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace toric
