// toric: exact geometry and semiclassical spectra of toric integrable
// systems. Subcommands: validate, spectrum, oracle, reconstruct, compare,
// weyl. Exit codes: 0 success, 1 domain failure, 2 usage or file parse
// failure. Every invocation writes one run manifest (content-hashed inputs,
// outputs, seed when used); wall-clock timing goes to a non-deterministic
// ".time" sidecar so primary outputs stay byte-identical across reruns.

#include <CLI11.hpp>

#include "toric/bargmann.hpp"
#include "toric/json_io.hpp"
#include "toric/library.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {

using namespace toric;

constexpr int EXIT_DOMAIN = 1;
constexpr int EXIT_USAGE = 2;

long read_thread_cap() {
  const char* env = std::getenv("TORIC_SPEC_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1)
    throw ParseError("TORIC_SPEC_THREADS must be a positive integer, got '" + std::string(env) +
                     "'");
  return v;  // recorded in the manifest; computation is single-threaded
}

struct ManifestScope {
  RunManifest m;
  std::string path;
  bool emitted = false;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void add_input(const std::string& p, const std::string& bytes) {
    m.inputs.push_back({p, fnv1a64_hex(bytes)});
  }
  std::string load(const std::string& p) {
    std::string bytes;
    try {
      bytes = read_file(p);
    } catch (const Error& e) {
      throw ParseError(e.what());  // unreadable inputs count as usage errors
    }
    add_input(p, bytes);
    return bytes;
  }
  void emit(const std::string& out_hint) {
    if (emitted) return;
    emitted = true;
    if (path.empty()) path = out_hint.empty() ? m.command + "_manifest.json" : out_hint + ".manifest.json";
    atomic_write_file(path, write_manifest_json(m));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    atomic_write_file(path + ".time", "{\"duration_seconds\":" + format_float(secs) + "}\n");
  }

  // failure paths still record the attempt; never mask the original error
  void emit_best_effort() {
    try {
      emit("");
    } catch (...) {
    }
  }
};

DelzantPolytope load_polytope(ManifestScope& ms, const std::string& path, bool print_report) {
  PolytopeDoc doc = parse_polytope_json(ms.load(path));
  ValidationReport rep = validate_delzant(doc.hp, doc.name);
  if (!rep.ok) {
    if (print_report)
      for (const auto& v : rep.violations) std::cout << "violation: " << v.kind << ": " << v.detail << "\n";
    throw NotDelzant(path + " is not a Delzant polytope");
  }
  return std::move(*rep.polytope);
}

int cmd_validate(ManifestScope& ms, const std::string& poly_path) {
  PolytopeDoc doc = parse_polytope_json(ms.load(poly_path));
  ValidationReport rep = validate_delzant(doc.hp, doc.name);
  if (!rep.ok) {
    std::cout << "Delzant: FAILED\n";
    for (const auto& v : rep.violations) std::cout << "violation: " << v.kind << ": " << v.detail << "\n";
    ms.emit("");
    return EXIT_DOMAIN;
  }
  const DelzantPolytope& p = *rep.polytope;
  std::cout << "Delzant: OK (" << p.facets.size() << " facets, " << p.vertices.size()
            << " vertices)\n";
  PrequantizationResult pq = check_prequantizable(p);
  if (pq.ok) {
    std::cout << "prequantizable: yes, c = " << format_rvec(pq.translation) << "\n";
  } else {
    std::cout << "prequantizable: no;";
    for (const auto& o : pq.offenders)
      std::cout << " edge " << format_rvec(p.vertices[o.u].x) << "-"
                << format_rvec(p.vertices[o.v].x) << " length " << format_rational(o.length);
    std::cout << "\n";
  }
  HalfFormResult hf = half_form_vector(p);
  if (hf.ok) {
    std::cout << "half-form: u = (";
    for (size_t i = 0; i < hf.u.size(); ++i) std::cout << (i ? "," : "") << hf.u[i];
    std::cout << ")\n";
  } else {
    std::cout << "half-form: none; conflicting facets {";
    for (size_t i = 0; i < hf.certificate.size(); ++i)
      std::cout << (i ? "," : "") << hf.certificate[i];
    std::cout << "}\n";
  }
  ms.emit("");
  return 0;
}

int cmd_spectrum(ManifestScope& ms, const std::string& poly_path, long k, bool metaplectic,
                 const std::string& deform_path, const std::string& noise_arg, uint64_t seed,
                 bool seed_given, const std::string& out_path, const std::string& csv_path) {
  DelzantPolytope p = load_polytope(ms, poly_path, true);
  SpectrumCloud cloud = metaplectic ? metaplectic_spectrum(p, k) : model_spectrum(p, k);

  if (!deform_path.empty()) {
    DeformationSeries g = parse_deformation_json(ms.load(deform_path));
    if (g.dim != p.dim) throw DimensionMismatch("deformation dimension differs from the polytope");
    cloud = apply_deformation(cloud, g);
  }
  if (!noise_arg.empty()) {
    size_t comma = noise_arg.find(',');
    if (comma == std::string::npos)
      throw ParseError("--noise expects C,N (amplitude and decay order)");
    double C = 0, N = 0;
    try {
      C = std::stod(noise_arg.substr(0, comma));
      N = std::stod(noise_arg.substr(comma + 1));
    } catch (const std::exception&) {
      throw ParseError("--noise expects numeric C,N");
    }
    cloud = add_noise(cloud, C, N, seed);
    ms.m.has_seed = true;
    ms.m.seed = seed;
  } else if (seed_given) {
    throw ParseError("--seed only applies together with --noise");
  }

  std::string doc = write_cloud_json(cloud);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    atomic_write_file(out_path, doc);
    ms.m.outputs.push_back(out_path);
    std::cout << "wrote " << out_path << " (" << cloud.points.size() << " points)\n";
  }
  if (!csv_path.empty()) {
    atomic_write_file(csv_path, write_csv(cloud.points));
    ms.m.outputs.push_back(csv_path);
  }
  ms.emit(out_path);
  return 0;
}

int cmd_oracle(ManifestScope& ms, const std::string& poly_path, long k, bool metaplectic) {
  DelzantPolytope p = load_polytope(ms, poly_path, true);
  BijectionReport rep = bijection_check(p, k, metaplectic);
  std::cout << "dim " << rep.oracle_size << (metaplectic ? " (metaplectic)" : "") << ", ";
  if (rep.equal) {
    std::cout << "sets identical\n";
    ms.emit("");
    return 0;
  }
  std::cout << "MISMATCH: " << rep.model_only.size() << " lattice-only, "
            << rep.oracle_only.size() << " oracle-only point(s)\n";
  for (const auto& x : rep.model_only) std::cout << "  lattice only: " << format_rvec(x) << "\n";
  for (size_t i = 0; i < rep.oracle_only.size(); ++i) {
    std::cout << "  oracle only: " << format_rvec(rep.oracle_only[i]) << " alpha (";
    for (size_t j = 0; j < rep.unmatched_alpha[i].size(); ++j)
      std::cout << (j ? "," : "") << rep.unmatched_alpha[i][j];
    std::cout << ")\n";
  }
  ms.emit("");
  return EXIT_DOMAIN;
}

int cmd_reconstruct(ManifestScope& ms, const std::vector<std::string>& cloud_paths,
                    const std::string& config_path, const std::string& out_path) {
  std::vector<SpectrumCloud> clouds;
  for (const auto& path : cloud_paths) {
    std::string text = ms.load(path);
    if (looks_like_bundle(text))
      for (auto& c : parse_bundle_json(text)) clouds.push_back(std::move(c));
    else
      clouds.push_back(parse_cloud_json(text));
  }
  ReconstructionConfig cfg;
  if (!config_path.empty()) cfg = parse_config_json(ms.load(config_path));

  ReconstructionResult res = limit_polytope(clouds, cfg);
  std::string doc = write_reconstruction_json(res);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    atomic_write_file(out_path, doc);
    ms.m.outputs.push_back(out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  std::cout << "reconstructed " << res.polytope.facets.size() << " facet(s); rate fit C = "
            << format_float(res.rate.C) << " (exponent " << res.rate.exponent << ", "
            << res.rate.samples << " nonzero residuals)\n";
  ms.emit(out_path);
  return 0;
}

int cmd_compare(ManifestScope& ms, const std::string& a_path, const std::string& b_path) {
  std::string a_text = ms.load(a_path), b_text = ms.load(b_path);
  auto kind = [](const std::string& text) {
    // polytopes carry "facets", clouds carry "points"
    return text.find("\"facets\"") != std::string::npos ? 0 : 1;
  };
  if (kind(a_text) != kind(b_text))
    throw ParseError("compare needs two polytope files or two cloud files");

  if (kind(a_text) == 1) {
    SpectrumCloud a = parse_cloud_json(a_text), b = parse_cloud_json(b_text);
    if (a.k != b.k || a.dim() != b.dim())
      throw Error("clouds are incomparable (k or dimension differs)");
    double d = hausdorff_distance(a.points, b.points);
    std::cout << "hausdorff distance: " << format_float(d) << "\n";
    bool same = d <= 1e-9;
    std::cout << (same ? "clouds identical within 1e-9\n" : "clouds differ\n");
    ms.emit("");
    return same ? 0 : EXIT_DOMAIN;
  }

  PolytopeDoc da = parse_polytope_json(a_text), db = parse_polytope_json(b_text);
  DelzantPolytope pa = require_delzant(da.hp, da.name), pb = require_delzant(db.hp, db.name);
  bool iso = false;
  try {
    iso = isomorphic(pa, pb);
  } catch (const DimensionMismatch& e) {
    std::cout << "NOT isomorphic: " << e.what() << "\n";
    ms.emit("");
    return EXIT_DOMAIN;
  }
  std::cout << (iso ? "isomorphic" : "NOT isomorphic") << "\n";
  // direct spectral view at a small sample level, both systems prequantizable
  try {
    const long k_probe = 8;
    SpectrumCloud sa = model_spectrum(pa, k_probe), sb = model_spectrum(pb, k_probe);
    std::cout << "spectral hausdorff at k=" << k_probe << ": "
              << format_float(hausdorff_distance(sa.points, sb.points)) << "\n";
  } catch (const Error& e) {
    std::cout << "spectral comparison skipped: " << e.what() << "\n";
  }
  ms.emit("");
  return iso ? 0 : EXIT_DOMAIN;
}

int cmd_weyl(ManifestScope& ms, const std::string& poly_path, long kmax) {
  DelzantPolytope p = load_polytope(ms, poly_path, true);
  std::cout << "k\tcount\tleading\trelative_gap\n";
  for (long k = 1; k <= kmax; ++k) {
    WeylReport r = weyl_report(p, k);
    std::cout << r.k << "\t" << r.count << "\t" << format_float(r.leading) << "\t"
              << format_float(r.relative_gap) << "\n";
  }
  ms.emit("");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric spectra: validation, forward models, oracle checks, reconstruction"};
  app.require_subcommand(1);

  std::string poly_path, out_path, csv_path, deform_path, noise_arg, config_path, manifest_path;
  std::string a_path, b_path;
  std::vector<std::string> cloud_paths;
  long k = 1, kmax = 10;
  bool metaplectic = false;
  uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "check the Delzant conditions and report");
  validate->add_option("polytope", poly_path, "polytope JSON file")->required();
  validate->add_option("--manifest", manifest_path, "manifest path");

  auto* spectrum = app.add_subcommand("spectrum", "exact joint spectrum as a cloud file");
  spectrum->add_option("polytope", poly_path, "polytope JSON file")->required();
  spectrum->add_option("--k", k, "semiclassical level")->required()->check(CLI::PositiveNumber);
  spectrum->add_flag("--metaplectic", metaplectic, "half-form corrected spectrum");
  spectrum->add_option("--deform", deform_path, "deformation series JSON");
  spectrum->add_option("--noise", noise_arg, "C,N: uniform noise of radius C*k^-N");
  auto* seed_opt = spectrum->add_option("--seed", seed, "noise seed (default 0)");
  spectrum->add_option("--out", out_path, "cloud JSON output (stdout when absent)");
  spectrum->add_option("--plot-data", csv_path, "CSV of the points");
  spectrum->add_option("--manifest", manifest_path, "manifest path");

  auto* oracle = app.add_subcommand("oracle", "compare lattice spectrum with the Fock oracle");
  oracle->add_option("polytope", poly_path, "polytope JSON file")->required();
  oracle->add_option("--k", k, "semiclassical level")->required()->check(CLI::PositiveNumber);
  oracle->add_flag("--metaplectic", metaplectic, "half-form corrected comparison");
  oracle->add_option("--manifest", manifest_path, "manifest path");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover the polytope from clouds");
  reconstruct->add_option("clouds", cloud_paths, "cloud or bundle JSON files")->required();
  reconstruct->add_option("--config", config_path, "reconstruction config JSON");
  reconstruct->add_option("--out", out_path, "result JSON output (stdout when absent)");
  reconstruct->add_option("--manifest", manifest_path, "manifest path");

  auto* compare = app.add_subcommand("compare", "two polytopes (or two clouds) side by side");
  compare->add_option("a", a_path, "first file")->required();
  compare->add_option("b", b_path, "second file")->required();
  compare->add_option("--manifest", manifest_path, "manifest path");

  auto* weyl = app.add_subcommand("weyl", "dimension counts against the volume term");
  weyl->add_option("polytope", poly_path, "polytope JSON file")->required();
  weyl->add_option("--kmax", kmax, "levels 1..kmax")->required()->check(CLI::PositiveNumber);
  weyl->add_option("--manifest", manifest_path, "manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : EXIT_USAGE;
  }

  ManifestScope ms;
  ms.path = manifest_path;
  for (int i = 0; i < argc; ++i) ms.m.argv.push_back(argv[i]);

  if (app.got_subcommand(validate))
    ms.m.command = "validate";
  else if (app.got_subcommand(spectrum))
    ms.m.command = "spectrum";
  else if (app.got_subcommand(oracle))
    ms.m.command = "oracle";
  else if (app.got_subcommand(reconstruct))
    ms.m.command = "reconstruct";
  else if (app.got_subcommand(compare))
    ms.m.command = "compare";
  else if (app.got_subcommand(weyl))
    ms.m.command = "weyl";

  try {
    ms.m.threads = read_thread_cap();
    if (ms.m.command == "validate") return cmd_validate(ms, poly_path);
    if (ms.m.command == "spectrum")
      return cmd_spectrum(ms, poly_path, k, metaplectic, deform_path, noise_arg, seed,
                          seed_opt->count() > 0, out_path, csv_path);
    if (ms.m.command == "oracle") return cmd_oracle(ms, poly_path, k, metaplectic);
    if (ms.m.command == "reconstruct") return cmd_reconstruct(ms, cloud_paths, config_path, out_path);
    if (ms.m.command == "compare") return cmd_compare(ms, a_path, b_path);
    if (ms.m.command == "weyl") return cmd_weyl(ms, poly_path, kmax);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    ms.emit_best_effort();
    return EXIT_USAGE;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    ms.emit_best_effort();
    return EXIT_DOMAIN;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    ms.emit_best_effort();
    return EXIT_DOMAIN;
  }
  return EXIT_USAGE;
}
