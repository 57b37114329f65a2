#include "toric/json_io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace toric {

using nlohmann::json;

std::string format_float(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, p);
}

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void check_keys(const json& j, const std::vector<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const auto& a : allowed)
      if (key == a) ok = true;
    if (!ok) throw ParseError(std::string(what) + ": unknown field '" + key + "'");
  }
  if (j.contains("schema")) {
    const json& s = j.at("schema");
    if (!s.is_number_integer() || s.get<long>() != 1)
      throw ParseError(std::string(what) + ": unsupported schema version");
  }
}

long get_positive_int(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError(std::string(what) + ": '" + key + "' must be an integer");
  long v = j.at(key).get<long>();
  if (v < 1) throw ParseError(std::string(what) + ": '" + key + "' must be positive");
  return v;
}

Rat get_rational(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + ": expected an exact rational string like \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

// string escaping for the hand-rolled writer
std::string quote(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += char(c);
        }
    }
  }
  return out + "\"";
}

}  // namespace

static PolytopeDoc parse_polytopes_impl(const json& j) {
  check_keys(j, {"schema", "dim", "unit", "facets", "name"}, "polytope");
  PolytopeDoc doc;
  doc.hp.dim = size_t(get_positive_int(j, "dim", "polytope"));
  if (!j.contains("unit") || !j.at("unit").is_string() || j.at("unit").get<std::string>() != "2pi")
    throw ParseError("polytope: 'unit' must be the string \"2pi\"");
  if (!j.contains("facets") || !j.at("facets").is_array() || j.at("facets").empty())
    throw ParseError("polytope: 'facets' must be a nonempty array");
  for (const json& f : j.at("facets")) {
    check_keys(f, {"normal", "offset"}, "facet");
    if (!f.contains("normal") || !f.at("normal").is_array() ||
        f.at("normal").size() != doc.hp.dim)
      throw ParseError("facet: 'normal' must be an integer array of length dim");
    Halfspace h;
    for (const json& c : f.at("normal")) {
      if (!c.is_number_integer()) throw ParseError("facet: normal entries must be integers");
      h.normal.push_back(Int(c.get<long long>()));
    }
    if (!f.contains("offset")) throw ParseError("facet: missing 'offset'");
    h.offset = get_rational(f.at("offset"), "facet offset");
    doc.hp.facets.push_back(std::move(h));
  }
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("polytope: 'name' must be a string");
    doc.name = j.at("name").get<std::string>();
  }
  return doc;
}

PolytopeDoc parse_polytope_json(const std::string& text) {
  return parse_polytopes_impl(parse_text(text));
}

std::string write_polytope_json(const DelzantPolytope& p) {
  std::ostringstream os;
  os << "{\"schema\":1,\"dim\":" << p.dim << ",\"unit\":\"2pi\",\"facets\":[";
  for (size_t f = 0; f < p.facets.size(); ++f) {
    if (f) os << ",";
    os << "{\"normal\":[";
    for (size_t i = 0; i < p.dim; ++i) {
      if (i) os << ",";
      os << p.facets[f].normal[i].str();
    }
    os << "],\"offset\":" << quote(format_rational(p.facets[f].offset)) << "}";
  }
  os << "]";
  if (!p.name.empty()) os << ",\"name\":" << quote(p.name);
  os << "}\n";
  return os.str();
}

namespace {

SpectrumCloud parse_cloud_impl(const json& j) {
  check_keys(j, {"schema", "k", "points", "exact", "source"}, "cloud");
  SpectrumCloud c;
  c.k = get_positive_int(j, "k", "cloud");
  if (!j.contains("points") || !j.at("points").is_array())
    throw ParseError("cloud: 'points' must be an array of number arrays");
  size_t dim = 0;
  for (const json& p : j.at("points")) {
    if (!p.is_array() || p.empty()) throw ParseError("cloud: each point must be a nonempty array");
    if (dim == 0) dim = p.size();
    if (p.size() != dim) throw ParseError("cloud: points disagree on dimension");
    std::vector<double> q;
    for (const json& x : p) {
      if (!x.is_number()) throw ParseError("cloud: point entries must be numbers");
      q.push_back(x.get<double>());
    }
    c.points.push_back(std::move(q));
  }
  if (!j.contains("exact") || !j.at("exact").is_boolean())
    throw ParseError("cloud: 'exact' must be a boolean");
  c.exact = j.at("exact").get<bool>();
  if (!j.contains("source") || !j.at("source").is_string())
    throw ParseError("cloud: 'source' must be a string");
  c.source = j.at("source").get<std::string>();
  return c;
}

}  // namespace

SpectrumCloud parse_cloud_json(const std::string& text) {
  return parse_cloud_impl(parse_text(text));
}

std::string write_cloud_json(const SpectrumCloud& c) {
  std::ostringstream os;
  os << "{\"schema\":1,\"k\":" << c.k << ",\"points\":[";
  for (size_t i = 0; i < c.points.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t d = 0; d < c.points[i].size(); ++d) {
      if (d) os << ",";
      os << format_float(c.points[i][d]);
    }
    os << "]";
  }
  os << "],\"exact\":" << (c.exact ? "true" : "false") << ",\"source\":" << quote(c.source)
     << "}\n";
  return os.str();
}

bool looks_like_bundle(const std::string& text) {
  json j = parse_text(text);
  return j.is_object() && j.contains("clouds");
}

std::vector<SpectrumCloud> parse_bundle_json(const std::string& text) {
  json j = parse_text(text);
  check_keys(j, {"schema", "clouds"}, "bundle");
  if (!j.contains("clouds") || !j.at("clouds").is_array() || j.at("clouds").empty())
    throw ParseError("bundle: 'clouds' must be a nonempty array");
  std::vector<SpectrumCloud> out;
  for (const json& c : j.at("clouds")) out.push_back(parse_cloud_impl(c));
  return out;
}

std::string write_bundle_json(const std::vector<SpectrumCloud>& clouds) {
  std::string out = "{\"schema\":1,\"clouds\":[";
  for (size_t i = 0; i < clouds.size(); ++i) {
    if (i) out += ",";
    std::string one = write_cloud_json(clouds[i]);
    while (!one.empty() && one.back() == '\n') one.pop_back();
    out += one;
  }
  return out + "]}\n";
}

DeformationSeries parse_deformation_json(const std::string& text) {
  json j = parse_text(text);
  check_keys(j, {"schema", "dim", "order", "g"}, "deformation");
  DeformationSeries g;
  g.dim = size_t(get_positive_int(j, "dim", "deformation"));
  if (!j.contains("order") || !j.at("order").is_number_integer() || j.at("order").get<long>() < 0)
    throw ParseError("deformation: 'order' must be a non-negative integer");
  g.order = size_t(j.at("order").get<long>());
  if (!j.contains("g") || !j.at("g").is_array() || j.at("g").size() != g.order)
    throw ParseError("deformation: 'g' must be an array with one entry per order");
  for (const json& level : j.at("g")) {
    if (!level.is_array() || level.size() != g.dim)
      throw ParseError("deformation: each order needs one polynomial per coordinate");
    std::vector<Polynomial> comps;
    for (const json& poly : level) {
      if (!poly.is_array()) throw ParseError("deformation: a polynomial is an array of terms");
      Polynomial p;
      p.dim = g.dim;
      for (const json& term : poly) {
        check_keys(term, {"coeff", "exps"}, "term");
        if (!term.contains("coeff") || !term.contains("exps"))
          throw ParseError("term: needs 'coeff' and 'exps'");
        Term t;
        t.coeff = get_rational(term.at("coeff"), "term coeff");
        if (!term.at("exps").is_array() || term.at("exps").size() != g.dim)
          throw ParseError("term: 'exps' must be an integer array of length dim");
        for (const json& e : term.at("exps")) {
          if (!e.is_number_integer() || e.get<long>() < 0)
            throw ParseError("term: exponents must be non-negative integers");
          t.exps.push_back(unsigned(e.get<long>()));
        }
        p.terms.push_back(std::move(t));
      }
      comps.push_back(std::move(p));
    }
    g.g.push_back(std::move(comps));
  }
  return g;
}

ReconstructionConfig parse_config_json(const std::string& text) {
  json j = parse_text(text);
  check_keys(j, {"schema", "tolerance", "denominator_bound", "min_clouds", "noise_order"},
             "config");
  ReconstructionConfig cfg;
  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number() || j.at("tolerance").get<double>() <= 0)
      throw ParseError("config: 'tolerance' must be a positive number");
    cfg.tolerance = j.at("tolerance").get<double>();
  }
  if (j.contains("denominator_bound"))
    cfg.denominator_bound = get_positive_int(j, "denominator_bound", "config");
  if (j.contains("min_clouds"))
    cfg.min_clouds = size_t(get_positive_int(j, "min_clouds", "config"));
  if (j.contains("noise_order")) cfg.noise_order = int(get_positive_int(j, "noise_order", "config"));
  return cfg;
}

std::string write_reconstruction_json(const ReconstructionResult& r) {
  std::ostringstream os;
  std::string poly = write_polytope_json(r.polytope);
  while (!poly.empty() && poly.back() == '\n') poly.pop_back();
  os << "{\"schema\":1,\"polytope\":" << poly << ",\"translation\":[";
  for (size_t i = 0; i < r.translation.size(); ++i) {
    if (i) os << ",";
    os << quote(format_rational(r.translation[i]));
  }
  os << "],\"residuals\":[";
  for (size_t i = 0; i < r.residuals.size(); ++i) {
    if (i) os << ",";
    os << "{\"k\":" << r.residuals[i].k
       << ",\"hausdorff\":" << format_float(r.residuals[i].hausdorff) << "}";
  }
  os << "],\"rate\":{\"C\":" << format_float(r.rate.C)
     << ",\"exponent\":" << format_float(r.rate.exponent) << ",\"samples\":" << r.rate.samples
     << "},\"certificate\":" << quote(r.certificate) << "}\n";
  return os.str();
}

std::string write_manifest_json(const RunManifest& m) {
  std::ostringstream os;
  os << "{\"schema\":1,\"tool\":\"toric\",\"version\":\"1.0.0\",\"command\":" << quote(m.command)
     << ",\"argv\":[";
  for (size_t i = 0; i < m.argv.size(); ++i) {
    if (i) os << ",";
    os << quote(m.argv[i]);
  }
  os << "],\"inputs\":[";
  for (size_t i = 0; i < m.inputs.size(); ++i) {
    if (i) os << ",";
    os << "{\"path\":" << quote(m.inputs[i].path) << ",\"fnv1a64\":" << quote(m.inputs[i].fnv1a64)
       << "}";
  }
  os << "],\"outputs\":[";
  for (size_t i = 0; i < m.outputs.size(); ++i) {
    if (i) os << ",";
    os << quote(m.outputs[i]);
  }
  os << "],\"threads\":" << m.threads;
  if (m.has_seed) os << ",\"seed\":" << m.seed;
  os << "}\n";
  return os.str();
}

std::string write_csv(const std::vector<std::vector<double>>& points) {
  std::string out;
  size_t dim = points.empty() ? 0 : points[0].size();
  for (size_t i = 0; i < dim; ++i) {
    if (i) out += ",";
    out += "x" + std::to_string(i + 1);
  }
  out += "\n";
  for (const auto& p : points) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) out += ",";
      out += format_float(p[i]);
    }
    out += "\n";
  }
  return out;
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(bytes));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("short write: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error("cannot move " + tmp.string() + " into place: " + ec.message());
}

}  // namespace toric
