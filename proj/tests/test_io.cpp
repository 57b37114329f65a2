#include <doctest.h>

#include "toric/json_io.hpp"
#include "toric/library.hpp"

#include <cstdio>
#include <filesystem>

using namespace toric;

namespace {

const char* square_doc = R"({
  "schema": 1,
  "dim": 2,
  "unit": "2pi",
  "name": "square",
  "facets": [
    {"normal": [1, 0], "offset": "0"},
    {"normal": [0, 1], "offset": "0"},
    {"normal": [-1, 0], "offset": "1"},
    {"normal": [0, -1], "offset": "1"}
  ]
})";

}  // namespace

TEST_CASE("polytope parsing") {
  PolytopeDoc doc = parse_polytope_json(square_doc);
  CHECK(doc.name == "square");
  CHECK(doc.hp.dim == 2);
  REQUIRE(doc.hp.facets.size() == 4);
  CHECK(doc.hp.facets[0].normal == IVec{Int(1), Int(0)});
  CHECK(doc.hp.facets[2].offset == Rat(1));
  CHECK(polytope_equal(require_delzant(doc.hp, doc.name), cp1xcp1()));
}

TEST_CASE("polytope parsing is strict") {
  CHECK_THROWS_AS(parse_polytope_json("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_polytope_json("[1,2,3]"), ParseError);
  // unknown field
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"dim":1,"unit":"2pi","color":"red","facets":[{"normal":[1],"offset":"0"},{"normal":[-1],"offset":"1"}]})"),
                  ParseError);
  // wrong schema version
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"schema":2,"dim":1,"unit":"2pi","facets":[{"normal":[1],"offset":"0"},{"normal":[-1],"offset":"1"}]})"),
                  ParseError);
  // missing unit
  CHECK_THROWS_AS(
      parse_polytope_json(R"({"dim":1,"facets":[{"normal":[1],"offset":"0"}]})"),
      ParseError);
  // wrong unit
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"dim":1,"unit":"radians","facets":[{"normal":[1],"offset":"0"}]})"),
                  ParseError);
  // float offset instead of an exact rational string
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"dim":1,"unit":"2pi","facets":[{"normal":[1],"offset":0.5}]})"),
                  ParseError);
  // malformed rational
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"dim":1,"unit":"2pi","facets":[{"normal":[1],"offset":"0.5"}]})"),
                  ParseError);
  // non-integer normal entry
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"dim":1,"unit":"2pi","facets":[{"normal":[1.5],"offset":"0"}]})"),
                  ParseError);
  // normal length disagrees with dim
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"dim":2,"unit":"2pi","facets":[{"normal":[1],"offset":"0"}]})"),
                  ParseError);
  // unknown facet field
  CHECK_THROWS_AS(parse_polytope_json(
                      R"({"dim":1,"unit":"2pi","facets":[{"normal":[1],"offset":"0","label":"x"}]})"),
                  ParseError);
  // empty facet list
  CHECK_THROWS_AS(parse_polytope_json(R"({"dim":1,"unit":"2pi","facets":[]})"), ParseError);
}

TEST_CASE("polytope round trip is canonical and stable") {
  for (const DelzantPolytope& p : library()) {
    std::string doc = write_polytope_json(p);
    PolytopeDoc back = parse_polytope_json(doc);
    DelzantPolytope q = require_delzant(back.hp, back.name);
    CHECK(polytope_equal(p, q));
    CHECK(back.name == p.name);
    CHECK(write_polytope_json(q) == doc);
  }
}

TEST_CASE("cloud round trip is bitwise") {
  SpectrumCloud c = model_spectrum(hirzebruch1(), 3);
  std::string doc = write_cloud_json(c);
  SpectrumCloud back = parse_cloud_json(doc);
  CHECK(back.k == c.k);
  CHECK(back.exact == c.exact);
  CHECK(back.source == c.source);
  CHECK(back.points == c.points);
  CHECK(write_cloud_json(back) == doc);

  SpectrumCloud noisy = add_noise(c, 0.3, 1.5, 99);
  std::string ndoc = write_cloud_json(noisy);
  CHECK(parse_cloud_json(ndoc).points == noisy.points);
  CHECK(write_cloud_json(parse_cloud_json(ndoc)) == ndoc);
}

TEST_CASE("cloud parsing is strict") {
  CHECK_THROWS_AS(parse_cloud_json(R"({"k":2,"points":[[0.5]],"exact":true})"), ParseError);
  CHECK_THROWS_AS(parse_cloud_json(R"({"k":2,"points":[[0.5]],"source":"model"})"), ParseError);
  CHECK_THROWS_AS(
      parse_cloud_json(R"({"k":0,"points":[[0.5]],"exact":true,"source":"model"})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_cloud_json(R"({"k":2,"points":[[0.5],[0.1,0.2]],"exact":true,"source":"m"})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_cloud_json(R"({"k":2,"points":[["a"]],"exact":true,"source":"m"})"), ParseError);
  CHECK_THROWS_AS(
      parse_cloud_json(R"({"k":2,"points":[[0.5]],"exact":true,"source":"m","extra":1})"),
      ParseError);
}

TEST_CASE("bundles") {
  std::vector<SpectrumCloud> clouds = {model_spectrum(cp1(), 2), model_spectrum(cp1(), 3)};
  std::string doc = write_bundle_json(clouds);
  CHECK(looks_like_bundle(doc));
  CHECK_FALSE(looks_like_bundle(write_cloud_json(clouds[0])));
  std::vector<SpectrumCloud> back = parse_bundle_json(doc);
  REQUIRE(back.size() == 2);
  CHECK(back[0].points == clouds[0].points);
  CHECK(back[1].k == 3);
  CHECK(write_bundle_json(back) == doc);

  CHECK_THROWS_AS(parse_bundle_json(R"({"clouds":[]})"), ParseError);
  CHECK_THROWS_AS(parse_bundle_json(R"({"clouds":[{}],"junk":0})"), ParseError);
}

TEST_CASE("deformation parsing") {
  const char* doc = R"({
    "schema": 1,
    "dim": 2,
    "order": 1,
    "g": [[
      [{"coeff": "1/20", "exps": [0, 0]}, {"coeff": "1/100", "exps": [1, 0]}],
      [{"coeff": "-1/25", "exps": [0, 0]}]
    ]]
  })";
  DeformationSeries g = parse_deformation_json(doc);
  CHECK(g.dim == 2);
  CHECK(g.order == 1);
  REQUIRE(g.g.size() == 1);
  REQUIRE(g.g[0].size() == 2);
  CHECK(g.g[0][0].terms.size() == 2);
  CHECK(g.g[0][0].terms[0].coeff == Rat(1, 20));
  CHECK(g.g[0][1].terms[0].coeff == Rat(-1, 25));

  // identity series
  DeformationSeries id = parse_deformation_json(R"({"dim":1,"order":0,"g":[]})");
  CHECK(id.order == 0);

  CHECK_THROWS_AS(parse_deformation_json(R"({"dim":2,"order":1,"g":[]})"), ParseError);
  CHECK_THROWS_AS(
      parse_deformation_json(R"({"dim":2,"order":1,"g":[[[{"coeff":"1","exps":[1]}]]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_deformation_json(
          R"({"dim":1,"order":1,"g":[[[{"coeff":"1","exps":[-1]}]]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_deformation_json(
          R"({"dim":1,"order":1,"g":[[[{"coeff":0.05,"exps":[0]}]]]})"),
      ParseError);
}

TEST_CASE("config parsing") {
  ReconstructionConfig c0 = parse_config_json("{}");
  CHECK_FALSE(c0.tolerance.has_value());
  CHECK(c0.denominator_bound == 32);
  CHECK(c0.min_clouds == 1);
  CHECK(c0.noise_order == 1);

  ReconstructionConfig c1 = parse_config_json(
      R"({"schema":1,"tolerance":0.01,"denominator_bound":8,"min_clouds":3,"noise_order":2})");
  REQUIRE(c1.tolerance.has_value());
  CHECK(*c1.tolerance == doctest::Approx(0.01));
  CHECK(c1.denominator_bound == 8);
  CHECK(c1.min_clouds == 3);
  CHECK(c1.noise_order == 2);

  CHECK_THROWS_AS(parse_config_json(R"({"tolerance":-1})"), ParseError);
  CHECK_THROWS_AS(parse_config_json(R"({"tol":0.1})"), ParseError);
}

TEST_CASE("float formatting survives the round trip") {
  for (double x : {0.0, 1.0, -1.0, 0.1, TWO_PI, 1.0 / 3.0, 1e-17, -2.5e300, 123456.789}) {
    std::string s = format_float(x);
    CHECK(std::stod(s) == x);
  }
}

TEST_CASE("fnv1a64 known vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
}

TEST_CASE("manifest writing is deterministic") {
  RunManifest m;
  m.command = "spectrum";
  m.argv = {"toric", "spectrum", "square.json", "--k", "3"};
  m.inputs = {{"square.json", "0123456789abcdef"}};
  m.outputs = {"cloud.json"};
  m.threads = 1;
  std::string a = write_manifest_json(m);
  std::string b = write_manifest_json(m);
  CHECK(a == b);
  CHECK(a.find("\"seed\"") == std::string::npos);
  CHECK(a.find("\"command\":\"spectrum\"") != std::string::npos);

  m.has_seed = true;
  m.seed = 42;
  CHECK(write_manifest_json(m).find("\"seed\":42") != std::string::npos);
}

TEST_CASE("csv output") {
  std::string csv = write_csv({{1.0, 2.0}, {0.5, -0.25}});
  CHECK(csv.substr(0, 6) == "x1,x2\n");
  CHECK(csv.find("0.5,-0.25") != std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("file IO") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "toric_io_test.json";
  std::string payload = "{\"schema\":1}\n";
  atomic_write_file(tmp.string(), payload);
  CHECK(read_file(tmp.string()) == payload);
  // rewrite in place
  atomic_write_file(tmp.string(), payload + payload);
  CHECK(read_file(tmp.string()) == payload + payload);
  fs::remove(tmp);

  CHECK_THROWS_AS(read_file("/nonexistent/definitely/missing.json"), Error);
  CHECK_THROWS_AS(atomic_write_file("/nonexistent/definitely/missing.json", "x"), Error);
}

TEST_CASE("reconstruction result serialization") {
  std::vector<SpectrumCloud> clouds = {model_spectrum(cp1xcp1(), 4),
                                       model_spectrum(cp1xcp1(), 6)};
  ReconstructionResult r = limit_polytope(clouds);
  std::string doc = write_reconstruction_json(r);
  CHECK(doc.find("\"polytope\"") != std::string::npos);
  CHECK(doc.find("\"translation\"") != std::string::npos);
  CHECK(doc.find("\"residuals\"") != std::string::npos);
  CHECK(doc.find("\"rate\"") != std::string::npos);
  CHECK(doc.find("\"certificate\"") != std::string::npos);
  // the embedded polytope document parses back to the reconstruction
  size_t at = doc.find("{\"schema\":1,\"dim\"");
  REQUIRE(at != std::string::npos);
  // determinism: a second run over the same inputs yields identical bytes
  CHECK(write_reconstruction_json(limit_polytope(clouds)) == doc);
}
