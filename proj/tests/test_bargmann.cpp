#include <doctest.h>

#include "toric/bargmann.hpp"
#include "toric/library.hpp"
#include "toric/quantum.hpp"

#include <algorithm>

using namespace toric;

namespace {

RVec rv(std::initializer_list<Rat> xs) { return RVec(xs); }

std::vector<long> al(std::initializer_list<long> xs) { return std::vector<long>(xs); }

}  // namespace

TEST_CASE("admissible indices on the interval") {
  // canonical facet order: (-1, offset 1), (1, offset 0); the single kernel
  // relation weighs both facets equally, so alpha_0 + alpha_1 = k
  ConstructionData cd = construction_data(cp1());
  std::vector<std::vector<long>> idx = admissible_indices(cd, 3);
  REQUIRE(idx.size() == 4);
  CHECK(idx[0] == al({0, 3}));
  CHECK(idx[1] == al({1, 2}));
  CHECK(idx[2] == al({2, 1}));
  CHECK(idx[3] == al({3, 0}));

  std::vector<std::vector<long>> meta = admissible_indices(cd, 2, true);
  REQUIRE(meta.size() == 2);
  CHECK(meta[0] == al({0, 1}));
  CHECK(meta[1] == al({1, 0}));
}

TEST_CASE("oracle eigenvalues on the interval") {
  ConstructionData cd = construction_data(cp1());
  OracleSpectrum s = oracle_spectrum(cd, 3);
  REQUIRE(s.entries.size() == 4);
  CHECK(s.entries[0].point == rv({Rat(0)}));
  CHECK(s.entries[1].point == rv({Rat(1, 3)}));
  CHECK(s.entries[2].point == rv({Rat(2, 3)}));
  CHECK(s.entries[3].point == rv({Rat(1)}));

  OracleSpectrum m = oracle_spectrum(cd, 2, true);
  REQUIRE(m.entries.size() == 2);
  CHECK(m.entries[0].point == rv({Rat(1, 4)}));
  CHECK(m.entries[1].point == rv({Rat(3, 4)}));
}

TEST_CASE("oracle sizes match binomial counts") {
  ConstructionData c2 = construction_data(cp2());
  CHECK(oracle_spectrum(c2, 1).entries.size() == 3);
  CHECK(oracle_spectrum(c2, 4).entries.size() == 15);
  ConstructionData c3 = construction_data(cp3());
  CHECK(oracle_spectrum(c3, 2).entries.size() == 10);
  ConstructionData ch2 = construction_data(hirzebruch2());
  CHECK(oracle_spectrum(ch2, 3).entries.size() == 28);
}

TEST_CASE("metaplectic oracle requires the parity vector") {
  ConstructionData c2 = construction_data(cp2());
  CHECK_THROWS_AS(admissible_indices(c2, 2, true), NoHalfForm);
  ConstructionData ch1 = construction_data(hirzebruch1());
  CHECK_THROWS_AS(oracle_spectrum(ch1, 2, true), NoHalfForm);
}

TEST_CASE("half-form divisor") {
  ConstructionData cd = construction_data(cp1xcp1());
  HalfFormDivisor hd = half_form_divisor(cd);
  REQUIRE(hd.gamma.size() == 2);
  REQUIRE(hd.d.size() == 4);
  // <gamma, X_f> = 1 + 2 d_f on every facet
  for (size_t f = 0; f < 4; ++f) {
    Int v = 0;
    for (size_t i = 0; i < 2; ++i) v += Int(hd.gamma[i]) * cd.pi.at(i, f);
    CHECK(v == 1 + 2 * hd.d[f]);
  }
}

TEST_CASE("bijection between lattice and oracle spectra") {
  for (const DelzantPolytope& p : library()) {
    for (long k : {1L, 2L, 3L}) {
      BijectionReport r = bijection_check(p, k);
      CHECK(r.equal);
      CHECK(r.model_size == r.oracle_size);
      CHECK(r.model_size == static_cast<size_t>(quantum_dimension(p, k)));
      CHECK(r.model_only.empty());
      CHECK(r.oracle_only.empty());
    }
  }
  CHECK(bijection_check(cp3(), 2).equal);
}

TEST_CASE("metaplectic bijection where a half-form exists") {
  for (long k : {1L, 2L, 3L, 5L}) {
    CHECK(bijection_check(cp1(), k, true).equal);
    CHECK(bijection_check(cp1xcp1(), k, true).equal);
    CHECK(bijection_check(hirzebruch2(), k, true).equal);
  }
  CHECK_THROWS_AS(bijection_check(cp2(), 2, true), NoHalfForm);
  CHECK_THROWS_AS(bijection_check(hirzebruch1(), 2, true), NoHalfForm);
}

namespace {

// naive admissibility: full box scan with no pruning, straight from the
// kernel constraints
std::vector<std::vector<long>> brute_admissible(const ConstructionData& cd, long k,
                                                bool metaplectic) {
  size_t nf = cd.pi.cols;
  std::vector<Vertex> verts = vertex_enumeration(
      HPolytope{cd.pi.rows, [&] {
                  std::vector<Halfspace> hs;
                  for (size_t f = 0; f < nf; ++f) hs.push_back({cd.pi.col(f), cd.lambda[f]});
                  return hs;
                }()});
  std::vector<long> hi(nf, 0);
  for (size_t f = 0; f < nf; ++f) {
    Rat best = 0;
    for (const auto& v : verts) {
      Rat val = dot(cd.pi.col(f), v.x) + cd.lambda[f];
      if (val > best) best = val;
    }
    Rat cap = Rat(k) * best;
    if (metaplectic) cap -= Rat(1, 2);
    hi[f] = long(rat_floor(cap).convert_to<long>());
  }
  std::vector<std::vector<long>> out;
  std::vector<long> alpha(nf, 0);
  for (;;) {
    bool ok = true;
    for (size_t j = 0; ok && j < cd.kernel.cols; ++j) {
      Rat lhs = 0, rhs = 0;
      for (size_t f = 0; f < nf; ++f) {
        Rat af = metaplectic ? Rat(2 * alpha[f] + 1, 2) : Rat(alpha[f]);
        lhs += Rat(cd.kernel.at(f, j)) * af;
        rhs += Rat(cd.kernel.at(f, j)) * Rat(k) * cd.lambda[f];
      }
      if (lhs != rhs) ok = false;
    }
    if (ok) out.push_back(alpha);
    size_t d = 0;
    while (d < nf && ++alpha[d] > hi[d]) alpha[d++] = 0;
    if (d == nf) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("pruned enumeration matches the unpruned box scan") {
  struct Probe {
    DelzantPolytope p;
    long k;
    bool meta;
  };
  std::vector<Probe> probes = {{cp2(), 3, false},     {cp2(), 5, false},
                               {cp1xcp1(), 2, false}, {cp1xcp1(), 3, true},
                               {hirzebruch1(), 2, false}, {hirzebruch2(), 2, true},
                               {cp1(), 7, false},     {cp3(), 2, false}};
  for (const auto& pr : probes) {
    ConstructionData cd = construction_data(pr.p);
    CHECK(admissible_indices(cd, pr.k, pr.meta) == brute_admissible(cd, pr.k, pr.meta));
  }
}

TEST_CASE("bijection in a translated frame") {
  // the check translates to the canonical frame internally, so an integrally
  // translated polytope still passes
  DelzantPolytope moved =
      require_delzant(translate(cp1xcp1(), rv({Rat(-3), Rat(2)})).hp());
  BijectionReport r = bijection_check(moved, 2);
  CHECK(r.equal);
  CHECK(r.model_size == 9);

  // rationally translated polytopes are prequantizable but the spectra agree
  // in the canonical frame as well
  DelzantPolytope shifted =
      require_delzant(translate(cp1(), rv({Rat(2, 5)})).hp());
  BijectionReport r2 = bijection_check(shifted, 4);
  CHECK(r2.equal);
  CHECK(r2.model_size == 5);
}
