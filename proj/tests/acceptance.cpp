// Acceptance checks for the toric spectra library. Each criterion prints one
// PASS/FAIL line with its measured margins; the exit code is the number of
// failed criteria. All tolerances are pinned here, not configurable.

#include "property_suites.hpp"
#include "toric/bargmann.hpp"
#include "toric/inverse.hpp"
#include "toric/library.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace toric;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

// fixed degree-one deformation used by the round-trip criteria; coefficients
// are small enough that sup |g1| stays below 0.2 in absolute units on every
// library polytope (the same series ships in data/deformation_g1.json)
DeformationSeries published_g1(size_t dim) {
  auto poly = [dim](Rat c0, size_t var, Rat c1) {
    Polynomial p;
    p.dim = dim;
    p.terms.push_back({std::vector<unsigned>(dim, 0), c0});
    std::vector<unsigned> e(dim, 0);
    e[var] = 1;
    p.terms.push_back({e, c1});
    return p;
  };
  DeformationSeries g;
  g.dim = dim;
  g.order = 1;
  if (dim == 1) {
    g.g = {{poly(Rat(1, 100), 0, Rat(1, 500))}};
  } else {
    g.g = {{poly(Rat(1, 100), 0, Rat(1, 500)), poly(Rat(-1, 80), 1, Rat(1, 400))}};
  }
  return g;
}

double sup_g1_over(const DelzantPolytope& p, const DeformationSeries& g) {
  BoundingBox bb = bounding_box(p.hp());
  std::vector<double> lo(p.dim), hi(p.dim);
  for (size_t i = 0; i < p.dim; ++i) {
    lo[i] = to_absolute(bb.lo[i]);
    hi[i] = to_absolute(bb.hi[i]);
  }
  return g.sup_g1_estimate(lo, hi, 33);
}

Outcome criterion_bijection() {
  Outcome out;
  size_t checked = 0;
  for (const DelzantPolytope& p : {cp1(), cp2(), cp1xcp1(), hirzebruch2()}) {
    bool meta_possible = half_form_vector(p).ok;
    for (long k = 1; k <= 12; ++k) {
      BijectionReport r = bijection_check(p, k);
      ++checked;
      if (!r.equal) {
        out.pass = false;
        out.detail << " " << p.name << " k=" << k << " plain mismatch (" << r.model_size
                   << " vs " << r.oracle_size << ");";
      }
      if (meta_possible) {
        BijectionReport m = bijection_check(p, k, true);
        ++checked;
        if (!m.equal) {
          out.pass = false;
          out.detail << " " << p.name << " k=" << k << " metaplectic mismatch;";
        }
      }
    }
  }
  if (out.pass) out.detail << " " << checked << " exact set equalities";
  return out;
}

Outcome criterion_dimensions() {
  Outcome out;
  for (long k = 1; k <= 50; ++k) {
    long d1 = quantum_dimension(cp1(), k);
    long d2 = quantum_dimension(cp2(), k);
    long ds = quantum_dimension(cp1xcp1(), k);
    long dm = quantum_dimension(cp1(), k, true);
    if (d1 != k + 1 || d2 != (k + 1) * (k + 2) / 2 || ds != (k + 1) * (k + 1) || dm != k) {
      out.pass = false;
      out.detail << " k=" << k << " got (" << d1 << "," << d2 << "," << ds << "," << dm << ");";
    }
  }
  if (out.pass) out.detail << " closed forms hold up to k=50";
  return out;
}

Outcome criterion_weyl() {
  Outcome out;
  // frozen per-polytope caps on relative_gap = |count - leading| / k^(n-1)
  const std::map<std::string, double> gap_cap = {{"cp1", 1.5},
                                                 {"cp2", 2.0},
                                                 {"cp1xcp1", 2.5},
                                                 {"hirzebruch1", 3.0},
                                                 {"hirzebruch2", 3.5}};
  double worst_ratio_margin = -1.0;
  std::string worst_ratio_case;
  for (const DelzantPolytope& p : library()) {
    for (long k : {10L, 20L, 50L, 100L, 200L}) {
      WeylReport r = weyl_report(p, k);
      double ratio_gap = std::abs(double(r.count) / r.leading - 1.0);
      double bound = 3.0 / double(k);
      if (ratio_gap > bound) {
        out.pass = false;
        if (ratio_gap - bound > worst_ratio_margin) {
          worst_ratio_margin = ratio_gap - bound;
          std::ostringstream os;
          os << p.name << " k=" << k << " |count/leading-1| = " << ratio_gap << " > " << bound;
          worst_ratio_case = os.str();
        }
      }
      double cap = gap_cap.at(p.name);
      if (r.relative_gap >= cap) {
        out.pass = false;
        out.detail << " " << p.name << " k=" << k << " relative_gap " << r.relative_gap
                   << " >= cap " << cap << ";";
      }
    }
  }
  if (!worst_ratio_case.empty()) out.detail << " ratio bound exceeded: " << worst_ratio_case;
  if (out.pass) out.detail << " ratio within 3/k and gaps under the frozen caps";
  return out;
}

Outcome criterion_half_form() {
  Outcome out;
  auto expect = [&out](const DelzantPolytope& p, bool want_ok, std::vector<int> want_u) {
    HalfFormResult r = half_form_vector(p);
    if (r.ok != want_ok || (want_ok && r.u != want_u)) {
      out.pass = false;
      out.detail << " " << p.name << " unexpected parity result;";
    }
  };
  expect(cp1(), true, {1});
  expect(cp2(), false, {});
  expect(cp1xcp1(), true, {1, 1});
  expect(hirzebruch1(), false, {});
  expect(hirzebruch2(), true, {1, 1});
  if (out.pass) out.detail << " yes/no pattern and parity vectors exact";
  return out;
}

Outcome criterion_interiority() {
  Outcome out;
  size_t points = 0;
  for (const DelzantPolytope& p : library()) {
    if (!half_form_vector(p).ok) continue;
    for (long k = 1; k <= 30; ++k) {
      ExactSpectrum s = metaplectic_spectrum_exact(p, k);
      for (const RVec& x : s.points) {
        ++points;
        for (const auto& h : p.facets)
          if (facet_value(h, x) < Rat(1, 2 * k)) {
            out.pass = false;
            out.detail << " " << p.name << " k=" << k << " point " << format_rvec(x)
                       << " clearance below pi/k;";
          }
      }
    }
  }
  if (out.pass) out.detail << " " << points << " points all clear pi/k on every facet";
  return out;
}

struct RoundTrip {
  Outcome recover;  // criterion 6
  Outcome rate;     // criterion 7
};

RoundTrip criterion_round_trip() {
  RoundTrip rt;
  const std::vector<long> ks = {16, 32, 64, 128};
  for (const DelzantPolytope& p : library()) {
    DeformationSeries g = published_g1(p.dim);
    double sup = sup_g1_over(p, g);
    if (sup > 0.2) {
      rt.recover.pass = false;
      rt.recover.detail << " " << p.name << " sup|g1| = " << sup << " exceeds 0.2;";
    }

    std::vector<SpectrumCloud> clouds;
    for (long k : ks) {
      SpectrumCloud exact = model_spectrum(p, k);
      SpectrumCloud deformed = apply_deformation(exact, g);
      double d = hausdorff_distance(deformed.points, exact.points);
      double bound = 2.0 * sup / double(k);
      if (d > bound) {
        rt.rate.pass = false;
        rt.rate.detail << " " << p.name << " k=" << k << " d_H = " << d << " > " << bound << ";";
      }
      clouds.push_back(std::move(deformed));
    }

    try {
      ReconstructionResult r = limit_polytope(clouds);
      if (!polytope_equal(r.polytope, p)) {
        rt.recover.pass = false;
        rt.recover.detail << " " << p.name << " recovered a different polytope;";
      }
      double cap = 1.5 * sup;
      if (r.rate.C > cap) {
        rt.recover.pass = false;
        rt.recover.detail << " " << p.name << " rate C = " << r.rate.C << " > " << cap << ";";
      }
    } catch (const Error& e) {
      rt.recover.pass = false;
      rt.recover.detail << " " << p.name << " reconstruction threw: " << e.what() << ";";
    }
  }
  if (rt.recover.pass)
    rt.recover.detail << " all five polytopes recovered exactly, C within 1.5 sup|g1|";
  if (rt.rate.pass) rt.rate.detail << " every deformed cloud within 2 sup|g1|/k of the model";
  return rt;
}

Outcome criterion_properties() {
  Outcome out;
  struct Named {
    const char* name;
    props::SuiteResult r;
  };
  std::vector<Named> suites = {
      {"hausdorff axioms", props::hausdorff_axioms(0xacce0001, 100)},
      {"vertex-choice invariance", props::vertex_choice_invariance(0xacce0002, 100)},
      {"unimodular stability", props::unimodular_stability(0xacce0003, 100)},
      {"reconstruction determinism", props::reconstruction_determinism(0xacce0004, 100)},
  };
  for (const auto& s : suites) {
    if (s.r.instances < 100 || !s.r.ok()) {
      out.pass = false;
      out.detail << " " << s.name << ": " << s.r.failures << "/" << s.r.instances
                 << " failed (" << s.r.first_failure << ");";
    }
  }
  if (out.pass) out.detail << " four suites, 100 randomized instances each, zero failures";
  return out;
}

void report(int id, const char* name, const Outcome& o, int& failures) {
  std::cout << "criterion " << id << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " -"
            << o.detail.str() << "\n";
  if (!o.pass) ++failures;
}

}  // namespace

int main() {
  int failures = 0;
  try {
    report(1, "oracle-lattice bijection", criterion_bijection(), failures);
    report(2, "dimension formulas", criterion_dimensions(), failures);
    report(3, "weyl counting", criterion_weyl(), failures);
    report(4, "half-form parity", criterion_half_form(), failures);
    report(5, "metaplectic interiority", criterion_interiority(), failures);
    RoundTrip rt = criterion_round_trip();
    report(6, "isospectral round trip", rt.recover, failures);
    report(7, "convergence rate", rt.rate, failures);
    report(8, "property suites", criterion_properties(), failures);
  } catch (const std::exception& e) {
    std::cout << "acceptance run aborted: " << e.what() << "\n";
    return 99;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures;
}
