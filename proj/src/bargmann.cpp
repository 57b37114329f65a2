#include "toric/bargmann.hpp"

#include "toric/quantum.hpp"

#include <algorithm>

namespace toric {

namespace {

HPolytope polytope_from_data(const ConstructionData& cd) {
  HPolytope p;
  p.dim = cd.pi.rows;
  for (size_t f = 0; f < cd.pi.cols; ++f) p.facets.push_back({cd.pi.col(f), cd.lambda[f]});
  return p;
}

std::vector<int> require_gamma(const ConstructionData& cd) {
  std::vector<IVec> rows;
  std::vector<int> rhs;
  for (size_t f = 0; f < cd.pi.cols; ++f) {
    rows.push_back(cd.pi.col(f));
    rhs.push_back(1);
  }
  Gf2Solution s = gf2_solve(rows, rhs, cd.pi.rows);
  if (!s.ok) {
    std::string msg = "no half-form parity vector; conflicting facet set {";
    for (size_t i = 0; i < s.certificate.size(); ++i) {
      if (i) msg += ",";
      msg += std::to_string(s.certificate[i]);
    }
    throw NoHalfForm(msg + "}");
  }
  return s.x;
}

}  // namespace

HalfFormDivisor half_form_divisor(const ConstructionData& cd) {
  HalfFormDivisor hd;
  hd.gamma = require_gamma(cd);
  for (size_t f = 0; f < cd.pi.cols; ++f) {
    Int s = 0;
    for (size_t i = 0; i < cd.pi.rows; ++i) s += Int(hd.gamma[i]) * cd.pi.at(i, f);
    // <gamma, X_f> is odd by construction
    hd.d.push_back((s - 1) / 2);
  }
  return hd;
}

std::vector<std::vector<long>> admissible_indices(const ConstructionData& cd, long k,
                                                  bool metaplectic) {
  if (k < 1) throw Error("k must be a positive integer");
  size_t F = cd.pi.cols;
  if (metaplectic) require_gamma(cd);  // existence gate for the shifted indices

  // box bounds from the vertex list of the polytope cut out by (pi, lambda)
  std::vector<Vertex> verts = vertex_enumeration(polytope_from_data(cd));
  std::vector<Int> hi(F);
  for (size_t f = 0; f < F; ++f) {
    Rat best = 0;
    IVec xf = cd.pi.col(f);
    for (const auto& v : verts) {
      Rat val = dot(xf, v.x) + cd.lambda[f];
      if (val > best) best = val;
    }
    // alpha_f (+1/2) <= k * best
    Rat cap = Rat(k) * best;
    if (metaplectic) cap -= Rat(1, 2);
    hi[f] = rat_floor(cap);
    if (hi[f] < 0) return {};
  }

  // constraints in pure integers: sum_f c_f alpha_f = target
  size_t R = cd.kernel.cols;
  std::vector<IVec> coef(R, IVec(F));
  std::vector<Int> target(R);
  for (size_t r = 0; r < R; ++r) {
    Int lam = 0, ysum = 0;
    for (size_t f = 0; f < F; ++f) {
      coef[r][f] = cd.kernel.at(f, r);
      lam += cd.kernel.at(f, r) * rat_num(cd.lambda[f]);  // lambda integral
      ysum += cd.kernel.at(f, r);
    }
    if (!metaplectic) {
      target[r] = Int(k) * lam;
    } else {
      // 2 sum Y alpha = 2k <Y, lambda> - sum Y; gamma's existence makes
      // sum Y even, so divide once and keep integer arithmetic
      Int rhs = 2 * Int(k) * lam - ysum;
      if (rhs % 2 != 0)
        throw InconsistentSystem("metaplectic constraint with odd right-hand side");
      for (size_t f = 0; f < F; ++f) coef[r][f] = cd.kernel.at(f, r);
      target[r] = rhs / 2;
    }
  }

  // suffix min/max of each constraint for pruning the box scan
  std::vector<std::vector<Int>> sufmin(R, std::vector<Int>(F + 1, Int(0)));
  std::vector<std::vector<Int>> sufmax(R, std::vector<Int>(F + 1, Int(0)));
  for (size_t r = 0; r < R; ++r)
    for (size_t f = F; f-- > 0;) {
      Int c = coef[r][f];
      Int a = 0, b = c * hi[f];
      if (a > b) std::swap(a, b);
      sufmin[r][f] = sufmin[r][f + 1] + a;
      sufmax[r][f] = sufmax[r][f + 1] + b;
    }

  std::vector<std::vector<long>> out;
  std::vector<long> alpha(F, 0);
  std::vector<Int> partial(R, Int(0));
  auto scan = [&](auto&& self, size_t f) -> void {
    if (f == F) {
      for (size_t r = 0; r < R; ++r)
        if (partial[r] != target[r]) return;
      out.push_back(alpha);
      return;
    }
    for (long a = 0; Int(a) <= hi[f]; ++a) {
      alpha[f] = a;
      bool feasible = true;
      for (size_t r = 0; r < R; ++r) {
        Int base = partial[r] + coef[r][f] * a;
        if (base + sufmin[r][f + 1] > target[r] || base + sufmax[r][f + 1] < target[r]) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      for (size_t r = 0; r < R; ++r) partial[r] += coef[r][f] * a;
      self(self, f + 1);
      for (size_t r = 0; r < R; ++r) partial[r] -= coef[r][f] * a;
    }
    alpha[f] = 0;
  };
  scan(scan, 0);
  return out;  // lex order by construction
}

OracleSpectrum oracle_spectrum(const ConstructionData& cd, long k, bool metaplectic) {
  OracleSpectrum os;
  os.k = k;
  os.metaplectic = metaplectic;

  size_t n = cd.pi.rows, F = cd.pi.cols;
  // facets through the base vertex form a unimodular block
  std::vector<size_t> active;
  for (size_t f = 0; f < F; ++f)
    if (dot(cd.pi.col(f), cd.base_vertex) + cd.lambda[f] == 0) active.push_back(f);
  if (active.size() != n)
    throw InconsistentSystem("base vertex lies on " + std::to_string(active.size()) +
                             " facets, expected " + std::to_string(n));
  IntMatrix m(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) m.at(r, c) = cd.pi.at(c, active[r]);  // row r = X_{active[r]}
  IntMatrix minv = unimodular_inverse(m);

  auto rhs_of = [&](const std::vector<long>& alpha, size_t f) {
    Rat r = Rat(alpha[f]);
    if (metaplectic) r += Rat(1, 2);
    return r / Rat(k) - cd.lambda[f];
  };

  for (const auto& alpha : admissible_indices(cd, k, metaplectic)) {
    RVec rhs(n);
    for (size_t r = 0; r < n; ++r) rhs[r] = rhs_of(alpha, active[r]);
    RVec l(n);
    for (size_t i = 0; i < n; ++i) {
      Rat s = 0;
      for (size_t j = 0; j < n; ++j) s += Rat(minv.at(i, j)) * rhs[j];
      l[i] = s;
    }
    // the admissibility constraints promise the remaining facet equations;
    // verify anyway, a mismatch means a bug
    for (size_t f = 0; f < F; ++f)
      if (dot(cd.pi.col(f), l) != rhs_of(alpha, f))
        throw InconsistentSystem("facet equation " + std::to_string(f) +
                                 " fails for an admissible index");
    os.entries.push_back({alpha, std::move(l)});
  }
  std::sort(os.entries.begin(), os.entries.end(),
            [](const OracleEntry& a, const OracleEntry& b) { return rvec_less(a.point, b.point); });
  return os;
}

BijectionReport bijection_check(const DelzantPolytope& p, long k, bool metaplectic) {
  PrequantizationResult pr = check_prequantizable(p);
  if (!pr.ok) throw NotPrequantizable("bijection check needs a prequantizable polytope");
  DelzantPolytope pc = translate(p, pr.translation);  // integral offsets
  ConstructionData cd = construction_data(pc);

  ExactSpectrum model =
      metaplectic ? metaplectic_spectrum_exact(pc, k) : model_spectrum_exact(pc, k);
  OracleSpectrum oracle = oracle_spectrum(cd, k, metaplectic);

  BijectionReport rep;
  rep.model_size = model.points.size();
  rep.oracle_size = oracle.entries.size();

  size_t i = 0, j = 0;
  while (i < rep.model_size && j < rep.oracle_size) {
    if (rvec_eq(model.points[i], oracle.entries[j].point)) {
      ++i, ++j;
    } else if (rvec_less(model.points[i], oracle.entries[j].point)) {
      rep.model_only.push_back(model.points[i++]);
    } else {
      rep.oracle_only.push_back(oracle.entries[j].point);
      rep.unmatched_alpha.push_back(oracle.entries[j].alpha);
      ++j;
    }
  }
  while (i < rep.model_size) rep.model_only.push_back(model.points[i++]);
  while (j < rep.oracle_size) {
    rep.oracle_only.push_back(oracle.entries[j].point);
    rep.unmatched_alpha.push_back(oracle.entries[j].alpha);
    ++j;
  }
  rep.equal = rep.model_only.empty() && rep.oracle_only.empty();
  return rep;
}

}  // namespace toric
