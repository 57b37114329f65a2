#include "toric/delzant.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

namespace {

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal)
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(),
                                        b.normal.end());
  return a.offset < b.offset;
}

}  // namespace

ValidationReport validate_delzant(const HPolytope& p, const std::string& name) {
  ValidationReport rep;
  size_t n = p.dim;
  if (n == 0 || p.facets.empty()) {
    rep.violations.push_back({"not full-dimensional", "no facets or zero dimension"});
    return rep;
  }
  for (const auto& h : p.facets)
    if (h.normal.size() != n) {
      rep.violations.push_back({"malformed facet", "normal length differs from dimension"});
      return rep;
    }

  for (size_t f = 0; f < p.facets.size(); ++f) {
    Int g = gcd_vec(p.facets[f].normal);
    if (g == 0)
      rep.violations.push_back({"non-primitive normal", "facet " + std::to_string(f) + " has zero normal"});
    else if (g != 1)
      rep.violations.push_back({"non-primitive normal",
                                "facet " + std::to_string(f) + " normal " +
                                    format_ivec(p.facets[f].normal) + " has content " + g.str()});
  }
  for (size_t i = 0; i < p.facets.size(); ++i)
    for (size_t j = i + 1; j < p.facets.size(); ++j)
      if (halfspace_equal_normalized(p.facets[i], p.facets[j]))
        rep.violations.push_back(
            {"duplicate halfspace", "facets " + std::to_string(i) + " and " + std::to_string(j)});
  if (!rep.violations.empty()) return rep;

  std::vector<Vertex> verts;
  try {
    verts = vertex_enumeration(p, /*require_simple=*/false);
  } catch (const Unbounded&) {
    rep.violations.push_back({"unbounded", "some coordinate range is infinite"});
    return rep;
  } catch (const NotFullDimensional& e) {
    rep.violations.push_back({"not full-dimensional", e.what()});
    return rep;
  }

  for (size_t i = 0; i < verts.size(); ++i) {
    if (verts[i].active.size() != n) {
      rep.violations.push_back({"not simple", "vertex " + format_rvec(verts[i].x) + " lies on " +
                                                  std::to_string(verts[i].active.size()) +
                                                  " facets"});
      continue;
    }
    IntMatrix m(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) m.at(r, c) = p.facets[verts[i].active[r]].normal[c];
    Int d = det(m);
    if (d != 1 && d != -1) {
      std::string facs;
      for (size_t r = 0; r < n; ++r) {
        if (r) facs += ",";
        facs += std::to_string(verts[i].active[r]);
      }
      rep.violations.push_back({"vertex normal matrix not unimodular",
                                "vertex " + format_rvec(verts[i].x) + " facets {" + facs +
                                    "} det " + d.str()});
    }
  }
  if (!rep.violations.empty()) return rep;

  // canonical form: sort facets, remap active sets through the permutation
  DelzantPolytope out;
  out.dim = n;
  out.name = name;
  std::vector<size_t> order(p.facets.size());
  std::iota(order.begin(), order.end(), size_t(0));
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return halfspace_less(p.facets[a], p.facets[b]); });
  std::vector<size_t> rank(p.facets.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  for (size_t i = 0; i < order.size(); ++i) out.facets.push_back(p.facets[order[i]]);
  for (auto& v : verts) {
    for (auto& f : v.active) f = rank[f];
    std::sort(v.active.begin(), v.active.end());
  }
  out.vertices = std::move(verts);  // already lex sorted by coordinates

  rep.ok = true;
  rep.polytope = std::move(out);
  return rep;
}

DelzantPolytope require_delzant(const HPolytope& p, const std::string& name) {
  ValidationReport rep = validate_delzant(p, name);
  if (rep.ok) return std::move(*rep.polytope);
  std::string msg = "not a Delzant polytope";
  if (!name.empty()) msg += " (" + name + ")";
  for (const auto& v : rep.violations) msg += "; " + v.kind + ": " + v.detail;
  throw NotDelzant(msg);
}

std::vector<Edge> polytope_edges(const DelzantPolytope& p) {
  // two vertices of a simple polytope are adjacent iff they share exactly
  // dim-1 active facets
  std::vector<Edge> edges;
  size_t n = p.dim;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    for (size_t j = i + 1; j < p.vertices.size(); ++j) {
      size_t shared = 0;
      const auto &A = p.vertices[i].active, &B = p.vertices[j].active;
      size_t a = 0, b = 0;
      while (a < A.size() && b < B.size()) {
        if (A[a] == B[b]) ++shared, ++a, ++b;
        else if (A[a] < B[b]) ++a;
        else ++b;
      }
      if (shared == n - 1) edges.push_back({i, j});
    }
  return edges;
}

Rat edge_length(const RVec& edge_vector) {
  Int den = 1;
  for (const Rat& e : edge_vector) den = boost::multiprecision::lcm(den, rat_den(e));
  IVec w(edge_vector.size());
  for (size_t i = 0; i < edge_vector.size(); ++i) w[i] = rat_num(edge_vector[i] * Rat(den));
  Int g = gcd_vec(w);
  if (g == 0) throw ZeroVector();
  return Rat(g, den);
}

PrequantizationResult check_prequantizable(const DelzantPolytope& p) {
  PrequantizationResult res;
  for (const Edge& e : polytope_edges(p)) {
    RVec ev(p.dim);
    for (size_t i = 0; i < p.dim; ++i) ev[i] = p.vertices[e.v].x[i] - p.vertices[e.u].x[i];
    Rat len = edge_length(ev);
    if (!is_integral(len)) res.offenders.push_back({e.u, e.v, len});
  }
  if (!res.offenders.empty()) return res;
  res.ok = true;
  res.translation.resize(p.dim);
  for (size_t i = 0; i < p.dim; ++i) res.translation[i] = -p.vertices[0].x[i];
  return res;
}

HalfFormResult half_form_vector(const DelzantPolytope& p) {
  std::vector<IVec> rows;
  std::vector<int> rhs;
  for (const auto& h : p.facets) {
    rows.push_back(h.normal);
    rhs.push_back(1);
  }
  Gf2Solution s = gf2_solve(rows, rhs, p.dim);
  HalfFormResult res;
  res.ok = s.ok;
  if (s.ok)
    res.u = s.x;
  else
    res.certificate = s.certificate;
  return res;
}

bool polytope_equal(const DelzantPolytope& a, const DelzantPolytope& b) {
  if (a.dim != b.dim)
    throw DimensionMismatch("polytope dimensions differ: " + std::to_string(a.dim) + " vs " +
                            std::to_string(b.dim));
  if (a.facets.size() != b.facets.size()) return false;
  for (size_t i = 0; i < a.facets.size(); ++i)
    if (a.facets[i].normal != b.facets[i].normal || a.facets[i].offset != b.facets[i].offset)
      return false;
  return true;
}

DelzantPolytope translate(const DelzantPolytope& p, const RVec& c) {
  if (c.size() != p.dim) throw DimensionMismatch("translation vector has wrong length");
  DelzantPolytope out = p;
  // <X, x + c> + (lambda - <X, c>) = <X, x> + lambda
  for (size_t f = 0; f < out.facets.size(); ++f)
    out.facets[f].offset -= dot(out.facets[f].normal, c);
  for (auto& v : out.vertices)
    for (size_t i = 0; i < p.dim; ++i) v.x[i] += c[i];
  // facet sort order only depends on normals up to offset ties; a rigid
  // translation cannot create ties between distinct normals, so order holds
  return out;
}

ConstructionData construction_data(const DelzantPolytope& p) {
  for (size_t f = 0; f < p.facets.size(); ++f)
    if (!is_integral(p.facets[f].offset))
      throw NotPrequantized("offset of facet " + std::to_string(f) + " is " +
                            format_rational(p.facets[f].offset) +
                            ", expected an integer (translate by the canonical c first)");
  ConstructionData cd;
  size_t n = p.dim, F = p.facets.size();
  cd.pi = IntMatrix(n, F);
  cd.lambda.resize(F);
  for (size_t f = 0; f < F; ++f) {
    for (size_t i = 0; i < n; ++i) cd.pi.at(i, f) = p.facets[f].normal[i];
    cd.lambda[f] = p.facets[f].offset;
  }
  cd.kernel = integer_kernel_basis(cd.pi);
  if (cd.kernel.cols != F - n)
    throw InconsistentSystem("kernel rank " + std::to_string(cd.kernel.cols) + ", expected " +
                             std::to_string(F - n));
  // Delzant => the normals span Z^n, i.e. all Smith invariants are 1
  for (const Int& d : smith_invariants(cd.pi))
    if (d != 1) throw InconsistentSystem("facet normal matrix is not surjective over Z");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < cd.kernel.cols; ++j) {
      Int s = 0;
      for (size_t f = 0; f < F; ++f) s += cd.pi.at(i, f) * cd.kernel.at(f, j);
      if (s != 0) throw InconsistentSystem("kernel basis fails pi * K = 0");
    }
  cd.base_vertex = p.vertices[0].x;
  return cd;
}

DelzantPolytope unimodular_image(const DelzantPolytope& p, const IntMatrix& a, const RVec& t) {
  if (a.rows != p.dim || a.cols != p.dim)
    throw DimensionMismatch("matrix shape does not match polytope dimension");
  if (t.size() != p.dim) throw DimensionMismatch("translation vector has wrong length");
  IntMatrix ainv = unimodular_inverse(a);  // throws NotUnimodular
  HPolytope out;
  out.dim = p.dim;
  for (const auto& h : p.facets) {
    // y = A x + t maps <X, x> + l >= 0 to <A^{-T} X, y> + l - <A^{-T} X, t> >= 0
    IVec nn(p.dim);
    for (size_t i = 0; i < p.dim; ++i) {
      Int s = 0;
      for (size_t j = 0; j < p.dim; ++j) s += ainv.at(j, i) * h.normal[j];  // (A^{-1})^T
      nn[i] = s;
    }
    Rat off = h.offset - dot(nn, t);
    out.facets.push_back({std::move(nn), std::move(off)});
  }
  return require_delzant(out, p.name);
}

Rat polytope_volume(const DelzantPolytope& p) { return polytope_volume(p.hp()); }

}  // namespace toric
