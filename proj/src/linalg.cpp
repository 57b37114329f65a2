#include "toric/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace toric {

Int gcd_vec(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;  // >= 0
}

IVec primitive_part(const IVec& v) {
  Int g = gcd_vec(v);
  if (g == 0) throw ZeroVector();
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_primitive(const IVec& v) { return gcd_vec(v) == 1; }

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw NonSquare();
  size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && w.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(s, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        // Bareiss: division is exact at every step
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  Int d = w.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

bool is_unimodular(const IntMatrix& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  size_t r = m.rows, c = m.cols;
  IntMatrix A = m;
  IntMatrix U = IntMatrix::identity(c);

  auto swap_cols = [&](size_t p, size_t q) {
    if (p == q) return;
    for (size_t i = 0; i < r; ++i) std::swap(A.at(i, p), A.at(i, q));
    for (size_t i = 0; i < c; ++i) std::swap(U.at(i, p), U.at(i, q));
  };
  auto addmul_col = [&](size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t i = 0; i < r; ++i) A.at(i, dst) += q * A.at(i, src);
    for (size_t i = 0; i < c; ++i) U.at(i, dst) += q * U.at(i, src);
  };

  size_t col = 0;
  for (size_t row = 0; row < r && col < c; ++row) {
    // Euclidean column reduction until row has at most one nonzero entry
    // among the active columns [col, c).
    for (;;) {
      size_t best = c;
      for (size_t j = col; j < c; ++j) {
        if (A.at(row, j) == 0) continue;
        if (best == c || abs(A.at(row, j)) < abs(A.at(row, best))) best = j;
      }
      if (best == c) break;  // all zero, move on without consuming a column
      swap_cols(col, best);
      bool clean = true;
      for (size_t j = col + 1; j < c; ++j) {
        if (A.at(row, j) == 0) continue;
        Int q = A.at(row, j) / A.at(row, col);  // truncated is fine, we loop
        addmul_col(j, col, -q);
        if (A.at(row, j) != 0) clean = false;
      }
      if (clean) {
        ++col;
        break;
      }
    }
  }

  // columns [col, c) of U span the kernel lattice
  IntMatrix K(c, c - col);
  for (size_t j = col; j < c; ++j)
    for (size_t i = 0; i < c; ++i) K.at(i, j - col) = U.at(i, j);

  // canonical sign: first nonzero entry of each basis vector positive
  for (size_t j = 0; j < K.cols; ++j) {
    for (size_t i = 0; i < K.rows; ++i) {
      if (K.at(i, j) == 0) continue;
      if (K.at(i, j) < 0)
        for (size_t i2 = 0; i2 < K.rows; ++i2) K.at(i2, j) = -K.at(i2, j);
      break;
    }
  }
  return K;
}

std::vector<Int> smith_invariants(IntMatrix A) {
  size_t r = A.rows, c = A.cols;
  std::vector<Int> inv;
  size_t t = 0;
  while (t < r && t < c) {
    // locate a nonzero pivot of minimal absolute value in the trailing block
    size_t pi = r, pj = c;
    for (size_t i = t; i < r; ++i)
      for (size_t j = t; j < c; ++j) {
        if (A.at(i, j) == 0) continue;
        if (pi == r || abs(A.at(i, j)) < abs(A.at(pi, pj))) pi = i, pj = j;
      }
    if (pi == r) break;  // trailing block is zero
    for (size_t j = 0; j < c; ++j) std::swap(A.at(t, j), A.at(pi, j));
    for (size_t i = 0; i < r; ++i) std::swap(A.at(i, t), A.at(i, pj));

    bool again = true;
    while (again) {
      again = false;
      for (size_t i = t + 1; i < r; ++i) {
        Int q = A.at(i, t) / A.at(t, t);
        if (q != 0)
          for (size_t j = t; j < c; ++j) A.at(i, j) -= q * A.at(t, j);
        if (A.at(i, t) != 0) {
          // remainder smaller than pivot: swap rows and retry
          for (size_t j = t; j < c; ++j) std::swap(A.at(t, j), A.at(i, j));
          again = true;
        }
      }
      for (size_t j = t + 1; j < c; ++j) {
        Int q = A.at(t, j) / A.at(t, t);
        if (q != 0)
          for (size_t i = t; i < r; ++i) A.at(i, j) -= q * A.at(i, t);
        if (A.at(t, j) != 0) {
          for (size_t i = t; i < r; ++i) std::swap(A.at(i, t), A.at(i, j));
          again = true;
        }
      }
    }
    // enforce divisibility of the remaining block by the pivot
    bool fixed = false;
    for (size_t i = t + 1; i < r && !fixed; ++i)
      for (size_t j = t + 1; j < c && !fixed; ++j)
        if (A.at(i, j) % A.at(t, t) != 0) {
          for (size_t jj = t; jj < c; ++jj) A.at(t, jj) += A.at(i, jj);
          fixed = true;
        }
    if (fixed) continue;  // re-run the reduction at the same t

    inv.push_back(abs(A.at(t, t)));
    ++t;
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows != m.cols) throw NonSquare();
  Int d = det(m);
  if (d != 1 && d != -1)
    throw NotUnimodular("matrix has determinant " + d.str() + ", expected +-1");
  size_t n = m.rows;
  IntMatrix inv(n, n);
  if (n == 0) return inv;
  // adjugate / det; cofactor determinants stay exact
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (size_t r2 = 0, rr = 0; r2 < n; ++r2) {
        if (r2 == j) continue;
        for (size_t c2 = 0, cc = 0; c2 < n; ++c2) {
          if (c2 == i) continue;
          minor.at(rr, cc) = m.at(r2, c2);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = cof * d;  // 1/d == d for d = +-1
    }
  return inv;
}

Int dot(const IVec& x, const IVec& y) {
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rat dot(const IVec& x, const RVec& y) {
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += Rat(x[i]) * y[i];
  return s;
}

Rat dot(const RVec& x, const RVec& y) {
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::optional<RVec> solve_square(const std::vector<RVec>& A, const RVec& b) {
  size_t n = A.size();
  std::vector<RVec> w(n, RVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = A[i][j];
    w[i][n] = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(w[k], w[p]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      Rat f = w[i][k] / w[k][k];
      for (size_t j = k; j <= n; ++j) w[i][j] -= f * w[k][j];
    }
  }
  RVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = w[i][n] / w[i][i];
  return x;
}

std::optional<RVec> solve_square(const std::vector<IVec>& A, const RVec& b) {
  std::vector<RVec> ar(A.size());
  for (size_t i = 0; i < A.size(); ++i) ar[i] = to_rvec(A[i]);
  return solve_square(ar, b);
}

size_t rational_rank(std::vector<RVec> rows) {
  if (rows.empty()) return 0;
  size_t n = rows[0].size(), rank = 0;
  for (size_t col = 0; col < n && rank < rows.size(); ++col) {
    size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Gf2Solution gf2_solve(const std::vector<IVec>& rows, const std::vector<int>& rhs, size_t n) {
  // bitmask rows: bits [0, n) coefficients, bit n the rhs; provenance masks
  // record which original rows were XORed into each work row.
  size_t m = rows.size();
  std::vector<uint64_t> w(m), prov(m);
  for (size_t i = 0; i < m; ++i) {
    uint64_t bits = 0;
    for (size_t j = 0; j < n; ++j)
      if (rows[i][j] % 2 != 0) bits |= uint64_t(1) << j;
    if (rhs[i] % 2 != 0) bits |= uint64_t(1) << n;
    w[i] = bits;
    prov[i] = uint64_t(1) << i;
  }

  Gf2Solution sol;
  std::vector<size_t> pivot_row(n, m);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t p = rank;
    while (p < m && !(w[p] >> col & 1)) ++p;
    if (p == m) continue;
    std::swap(w[rank], w[p]);
    std::swap(prov[rank], prov[p]);
    for (size_t i = 0; i < m; ++i) {
      if (i != rank && (w[i] >> col & 1)) {
        w[i] ^= w[rank];
        prov[i] ^= prov[rank];
      }
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (size_t i = rank; i < m; ++i) {
    if (w[i] >> n & 1) {  // 0 = 1
      for (size_t j = 0; j < m; ++j)
        if (prov[i] >> j & 1) sol.certificate.push_back(j);
      return sol;
    }
  }
  sol.ok = true;
  sol.x.assign(n, 0);  // free variables pinned to 0
  for (size_t col = 0; col < n; ++col)
    if (pivot_row[col] < m && (w[pivot_row[col]] >> n & 1)) sol.x[col] = 1;
  return sol;
}

}  // namespace toric
