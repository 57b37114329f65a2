// Exact integer/rational linear algebra at desk scale (matrices up to ~12x12).
// Fraction-free determinants, unimodular kernel bases, Smith invariants and
// GF(2) solving are the load-bearing pieces; everything is deterministic.

#pragma once

#include "toric/errors.hpp"
#include "toric/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toric {

// row-major dense integer matrix
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IVec col(size_t j) const {
    IVec v(rows);
    for (size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  IVec row(size_t i) const {
    IVec v(cols);
    for (size_t j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

Int gcd_vec(const IVec& v);

// v / gcd(v), sign preserved; throws ZeroVector on the zero vector
IVec primitive_part(const IVec& v);

bool is_primitive(const IVec& v);

// exact determinant by Bareiss fraction-free elimination; throws NonSquare
Int det(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Basis of {x in Z^cols : M x = 0} as columns of the returned matrix,
// computed by unimodular column reduction; the basis generates the full
// kernel lattice (kernels of integer maps are saturated).
IntMatrix integer_kernel_basis(const IntMatrix& m);

// Smith normal form invariant factors d_1 | d_2 | ..., zeros omitted
std::vector<Int> smith_invariants(IntMatrix m);

// inverse of a unimodular integer matrix, exact; throws NotUnimodular
IntMatrix unimodular_inverse(const IntMatrix& m);

// dot products
Int dot(const IVec& x, const IVec& y);
Rat dot(const IVec& x, const RVec& y);
Rat dot(const RVec& x, const RVec& y);

// Solve A x = b exactly (A square, rational Gaussian elimination with
// partial pivoting on nonzero entries); nullopt when singular.
std::optional<RVec> solve_square(const std::vector<RVec>& A, const RVec& b);
std::optional<RVec> solve_square(const std::vector<IVec>& A, const RVec& b);

// rank over Q by Gaussian elimination; rows may be modified copies
size_t rational_rank(std::vector<RVec> rows);

// Affine solve over GF(2): find x with <row_i, x> = rhs_i (mod 2) for all i.
// On success x is one solution (unique when the rows span GF(2)^n). On
// failure, certificate holds the indices of rows whose XOR gives 0 = 1.
struct Gf2Solution {
  bool ok = false;
  std::vector<int> x;               // entries 0/1, size n
  std::vector<size_t> certificate;  // row indices, nonempty iff !ok
};
Gf2Solution gf2_solve(const std::vector<IVec>& rows, const std::vector<int>& rhs, size_t n);

}  // namespace toric
