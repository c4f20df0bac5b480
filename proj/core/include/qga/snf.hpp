// Integer matrices with exact arbitrary-precision entries and the Smith
// normal form engine used for grading lattices: U * M * V = D with U, V
// unimodular and D diagonal with a divisibility chain.

#pragma once

#include "qga/field.hpp"

#include <optional>
#include <vector>

namespace qga {

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static IntMat identity(int n);

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  bool operator==(const IntMat& o) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);

// Exact determinant by fraction-free elimination.
Int det(const IntMat& m);

struct SNFResult {
  IntMat d;  // rows x cols, diagonal, nonnegative, d_i | d_{i+1}
  IntMat u;  // rows x rows, |det| = 1
  IntMat v;  // cols x cols, |det| = 1
};

// Deterministic: the pivot is the smallest absolute nonzero entry of the
// working submatrix, ties broken row-major.
SNFResult smith_normal_form(const IntMat& m);

// Columns of V whose diagonal entry of D vanishes; a basis of the integer
// kernel lattice of M, in column order.
std::vector<std::vector<Int>> kernel_basis_from_snf(const SNFResult& s);

// Exact inverse; requires |det| = 1.
IntMat inverse_unimodular(const IntMat& m);

// One integer solution of A x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMat& a,
                                              const std::vector<Int>& b);

// Basis of the lattice generated by the columns of G inside Z^rows.
std::vector<std::vector<Int>> image_lattice_basis(const IntMat& g);

}  // namespace qga
