#include "qga/snf.hpp"

#include <stdexcept>
#include <utility>

namespace qga {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("shape mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const Int& e = x.at(i, k);
      if (e == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += e * y.at(k, j);
    }
  }
  return r;
}

Int det(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det needs a square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  int sign = 1;
  Int prev = 1;
  // Bareiss fraction-free elimination: every division below is exact.
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (w.at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

namespace {

struct Worker {
  IntMat& w;
  IntMat& u;
  IntMat& v;

  void swap_rows(int i, int j) {
    for (int c = 0; c < w.cols; ++c) std::swap(w.at(i, c), w.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }

  void swap_cols(int i, int j) {
    for (int r = 0; r < w.rows; ++r) std::swap(w.at(r, i), w.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }

  // row i -= q * row t
  void row_sub(int i, int t, const Int& q) {
    for (int c = 0; c < w.cols; ++c) w.at(i, c) -= q * w.at(t, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(t, c);
  }

  // col j -= q * col t
  void col_sub(int j, int t, const Int& q) {
    for (int r = 0; r < w.rows; ++r) w.at(r, j) -= q * w.at(r, t);
    for (int r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, t);
  }

  void row_add(int i, int t) {
    for (int c = 0; c < w.cols; ++c) w.at(i, c) += w.at(t, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) += u.at(t, c);
  }

  void negate_row(int i) {
    for (int c = 0; c < w.cols; ++c) w.at(i, c) = -w.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& m) {
  SNFResult s;
  s.d = m;
  s.u = IntMat::identity(m.rows);
  s.v = IntMat::identity(m.cols);
  IntMat& w = s.d;
  Worker ops{w, s.u, s.v};
  int n = std::min(m.rows, m.cols);
  for (int t = 0; t < n; ++t) {
    bool exhausted = false;
    while (true) {
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < w.rows; ++i) {
        for (int j = t; j < w.cols; ++j) {
          const Int& e = w.at(i, j);
          if (e == 0) continue;
          Int a = e < 0 ? Int(-e) : e;
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      if (pi != t) ops.swap_rows(pi, t);
      if (pj != t) ops.swap_cols(pj, t);
      bool dirty = false;
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.at(i, t) == 0) continue;
        Int q = w.at(i, t) / w.at(t, t);
        if (q != 0) ops.row_sub(i, t, q);
        if (w.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.at(t, j) == 0) continue;
        Int q = w.at(t, j) / w.at(t, t);
        if (q != 0) ops.col_sub(j, t, q);
        if (w.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot cleared its row and column; enforce divisibility into the
      // remaining block by folding a bad row onto row t and re-reducing.
      const Int& p = w.at(t, t);
      int bad = -1;
      for (int i = t + 1; i < w.rows && bad < 0; ++i) {
        for (int j = t + 1; j < w.cols; ++j) {
          if (w.at(i, j) % p != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      ops.row_add(t, bad);
    }
    if (exhausted) break;
  }
  for (int t = 0; t < n; ++t) {
    if (w.at(t, t) < 0) ops.negate_row(t);
  }
  return s;
}

std::vector<std::vector<Int>> kernel_basis_from_snf(const SNFResult& s) {
  std::vector<std::vector<Int>> basis;
  int n = std::min(s.d.rows, s.d.cols);
  for (int j = 0; j < s.d.cols; ++j) {
    if (j < n && s.d.at(j, j) != 0) continue;
    std::vector<Int> col(s.v.rows);
    for (int i = 0; i < s.v.rows; ++i) col[i] = s.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

IntMat inverse_unimodular(const IntMat& m) {
  if (m.rows != m.cols) {
    throw std::invalid_argument("inverse needs a square matrix");
  }
  SNFResult s = smith_normal_form(m);
  for (int i = 0; i < m.rows; ++i) {
    if (s.d.at(i, i) != 1) {
      throw std::invalid_argument("matrix is not unimodular");
    }
  }
  // u m v = 1 forces m^{-1} = v u.
  return mul(s.v, s.u);
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a,
                                              const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows) {
    throw std::invalid_argument("right hand side has wrong length");
  }
  SNFResult s = smith_normal_form(a);
  std::vector<Int> ub(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.rows; ++j) ub[i] += s.u.at(i, j) * b[j];
  }
  int n = std::min(a.rows, a.cols);
  std::vector<Int> y(a.cols);
  for (int i = 0; i < a.rows; ++i) {
    const Int d = i < n ? s.d.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  std::vector<Int> x(a.cols);
  for (int i = 0; i < a.cols; ++i) {
    for (int j = 0; j < a.cols; ++j) x[i] += s.v.at(i, j) * y[j];
  }
  return x;
}

std::vector<std::vector<Int>> image_lattice_basis(const IntMat& g) {
  SNFResult s = smith_normal_form(g);
  IntMat uinv = inverse_unimodular(s.u);
  std::vector<std::vector<Int>> basis;
  int n = std::min(g.rows, g.cols);
  for (int i = 0; i < n; ++i) {
    if (s.d.at(i, i) == 0) continue;
    std::vector<Int> col(g.rows);
    for (int r = 0; r < g.rows; ++r) col[r] = s.d.at(i, i) * uinv.at(r, i);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace qga
