#include "qga/snf.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace qga;

namespace {

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  IntMat m(dim(rng), dim(rng));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
  }
  return m;
}

int snf_rank(const SNFResult& s) {
  int limit = std::min(s.d.rows, s.d.cols);
  int r = 0;
  while (r < limit && s.d.at(r, r) != 0) ++r;
  return r;
}

bool is_unimodular(const IntMat& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

// Determinant by cofactor expansion, the slow independent way.
Int cofactor_det(const IntMat& m) {
  REQUIRE(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int total = 0;
  for (int j = 0; j < n; ++j) {
    IntMat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Int term = m.at(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("hand-checked smith forms") {
  SNFResult s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(s.d.at(0, 0) == 2);
  CHECK(s.d.at(1, 1) == 4);

  s = smith_normal_form(from_rows({{1, -2}, {-2, 1}, {0, 0}}));
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 3);
  CHECK(snf_rank(s) == 2);
  CHECK(kernel_basis_from_snf(s).empty());

  s = smith_normal_form(from_rows({{0, 0}}));
  CHECK(snf_rank(s) == 0);
  CHECK(kernel_basis_from_snf(s).size() == 2);

  // 1x1 zero and empty matrices.
  s = smith_normal_form(IntMat(0, 3));
  CHECK(snf_rank(s) == 0);
  CHECK(kernel_basis_from_snf(s).size() == 3);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240816);
  for (int trial = 0; trial < 250; ++trial) {
    IntMat m = random_matrix(rng, 6, 9);
    CAPTURE(trial);
    SNFResult s = smith_normal_form(m);

    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    IntMat umv = mul(mul(s.u, m), s.v);
    for (int i = 0; i < umv.rows; ++i) {
      for (int j = 0; j < umv.cols; ++j) {
        CHECK(umv.at(i, j) == s.d.at(i, j));
      }
    }
    int limit = std::min(m.rows, m.cols);
    for (int i = 0; i < limit; ++i) {
      CHECK(s.d.at(i, i) >= 0);
      if (i + 1 < limit && s.d.at(i + 1, i + 1) != 0) {
        CHECK(s.d.at(i, i) != 0);
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
      }
    }

    // Kernel vectors actually lie in the kernel and there are cols - rank
    // of them.
    auto kernel = kernel_basis_from_snf(s);
    CHECK(static_cast<int>(kernel.size()) == m.cols - snf_rank(s));
    for (const auto& v : kernel) {
      for (int i = 0; i < m.rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("solve_integer finds exact solutions and rejects non-members") {
  std::mt19937 rng(7);
  int solved = 0, rejected = 0;
  for (int trial = 0; trial < 250; ++trial) {
    IntMat m = random_matrix(rng, 5, 6);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<Int> x(m.cols);
    for (auto& xi : x) xi = entry(rng);
    std::vector<Int> b(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) b[i] += m.at(i, j) * x[j];
    }
    auto sol = solve_integer(m, b);
    REQUIRE(sol.has_value());
    ++solved;
    for (int i = 0; i < m.rows; ++i) {
      Int acc = 0;
      for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * (*sol)[j];
      CHECK(acc == b[i]);
    }

    // A right-hand side off the image lattice must be rejected; verify the
    // rejection with a short brute-force search.
    std::vector<Int> off = b;
    off[0] += 1;
    auto maybe = solve_integer(m, off);
    if (maybe) {
      for (int i = 0; i < m.rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * (*maybe)[j];
        CHECK(acc == off[i]);
      }
    } else {
      ++rejected;
    }
  }
  CHECK(solved == 250);
  CHECK(rejected > 0);
}

TEST_CASE("inverse_unimodular inverts constructed unimodular matrices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    int n = dim(rng);
    // Random elementary row operations keep the determinant at +-1.
    IntMat m = IntMat::identity(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> shear(-3, 3);
    std::uniform_int_distribution<int> op(0, 2);
    for (int step = 0; step < 12; ++step) {
      int i = pick(rng), j = pick(rng);
      switch (op(rng)) {
        case 0: {  // row_i += c * row_j
          if (i == j) break;
          Int c = shear(rng);
          for (int k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
          break;
        }
        case 1:  // swap rows
          for (int k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
          break;
        case 2:  // negate a row
          for (int k = 0; k < n; ++k) m.at(i, k) = -m.at(i, k);
          break;
      }
    }
    Int d = det(m);
    REQUIRE((d == 1 || d == -1));
    IntMat inv = inverse_unimodular(m);
    IntMat prod = mul(m, inv);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(prod.at(i, j) == (i == j ? 1 : 0));
      }
    }
  }

  // Non-unimodular input is rejected.
  CHECK_THROWS_AS((void)inverse_unimodular(from_rows({{2, 0}, {0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)inverse_unimodular(from_rows({{0, 0}, {0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("image lattice basis spans exactly the column image") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat m = random_matrix(rng, 4, 4);
    auto image = image_lattice_basis(m);
    // Each image basis vector is hit by some integer preimage.
    IntMat cols = m;
    for (const auto& g : image) {
      CHECK(solve_integer(cols, g).has_value());
    }
    // Each matrix column lies in the lattice spanned by the image basis.
    if (image.empty()) continue;
    IntMat span(m.rows, static_cast<int>(image.size()));
    for (size_t j = 0; j < image.size(); ++j) {
      for (int i = 0; i < m.rows; ++i) span.at(i, static_cast<int>(j)) = image[j][i];
    }
    for (int c = 0; c < m.cols; ++c) {
      std::vector<Int> col(m.rows);
      for (int i = 0; i < m.rows; ++i) col[i] = m.at(i, c);
      CHECK(solve_integer(span, col).has_value());
    }
  }
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    int n = dim(rng);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    }
    CHECK(det(m) == cofactor_det(m));
  }
}

TEST_CASE("kernel matches a brute-force box search") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 3);
    int rows = dim(rng), cols = dim(rng);
    std::uniform_int_distribution<int> entry(-4, 4);
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    }
    auto kernel = kernel_basis_from_snf(smith_normal_form(m));
    IntMat kmat(cols, static_cast<int>(kernel.size()));
    for (size_t j = 0; j < kernel.size(); ++j) {
      for (int i = 0; i < cols; ++i) kmat.at(i, static_cast<int>(j)) = kernel[j][i];
    }
    // Every box vector annihilated by m must be an integer combination of
    // the kernel basis, and vice versa nothing outside may be claimed.
    std::vector<int> x(cols, -2);
    while (true) {
      bool in_kernel = true;
      for (int i = 0; i < rows && in_kernel; ++i) {
        long long acc = 0;
        for (int j = 0; j < cols; ++j) {
          acc += static_cast<long long>(m.at(i, j).convert_to<long long>()) * x[j];
        }
        in_kernel = acc == 0;
      }
      std::vector<Int> xv(x.begin(), x.end());
      bool spanned = solve_integer(kmat, xv).has_value();
      CHECK(in_kernel == spanned);
      int pos = 0;
      while (pos < cols && x[pos] == 2) x[pos++] = -2;
      if (pos == cols) break;
      ++x[pos];
    }
  }
}
