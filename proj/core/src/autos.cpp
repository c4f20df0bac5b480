#include "qga/autos.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace qga {

namespace {

using Coords = QuotientAlgebra::Coords;
using Mat = std::vector<Coords>;  // column j = image of basis path j

Mat identity_mat(const Field& k, int dim) {
  Mat m(dim, Coords(dim, k.zero()));
  for (int i = 0; i < dim; ++i) m[i][i] = k.one();
  return m;
}

Mat mat_mul(const Field& k, const Mat& x, const Mat& y) {
  int dim = static_cast<int>(x.size());
  Mat out(dim, Coords(dim, k.zero()));
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const Scalar& c = y[j][i];
      if (k.is_zero(c)) continue;
      for (int r = 0; r < dim; ++r) {
        out[j][r] = k.add(out[j][r], k.mul(c, x[i][r]));
      }
    }
  }
  return out;
}

bool mat_is_zero(const Field& k, const Mat& m) {
  for (const Coords& col : m) {
    for (const Scalar& c : col) {
      if (!k.is_zero(c)) return false;
    }
  }
  return true;
}

int mat_rank(const Field& k, Mat m) {
  int dim = m.empty() ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int row = 0; row < dim && rank < static_cast<int>(m.size()); ++row) {
    int pivot = -1;
    for (int j = rank; j < static_cast<int>(m.size()); ++j) {
      if (!k.is_zero(m[j][row])) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Scalar inv = k.inv(m[rank][row]);
    for (int i = 0; i < dim; ++i) m[rank][i] = k.mul(m[rank][i], inv);
    for (int j = 0; j < static_cast<int>(m.size()); ++j) {
      if (j == rank || k.is_zero(m[j][row])) continue;
      Scalar c = m[j][row];
      for (int i = 0; i < dim; ++i) {
        m[j][i] = k.sub(m[j][i], k.mul(c, m[rank][i]));
      }
    }
    ++rank;
  }
  return rank;
}

Coords unit_vec(const Field& k, int dim, int i) {
  Coords c(dim, k.zero());
  c[i] = k.one();
  return c;
}

// Positive-length basis paths parallel to each arrow, in basis order.
std::vector<std::vector<int>> radical_slots(const QuotientAlgebra& a) {
  const Quiver& q = a.quiver();
  std::vector<std::vector<int>> slots(q.arrows.size());
  for (int i = 0; i < a.dimension(); ++i) {
    const Path& b = a.basis()[i];
    if (b.length() == 0) continue;
    for (size_t ar = 0; ar < q.arrows.size(); ++ar) {
      if (b.source() == q.arrows[ar].source &&
          b.target(q) == q.arrows[ar].target) {
        slots[ar].push_back(i);
      }
    }
  }
  return slots;
}

// Multiplicative extension of arrow image coordinates to all basis paths.
Mat extend_matrix(const QuotientAlgebra& a,
                  const std::vector<Coords>& arrow_images) {
  const Field& k = a.field();
  int dim = a.dimension();
  Mat m(dim);
  for (int j = 0; j < dim; ++j) {
    const Path& bj = a.basis()[j];
    if (bj.arrows.empty()) {
      m[j] = unit_vec(k, dim, j);
      continue;
    }
    Path prefix = bj;
    int last = prefix.arrows.back();
    prefix.arrows.pop_back();
    m[j] = a.mul_coords(m[a.basis_index(prefix)], arrow_images[last]);
  }
  return m;
}

// Image of one relation under the extension, as coordinates.
Coords relation_image(const QuotientAlgebra& a,
                      const std::vector<Coords>& arrow_images,
                      const Element& rel) {
  const Field& k = a.field();
  Coords acc(a.dimension(), k.zero());
  for (const auto& [path, c] : rel.terms) {
    Coords cur = arrow_images[path.arrows[0]];
    for (size_t i = 1; i < path.arrows.size(); ++i) {
      cur = a.mul_coords(cur, arrow_images[path.arrows[i]]);
    }
    for (int i = 0; i < a.dimension(); ++i) {
      acc[i] = k.add(acc[i], k.mul(c, cur[i]));
    }
  }
  return acc;
}

bool coords_are_zero(const Field& k, const Coords& c) {
  for (const Scalar& s : c) {
    if (!k.is_zero(s)) return false;
  }
  return true;
}

bool matrix_is_unipotent(const Field& k, Mat m) {
  int dim = static_cast<int>(m.size());
  for (int i = 0; i < dim; ++i) m[i][i] = k.sub(m[i][i], k.one());
  int reps = 1;
  while (reps < dim) {
    m = mat_mul(k, m, m);
    reps *= 2;
  }
  return mat_is_zero(k, m);
}

Int ipow(Int base, size_t exp) {
  Int r = 1;
  for (size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

AutomorphismCandidate candidate_from_images(const QuotientAlgebra& a,
                                            std::vector<Element> images) {
  const Quiver& q = a.quiver();
  if (images.size() != q.arrows.size()) {
    throw std::invalid_argument("one image per arrow required");
  }
  std::vector<Coords> arrow_images;
  for (size_t ar = 0; ar < images.size(); ++ar) {
    for (const auto& [path, c] : images[ar].terms) {
      if (path.length() < 1) {
        throw std::invalid_argument("image of arrow " + q.arrows[ar].name +
                                    " is not in the radical");
      }
      if (path.source() != q.arrows[ar].source ||
          path.target(q) != q.arrows[ar].target) {
        throw std::invalid_argument("image of arrow " + q.arrows[ar].name +
                                    " is not parallel to it");
      }
    }
    arrow_images.push_back(a.coords_of(images[ar]));
  }
  AutomorphismCandidate c;
  c.images = std::move(images);
  c.matrix = extend_matrix(a, arrow_images);
  return c;
}

bool is_homomorphism(const QuotientAlgebra& a,
                     const AutomorphismCandidate& c) {
  std::vector<Coords> arrow_images;
  for (const Element& img : c.images) {
    arrow_images.push_back(a.coords_of(img));
  }
  for (const Element& rel : a.presentation().relations) {
    if (!coords_are_zero(a.field(), relation_image(a, arrow_images, rel))) {
      return false;
    }
  }
  return true;
}

bool is_invertible(const QuotientAlgebra& a, const AutomorphismCandidate& c) {
  return mat_rank(a.field(), c.matrix) == a.dimension();
}

bool is_unipotent(const QuotientAlgebra& a, const AutomorphismCandidate& c) {
  if (!is_homomorphism(a, c) || !is_invertible(a, c)) {
    throw std::invalid_argument("candidate is not an automorphism");
  }
  return matrix_is_unipotent(a.field(), c.matrix);
}

Int enumeration_estimate(const QuotientAlgebra& a) {
  if (!a.field().is_finite()) {
    throw std::invalid_argument("enumeration needs a finite coefficient "
                                "field");
  }
  Int est = 1;
  for (const auto& slot : radical_slots(a)) {
    est *= ipow(Int(a.field().order()), slot.size());
  }
  return est;
}

EnumerationResult enumerate_automorphisms(const QuotientAlgebra& a,
                                          const EnumerationOptions& opt) {
  const Field& k = a.field();
  Int estimate = enumeration_estimate(a);
  if (estimate > opt.cap) throw SearchSpaceExceeded(estimate, opt.cap);

  const Quiver& q = a.quiver();
  int narrows = static_cast<int>(q.arrows.size());
  int dim = a.dimension();
  int order = k.order();
  std::vector<std::vector<int>> slots = radical_slots(a);

  // A relation becomes checkable once its largest arrow has an image.
  std::vector<std::vector<const Element*>> checkable(std::max(narrows, 1));
  for (const Element& rel : a.presentation().relations) {
    int max_arrow = 0;
    for (const auto& [path, c] : rel.terms) {
      for (int ar : path.arrows) max_arrow = std::max(max_arrow, ar);
    }
    checkable[max_arrow].push_back(&rel);
  }

  struct JobResult {
    std::vector<AutomorphismCandidate> automorphisms;
    std::vector<bool> unipotent;
    Int searched = 0;
    std::exception_ptr error;
  };

  Int first_total = narrows > 0 ? ipow(Int(order), slots[0].size()) : Int(1);
  int jobs = std::max(opt.jobs, 1);
  if (Int(jobs) > first_total) {
    jobs = first_total.convert_to<int>();
  }
  std::vector<JobResult> results(jobs);

  auto worker = [&](int job, Int lo, Int hi) {
    JobResult& out = results[job];
    try {
      std::vector<Coords> arrow_images(narrows, Coords(dim, k.zero()));
      // Digits are big-endian over the slots, so counting is tuple order.
      auto run = [&](auto&& self, int ar) -> void {
        if (ar == narrows) {
          out.searched += 1;
          Mat m = extend_matrix(a, arrow_images);
          if (mat_rank(k, m) != dim) return;
          AutomorphismCandidate c;
          for (int i = 0; i < narrows; ++i) {
            c.images.push_back(a.element_of(arrow_images[i]));
          }
          c.matrix = m;
          out.unipotent.push_back(matrix_is_unipotent(k, c.matrix));
          out.automorphisms.push_back(std::move(c));
          return;
        }
        int width = static_cast<int>(slots[ar].size());
        std::vector<int> digits(width, 0);
        Int index = 0;
        if (ar == 0 && lo > 0) {
          index = lo;
          Int rest = lo;
          for (int d = width - 1; d >= 0; --d) {
            digits[d] = Int(rest % order).convert_to<int>();
            rest /= order;
          }
        }
        Int bound = ar == 0 ? hi : ipow(Int(order), width);
        while (index < bound) {
          Coords& img = arrow_images[ar];
          std::fill(img.begin(), img.end(), k.zero());
          for (int d = 0; d < width; ++d) {
            if (digits[d] != 0) img[slots[ar][d]] = k.nth(digits[d]);
          }
          bool ok = true;
          for (const Element* rel : checkable[ar]) {
            if (!coords_are_zero(k, relation_image(a, arrow_images, *rel))) {
              ok = false;
              break;
            }
          }
          if (ok) self(self, ar + 1);
          index += 1;
          for (int d = width - 1; d >= 0; --d) {
            if (++digits[d] < order) break;
            digits[d] = 0;
          }
        }
      };
      run(run, 0);
    } catch (...) {
      out.error = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0, 0, first_total);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
      Int lo = first_total * j / jobs;
      Int hi = first_total * (j + 1) / jobs;
      threads.emplace_back(worker, j, lo, hi);
    }
    for (auto& t : threads) t.join();
  }

  EnumerationResult result;
  for (JobResult& jr : results) {
    if (jr.error) std::rethrow_exception(jr.error);
    result.report.searched += jr.searched;
    for (size_t i = 0; i < jr.automorphisms.size(); ++i) {
      if (!jr.unipotent[i]) {
        result.report.all_unipotent = false;
        result.report.non_unipotent.push_back(
            static_cast<int>(result.automorphisms.size()));
      }
      result.automorphisms.push_back(std::move(jr.automorphisms[i]));
      ++result.report.count;
    }
  }
  return result;
}

AutomorphismCandidate inner_automorphism(const QuotientAlgebra& a,
                                         const Element& u) {
  const Field& k = a.field();
  int dim = a.dimension();
  Coords cu = a.coords_of(u);

  // Solve u * x = 1 by eliminating the left multiplication matrix.
  Mat lmul(dim);
  for (int j = 0; j < dim; ++j) {
    lmul[j] = a.mul_coords(cu, unit_vec(k, dim, j));
  }
  Coords one(dim, k.zero());
  for (int i = 0; i < dim; ++i) {
    if (a.basis()[i].length() == 0) one[i] = k.one();
  }
  std::vector<Coords> rows(dim, Coords(dim + 1, k.zero()));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) rows[i][j] = lmul[j][i];
    rows[i][dim] = one[i];
  }
  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pivot = -1;
    for (int i = rank; i < dim; ++i) {
      if (!k.is_zero(rows[i][col])) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = k.inv(rows[rank][col]);
    for (int j = col; j <= dim; ++j) {
      rows[rank][j] = k.mul(rows[rank][j], inv);
    }
    for (int i = 0; i < dim; ++i) {
      if (i == rank || k.is_zero(rows[i][col])) continue;
      Scalar c = rows[i][col];
      for (int j = col; j <= dim; ++j) {
        rows[i][j] = k.sub(rows[i][j], k.mul(c, rows[rank][j]));
      }
    }
    ++rank;
  }
  if (rank != dim) {
    throw std::invalid_argument("element is not invertible");
  }
  Coords uinv(dim, k.zero());
  for (int i = 0; i < dim; ++i) {
    int lead = 0;
    while (lead < dim && k.is_zero(rows[i][lead])) ++lead;
    if (lead < dim) uinv[lead] = rows[i][dim];
  }

  std::vector<Element> images;
  for (const Arrow& ar : a.quiver().arrows) {
    Path p;
    p.base_vertex = ar.source;
    p.arrows = {a.quiver().arrow_index(ar.name)};
    Coords arrow_c = unit_vec(k, dim, a.basis_index(p));
    Coords img = a.mul_coords(a.mul_coords(cu, arrow_c), uinv);
    images.push_back(a.element_of(img));
  }
  AutomorphismCandidate c = candidate_from_images(a, std::move(images));
  if (!is_homomorphism(a, c) || !is_invertible(a, c)) {
    throw std::invalid_argument("conjugate does not extend to an "
                                "automorphism");
  }
  return c;
}

}  // namespace qga
