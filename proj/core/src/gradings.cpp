#include "qga/gradings.hpp"

#include <algorithm>

namespace qga {

namespace {

std::vector<Int> arrow_counts(const Quiver& q, const Path& p) {
  std::vector<Int> counts(q.arrows.size());
  for (int a : p.arrows) ++counts[a];
  return counts;
}

}  // namespace

HomogeneityMatrix homogeneity_matrix(const Presentation& p) {
  int narrows = static_cast<int>(p.quiver.arrows.size());
  std::vector<std::vector<Int>> rows;
  std::vector<std::pair<int, int>> labels;
  for (size_t i = 0; i < p.relations.size(); ++i) {
    const Element& rel = p.relations[i];
    auto it = rel.terms.begin();
    std::vector<Int> first = arrow_counts(p.quiver, it->first);
    int t = 1;
    for (++it; it != rel.terms.end(); ++it, ++t) {
      std::vector<Int> row = arrow_counts(p.quiver, it->first);
      for (int a = 0; a < narrows; ++a) row[a] = first[a] - row[a];
      rows.push_back(std::move(row));
      labels.emplace_back(static_cast<int>(i), t);
    }
  }
  HomogeneityMatrix h;
  h.mat = IntMat(static_cast<int>(rows.size()), narrows);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int a = 0; a < narrows; ++a) {
      h.mat.at(static_cast<int>(r), a) = rows[r][a];
    }
  }
  h.row_labels = std::move(labels);
  return h;
}

GradingLattice grading_lattice(const Presentation& p) {
  validate_presentation(p);
  int narrows = static_cast<int>(p.quiver.arrows.size());
  int nverts = static_cast<int>(p.quiver.vertices.size());
  GradingLattice lat;

  HomogeneityMatrix h = homogeneity_matrix(p);
  SNFResult snf = smith_normal_form(h.mat);
  for (auto& v : kernel_basis_from_snf(snf)) {
    lat.kernel_basis.push_back(DegreeAssignment(v.begin(), v.end()));
  }
  lat.rank = static_cast<int>(lat.kernel_basis.size());

  IntMat incidence(narrows, nverts);
  for (int a = 0; a < narrows; ++a) {
    incidence.at(a, p.quiver.arrows[a].target) += 1;
    incidence.at(a, p.quiver.arrows[a].source) -= 1;
  }
  for (auto& v : image_lattice_basis(incidence)) {
    lat.shift_basis.push_back(DegreeAssignment(v.begin(), v.end()));
  }
  for (const DegreeAssignment& s : lat.shift_basis) {
    for (int r = 0; r < h.mat.rows; ++r) {
      Int dot = 0;
      for (int a = 0; a < narrows; ++a) dot += h.mat.at(r, a) * s[a];
      if (dot != 0) {
        throw std::logic_error("internal consistency: shift outside the "
                               "grading lattice");
      }
    }
  }

  // Quotient kernel/shift: rewrite the shift basis in kernel coordinates
  // and read the invariant factors off that matrix.
  IntMat kernel_cols(narrows, lat.rank);
  for (int j = 0; j < lat.rank; ++j) {
    for (int a = 0; a < narrows; ++a) {
      kernel_cols.at(a, j) = lat.kernel_basis[j][a];
    }
  }
  IntMat rel_mat(lat.rank, static_cast<int>(lat.shift_basis.size()));
  for (size_t j = 0; j < lat.shift_basis.size(); ++j) {
    std::vector<Int> rhs(lat.shift_basis[j].begin(), lat.shift_basis[j].end());
    auto coords = solve_integer(kernel_cols, rhs);
    if (!coords) {
      throw std::logic_error("internal consistency: shift outside the "
                             "grading lattice");
    }
    for (int i = 0; i < lat.rank; ++i) {
      rel_mat.at(i, static_cast<int>(j)) = (*coords)[i];
    }
  }
  SNFResult rel_snf = smith_normal_form(rel_mat);
  int rel_rank = 0;
  for (int i = 0; i < std::min(rel_mat.rows, rel_mat.cols); ++i) {
    const Int& d = rel_snf.d.at(i, i);
    if (d == 0) continue;
    ++rel_rank;
    if (d > 1) lat.class_invariants.torsion.push_back(d);
  }
  lat.class_invariants.rank = lat.rank - rel_rank;
  return lat;
}

DegreeAssignment apply_shift(const Quiver& q, const DegreeAssignment& g,
                             const std::vector<Int>& vertex_shift) {
  if (g.size() != q.arrows.size() || vertex_shift.size() != q.vertices.size()) {
    throw std::invalid_argument("degree or shift vector has wrong length");
  }
  DegreeAssignment out = g;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    out[a] += vertex_shift[q.arrows[a].target] -
              vertex_shift[q.arrows[a].source];
  }
  return out;
}

Int path_degree(const Path& p, const DegreeAssignment& g) {
  Int d = 0;
  for (int a : p.arrows) {
    if (a < 0 || a >= static_cast<int>(g.size())) {
      throw std::invalid_argument("arrow index out of range");
    }
    d += g[a];
  }
  return d;
}

bool is_relation_homogeneous(const Element& rel, const DegreeAssignment& g) {
  if (rel.is_zero()) return true;
  auto it = rel.terms.begin();
  Int d = path_degree(it->first, g);
  for (++it; it != rel.terms.end(); ++it) {
    if (path_degree(it->first, g) != d) return false;
  }
  return true;
}

bool ideal_is_homogeneous(const QuotientAlgebra& a, const DegreeAssignment& g) {
  for (const Element& rel : a.presentation().relations) {
    std::map<Int, Element> components;
    for (const auto& [path, c] : rel.terms) {
      components[path_degree(path, g)].add_term(a.field(), path, c);
    }
    for (const auto& [d, component] : components) {
      if (!a.reduces_to_zero(component)) return false;
    }
  }
  return true;
}

GradedStructure grade_algebra(const QuotientAlgebra& a,
                              const DegreeAssignment& g) {
  GradedStructure s;
  int dim = a.dimension();
  for (const Path& b : a.basis()) {
    Int d = path_degree(b, g);
    ++s.graded_dims[d];
    s.degrees.push_back(std::move(d));
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Int expected = s.degrees[i] + s.degrees[j];
      for (const auto& [path, c] : a.structure_constant(i, j).terms) {
        int k = a.basis_index(path);
        if (s.degrees[k] != expected) {
          throw GradingViolation(
              "structure constant breaks the grading at basis pair (" +
                  std::to_string(i) + ", " + std::to_string(j) + ")",
              i, j, k);
        }
      }
    }
  }
  return s;
}

std::string verdict_name(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::rigid_arrow_gradings:
      return "rigid-arrow-gradings";
    case RigidityVerdict::nontrivial_grading_exists:
      return "nontrivial-grading-exists";
    case RigidityVerdict::all_gradings_shift_trivial:
      return "all-gradings-shift-trivial";
  }
  throw std::logic_error("bad verdict");
}

RigidityReport rigidity_from_lattice(const Presentation& p,
                                     const GradingLattice& lat) {
  RigidityReport r;
  r.connected = is_connected(p.quiver);
  r.one_vertex = p.quiver.vertices.size() == 1;
  r.lattice_rank = lat.rank;
  r.class_rank = lat.class_invariants.rank;
  if (lat.rank == 0) {
    r.verdict = RigidityVerdict::rigid_arrow_gradings;
    return r;
  }
  if (lat.class_invariants.rank == 0 && lat.class_invariants.torsion.empty()) {
    r.verdict = RigidityVerdict::all_gradings_shift_trivial;
    return r;
  }
  r.verdict = RigidityVerdict::nontrivial_grading_exists;
  int narrows = static_cast<int>(p.quiver.arrows.size());
  IntMat shift_cols(narrows, static_cast<int>(lat.shift_basis.size()));
  for (size_t j = 0; j < lat.shift_basis.size(); ++j) {
    for (int i = 0; i < narrows; ++i) {
      shift_cols.at(i, static_cast<int>(j)) = lat.shift_basis[j][i];
    }
  }
  for (const DegreeAssignment& v : lat.kernel_basis) {
    std::vector<Int> rhs(v.begin(), v.end());
    if (!solve_integer(shift_cols, rhs)) {
      r.witness = v;
      break;
    }
  }
  if (!r.witness) {
    throw std::logic_error("internal consistency: no witness although the "
                           "class group is nontrivial");
  }
  return r;
}

RigidityReport rigidity_verdict(const Presentation& p,
                                const QuotientAlgebra& a) {
  (void)a;  // the argument certifies that the quotient exists
  return rigidity_from_lattice(p, grading_lattice(p));
}

RigidityReport rigidity_verdict(const Presentation& p, int max_len) {
  QuotientAlgebra a = build_quotient(p, max_len);
  return rigidity_verdict(p, a);
}

}  // namespace qga
