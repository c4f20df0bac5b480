// Integer gradings of a presented algebra by arrow degrees.  A degree
// assignment grades the quotient exactly when every relation is
// homogeneous, so the admissible assignments form the integer kernel of
// the homogeneity matrix.  Regrading along a vertex shift d replaces
// g(a) by g(a) + d(target a) - d(source a); the shift sublattice is the
// image of that map and is always contained in the kernel.  Classes of
// gradings up to shift are read off the quotient lattice kernel/shift.

#pragma once

#include "qga/algebra.hpp"
#include "qga/snf.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qga {

// Degree per arrow, in declaration order.
using DegreeAssignment = std::vector<Int>;

struct HomogeneityMatrix {
  IntMat mat;  // one row per (relation, term >= 2) pair, one column per arrow
  std::vector<std::pair<int, int>> row_labels;  // (relation, term) indices
};

// Row (i, t), both 0-based: arrow counts of the first term of relation i
// minus those of its term t, terms in length-lex order, so t >= 1.
HomogeneityMatrix homogeneity_matrix(const Presentation& p);

struct ClassInvariants {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1

  bool operator==(const ClassInvariants&) const = default;
};

struct GradingLattice {
  int rank = 0;
  std::vector<DegreeAssignment> kernel_basis;
  std::vector<DegreeAssignment> shift_basis;
  ClassInvariants class_invariants;  // of kernel / shift
};

GradingLattice grading_lattice(const Presentation& p);

DegreeAssignment apply_shift(const Quiver& q, const DegreeAssignment& g,
                             const std::vector<Int>& vertex_shift);

Int path_degree(const Path& p, const DegreeAssignment& g);

bool is_relation_homogeneous(const Element& rel, const DegreeAssignment& g);

// Splits each relation into degree components and reduces each component;
// true when all components vanish in the quotient.
bool ideal_is_homogeneous(const QuotientAlgebra& a, const DegreeAssignment& g);

struct GradingViolation : std::runtime_error {
  int i, j, k;  // offending structure constant b_i b_j -> b_k
  GradingViolation(const std::string& what, int i_, int j_, int k_)
      : std::runtime_error(what), i(i_), j(j_), k(k_) {}
};

struct GradedStructure {
  std::vector<Int> degrees;     // per basis path
  std::map<Int, int> graded_dims;
};

// Degrees of the basis paths plus graded dimensions; verifies every
// structure constant respects the degrees and throws GradingViolation
// otherwise (the precondition is that g grades the ideal).
GradedStructure grade_algebra(const QuotientAlgebra& a,
                              const DegreeAssignment& g);

enum class RigidityVerdict {
  rigid_arrow_gradings,
  nontrivial_grading_exists,
  all_gradings_shift_trivial,
};

std::string verdict_name(RigidityVerdict v);

struct RigidityReport {
  bool connected = false;
  bool one_vertex = false;
  int lattice_rank = 0;
  int class_rank = 0;
  RigidityVerdict verdict = RigidityVerdict::rigid_arrow_gradings;
  // First kernel basis vector outside the shift sublattice, present
  // exactly when the verdict is nontrivial_grading_exists.
  std::optional<DegreeAssignment> witness;
};

// The verdict is a function of the lattice alone; this is the workhorse
// shared by both rigidity_verdict overloads and by callers that already
// hold the lattice.
RigidityReport rigidity_from_lattice(const Presentation& p,
                                     const GradingLattice& lat);

RigidityReport rigidity_verdict(const Presentation& p,
                                const QuotientAlgebra& a);
// Convenience overload that builds the quotient (and thereby certifies
// finite dimension) first.
RigidityReport rigidity_verdict(const Presentation& p, int max_len = 50);

}  // namespace qga
