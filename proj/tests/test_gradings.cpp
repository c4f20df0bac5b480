#include "qga/gradings.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace qga;
using qga::testing::small_fixtures;

namespace {

std::vector<Int> degrees(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

Int dot_row(const IntMat& m, int row, const DegreeAssignment& g) {
  Int acc = 0;
  for (int j = 0; j < m.cols; ++j) acc += m.at(row, j) * g[static_cast<size_t>(j)];
  return acc;
}

}  // namespace

TEST_CASE("homogeneity rows for the rigid two-loop family") {
  // Relations of q1e(r): aa - (ba)^{r-1}b, bb - (ab)^{r-1}a,
  // (ab)^r - (ba)^r, (ab)^r a.  The rows compare term arrow counts.
  for (long long r : {2, 3, 4}) {
    CAPTURE(r);
    Presentation p = builtin("q1e", {r});
    HomogeneityMatrix h = homogeneity_matrix(p);
    REQUIRE(h.mat.cols == 2);
    REQUIRE(h.mat.rows == 3);
    // Row count: relations 0,1,2 are binomials, relation 3 is a monomial.
    CHECK(h.row_labels ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 1}});
    // aa vs (ba)^{r-1}b: counts (2,0) - (r-1, r) = (3-r, -r).
    CHECK(h.mat.at(0, 0) == 3 - r);
    CHECK(h.mat.at(0, 1) == -r);
    // bb vs (ab)^{r-1}a: mirrored.
    CHECK(h.mat.at(1, 0) == -r);
    CHECK(h.mat.at(1, 1) == 3 - r);
    // (ab)^r vs (ba)^r: equal counts.
    CHECK(h.mat.at(2, 0) == 0);
    CHECK(h.mat.at(2, 1) == 0);
  }
}

TEST_CASE("rigidity of the q1e family") {
  for (long long r : {2, 3, 4}) {
    CAPTURE(r);
    Presentation p = builtin("q1e", {r});
    GradingLattice lat = grading_lattice(p);
    CHECK(lat.rank == 0);
    CHECK(lat.kernel_basis.empty());
    CHECK(lat.class_invariants.rank == 0);
    CHECK(lat.class_invariants.torsion.empty());
    RigidityReport rep = rigidity_from_lattice(p, lat);
    CHECK(rep.verdict == RigidityVerdict::rigid_arrow_gradings);
    CHECK(rep.lattice_rank == 0);
    CHECK(rep.class_rank == 0);
    CHECK(!rep.witness.has_value());
    CHECK(rep.connected);
    CHECK(rep.one_vertex);
  }
}

TEST_CASE("two independent gradings survive on the free-ish two-loop family") {
  for (long long r : {1, 2, 3}) {
    CAPTURE(r);
    Presentation p = builtin("two_loop", {r});
    GradingLattice lat = grading_lattice(p);
    CHECK(lat.rank == 2);
    CHECK(lat.kernel_basis.size() == 2);
    // One vertex: no nonzero shifts exist, classes = kernel.
    CHECK(lat.shift_basis.empty());
    CHECK(lat.class_invariants.rank == 2);
    CHECK(lat.class_invariants.torsion.empty());
    RigidityReport rep = rigidity_from_lattice(p, lat);
    CHECK(rep.verdict == RigidityVerdict::nontrivial_grading_exists);
    REQUIRE(rep.witness.has_value());
    // The witness is a kernel vector, hence grades every relation.
    for (const auto& rel : p.relations) {
      CHECK(is_relation_homogeneous(rel, *rep.witness));
    }
  }
}

TEST_CASE("one-variable truncation admits the evident grading") {
  Presentation p = builtin("truncated_poly", {2});
  HomogeneityMatrix h = homogeneity_matrix(p);
  // x^2 is a monomial relation: no comparison rows at all.
  CHECK(h.mat.rows == 0);
  CHECK(h.mat.cols == 1);
  GradingLattice lat = grading_lattice(p);
  CHECK(lat.rank == 1);
  REQUIRE(lat.kernel_basis.size() == 1);
  RigidityReport rep = rigidity_from_lattice(p, lat);
  CHECK(rep.verdict == RigidityVerdict::nontrivial_grading_exists);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->size() == 1);
  CHECK((*rep.witness)[0] != 0);
}

TEST_CASE("path grading on a line quiver is shift-trivial") {
  Presentation p = builtin("linear_an", {2});
  GradingLattice lat = grading_lattice(p);
  CHECK(lat.rank == 1);
  CHECK(lat.class_invariants.rank == 0);
  CHECK(lat.class_invariants.torsion.empty());
  RigidityReport rep = rigidity_from_lattice(p, lat);
  CHECK(rep.verdict == RigidityVerdict::all_gradings_shift_trivial);
  CHECK(!rep.witness.has_value());
  CHECK(rep.connected);
  CHECK(!rep.one_vertex);

  // Regrading the zero assignment by the vertex shift (0, 1) puts degree 1
  // on the single arrow.
  DegreeAssignment zero{Int(0)};
  DegreeAssignment shifted =
      apply_shift(p.quiver, zero, degrees({0, 1}));
  REQUIRE(shifted.size() == 1);
  CHECK(shifted[0] == 1);
}

TEST_CASE("apply_shift adds target minus source") {
  Presentation p = builtin("linear_an", {3});  // path quiver on 3 vertices
  DegreeAssignment g{Int(5), Int(-2)};
  DegreeAssignment s = apply_shift(p.quiver, g, degrees({1, 4, 9}));
  // Arrow i runs i -> i+1; degree gains d[i+1] - d[i].
  CHECK(s == degrees({5 + 4 - 1, -2 + 9 - 4}));
}

TEST_CASE("kernel vectors are exactly the graded assignments") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    HomogeneityMatrix h = homogeneity_matrix(f.pres);
    GradingLattice lat = grading_lattice(f.pres);
    for (const auto& g : lat.kernel_basis) {
      for (int r = 0; r < h.mat.rows; ++r) CHECK(dot_row(h.mat, r, g) == 0);
      for (const auto& rel : f.pres.relations) {
        CHECK(is_relation_homogeneous(rel, g));
      }
    }
    // Shift vectors lie inside the kernel: shifting the zero assignment
    // grades every relation too.
    for (const auto& s : lat.shift_basis) {
      for (const auto& rel : f.pres.relations) {
        CHECK(is_relation_homogeneous(rel, s));
      }
    }
    // And the kernel is shift-invariant as a set: g + s stays a kernel
    // member for every pair.
    for (const auto& g : lat.kernel_basis) {
      for (const auto& s : lat.shift_basis) {
        DegreeAssignment sum = g;
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += s[i];
        for (int r = 0; r < h.mat.rows; ++r) {
          CHECK(dot_row(h.mat, r, sum) == 0);
        }
      }
    }
  }
}

TEST_CASE("path_degree sums arrow degrees along the word") {
  Presentation p = builtin("q1e", {2});
  DegreeAssignment g = degrees({3, 5});
  Path w;
  w.base_vertex = 0;
  w.arrows = {0, 1, 0};  // a b a
  CHECK(path_degree(w, g) == 11);
  CHECK(path_degree(Path::trivial(0), g) == 0);
}

TEST_CASE("non-kernel assignments are flagged") {
  Presentation p = builtin("q1e", {2});
  // aa - bab cannot be homogeneous under g = (1, 1): degrees 2 vs 3.
  DegreeAssignment g = degrees({1, 1});
  CHECK(!is_relation_homogeneous(p.relations[0], g));
  QuotientAlgebra a = build_quotient(p);
  CHECK(ideal_is_homogeneous(a, DegreeAssignment{Int(0), Int(0)}));
  CHECK(!ideal_is_homogeneous(a, g));
  CHECK_THROWS_AS((void)grade_algebra(a, g), GradingViolation);
  try {
    (void)grade_algebra(a, g);
  } catch (const GradingViolation& v) {
    CHECK(v.i >= 0);
    CHECK(v.j >= 0);
    CHECK(v.k >= 0);
  }
}

TEST_CASE("graded structure of a surviving grading") {
  Presentation p = builtin("two_loop", {2});
  QuotientAlgebra a = build_quotient(p);
  DegreeAssignment g = degrees({1, 0});
  REQUIRE(ideal_is_homogeneous(a, g));
  GradedStructure gs = grade_algebra(a, g);
  REQUIRE(gs.degrees.size() == static_cast<size_t>(a.dimension()));
  int total = 0;
  for (const auto& [deg, count] : gs.graded_dims) total += count;
  CHECK(total == a.dimension());
  // Degree of each basis path is its count of the first arrow.
  for (int i = 0; i < a.dimension(); ++i) {
    Int expect = 0;
    for (int arr : a.basis()[static_cast<size_t>(i)].arrows) {
      if (arr == 0) expect += 1;
    }
    CHECK(gs.degrees[static_cast<size_t>(i)] == expect);
  }
}

TEST_CASE("every kernel basis vector grades every fixture cleanly") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    GradingLattice lat = grading_lattice(f.pres);
    for (const auto& g : lat.kernel_basis) {
      for (const auto& rel : f.pres.relations) {
        CHECK(is_relation_homogeneous(rel, g));
      }
      CHECK(ideal_is_homogeneous(a, g));
      GradedStructure gs = grade_algebra(a, g);
      int total = 0;
      for (const auto& [deg, count] : gs.graded_dims) {
        CHECK(count > 0);
        total += count;
      }
      CHECK(total == a.dimension());
    }
  }
}

TEST_CASE("class torsion is empty across the corpus") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    GradingLattice lat = grading_lattice(f.pres);
    CHECK(lat.class_invariants.torsion.empty());
    CHECK(lat.class_invariants.rank ==
          lat.rank - static_cast<int>(lat.shift_basis.size()));
  }
}

TEST_CASE("verdict names are stable strings") {
  CHECK(verdict_name(RigidityVerdict::rigid_arrow_gradings) ==
        "rigid-arrow-gradings");
  CHECK(verdict_name(RigidityVerdict::nontrivial_grading_exists) ==
        "nontrivial-grading-exists");
  CHECK(verdict_name(RigidityVerdict::all_gradings_shift_trivial) ==
        "all-gradings-shift-trivial");
}

TEST_CASE("witness of the two-loop family is the first kernel vector") {
  Presentation p = builtin("two_loop", {2});
  RigidityReport rep = rigidity_verdict(p);
  REQUIRE(rep.witness.has_value());
  GradingLattice lat = grading_lattice(p);
  REQUIRE(!lat.kernel_basis.empty());
  CHECK(*rep.witness == lat.kernel_basis[0]);
}

TEST_CASE("verdict overloads agree") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    RigidityReport r1 = rigidity_verdict(f.pres, a);
    RigidityReport r2 = rigidity_verdict(f.pres);
    RigidityReport r3 = rigidity_from_lattice(f.pres, grading_lattice(f.pres));
    CHECK(r1.verdict == r2.verdict);
    CHECK(r2.verdict == r3.verdict);
    CHECK(r1.lattice_rank == r3.lattice_rank);
    CHECK(r1.class_rank == r3.class_rank);
    CHECK(r1.witness == r3.witness);
  }
}
