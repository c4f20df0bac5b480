#include "qga/algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ideal_membership.hpp"
#include "rewrite_oracle.hpp"

using namespace qga;
using qga::testing::Fixture;
using qga::testing::RewriteOracle;
using qga::testing::bounded_ideal_member;
using qga::testing::small_fixtures;

namespace {

Element mono(const Field& k, const Path& p) {
  Element x;
  x.add_term(k, p, k.one());
  return x;
}

Element subtract(const Field& k, const Element& x, const Element& y) {
  return add(k, x, scale(k, k.neg(k.one()), y));
}

std::set<std::string> path_strings(const std::vector<Path>& ps,
                                   const Presentation& pres) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(path_to_string(pres.quiver, p));
  return out;
}

std::string render(const Presentation& pres, const Element& x) {
  return element_to_string(pres.quiver, pres.field, x);
}

}  // namespace

TEST_CASE("quotient dimensions across all fixtures") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    CHECK(a.dimension() == f.expected_dim);
    CHECK(a.certificate().verified_closure);
    CHECK(a.certificate().stabilized_at >= 2);
  }
}

TEST_CASE("two-vertex family dimensions grow linearly in the parameter") {
  for (long long r : {2, 3, 4}) {
    QuotientAlgebra a = build_quotient(builtin("q1e", {r}));
    CHECK(a.dimension() == 4 * r);
  }
}

TEST_CASE("basis equals the irreducible words of the rewriting oracle") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    RewriteOracle oracle(f.pres, /*cap=*/64);
    int longest = 0;
    for (const auto& p : a.basis()) longest = std::max(longest, p.length());
    auto irr = oracle.irreducible_words(longest);
    CHECK(path_strings(a.basis(), f.pres) == path_strings(irr, f.pres));
    // No irreducible word exists just past the basis either.
    for (const auto& w : oracle.irreducible_words(longest + 1)) {
      CHECK(w.length() <= longest);
    }
  }
}

TEST_CASE("radical filtration layers") {
  QuotientAlgebra a = build_quotient(builtin("q1e", {2}));
  CHECK(a.radical_dims() == std::vector<int>{7, 5, 3, 1});
  // Layer dimensions of the length filtration coincide with the genuine
  // radical series computed from the multiplication table.
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra b = build_quotient(f.pres);
    CHECK(radical_series(b) == b.radical_dims());
    const auto& dims = b.radical_dims();
    // The first power is everything but the trivial paths, and the chain
    // strictly descends to zero.
    REQUIRE(!dims.empty());
    CHECK(dims.front() + static_cast<int>(f.pres.quiver.vertices.size()) ==
          b.dimension());
    for (size_t i = 0; i + 1 < dims.size(); ++i) CHECK(dims[i] > dims[i + 1]);
    CHECK(dims.back() >= 1);
  }
}

TEST_CASE("normal forms agree with the rewriting oracle where it terminates") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    RewriteOracle oracle(f.pres, /*cap=*/48);
    if (!oracle.length_preserving()) continue;
    int len = a.truncation_length();
    for (const auto& w : oracle.all_words(len)) {
      Element x = mono(f.pres.field, w);
      auto expected = oracle.normal_form(x);
      REQUIRE(expected.has_value());
      CHECK(render(f.pres, a.normal_form(x)) == render(f.pres, *expected));
    }
  }
}

TEST_CASE("normal forms carry ideal-membership certificates") {
  // Independent of the engine's row reduction: w - nf(w) reduces to zero
  // against full (untruncated) shifted relations.
  Presentation p = builtin("q1e", {2});
  QuotientAlgebra a = build_quotient(p);
  RewriteOracle oracle(p, /*cap=*/8);
  for (const auto& w : oracle.all_words(6)) {
    Element x = mono(p.field, w);
    Element diff = subtract(p.field, x, a.normal_form(x));
    if (diff.is_zero()) continue;
    CAPTURE(render(p, x));
    CHECK(bounded_ideal_member(p, diff, /*bound=*/10));
  }
}

TEST_CASE("multiplication matches reduction of concatenations") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    const auto& basis = a.basis();
    for (const auto& p : basis) {
      for (const auto& q : basis) {
        Element prod = a.multiply(mono(f.pres.field, p), mono(f.pres.field, q));
        auto concat = compose(f.pres.quiver, p, q);
        if (!concat) {
          CHECK(prod.is_zero());
        } else if (p.length() + q.length() <= a.truncation_length()) {
          Element reduced = a.normal_form(mono(f.pres.field, *concat));
          CHECK(render(f.pres, prod) == render(f.pres, reduced));
        } else {
          // Too long for direct reduction; the table result must at least
          // stay inside the span and respect the length filtration.
          for (const auto& [path, c] : prod.terms) {
            CHECK(a.basis_index(path) >= 0);
            CHECK(path.length() >= p.length());
          }
        }
      }
    }
  }
}

TEST_CASE("normal form is idempotent and linear on random elements") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    RewriteOracle oracle(f.pres, /*cap=*/4);
    unsigned seed = 12345;
    auto next = [&seed]() {
      seed = seed * 1664525u + 1013904223u;
      return seed >> 16;
    };
    auto words = oracle.all_words(a.truncation_length());
    REQUIRE(!words.empty());
    for (int trial = 0; trial < 25; ++trial) {
      // Sample parallel words only: an element's terms share endpoints.
      const Path& anchor = words[next() % words.size()];
      Element y;
      for (int t = 0; t < 4; ++t) {
        const Path& w = words[next() % words.size()];
        if (w.source() != anchor.source() ||
            w.target(f.pres.quiver) != anchor.target(f.pres.quiver)) {
          continue;
        }
        long long c = static_cast<long long>(next() % 7) - 3;
        if (c == 0) continue;
        y.add_term(f.pres.field, w, f.pres.field.from_rational(Rational(c)));
      }
      Element nf = a.normal_form(y);
      CHECK(render(f.pres, a.normal_form(nf)) == render(f.pres, nf));
      for (const auto& [path, c] : nf.terms) CHECK(a.basis_index(path) >= 0);
    }
  }
}

TEST_CASE("associativity on all basis triples") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    if (a.dimension() > 64) continue;
    int n = a.dimension();
    std::vector<Element> b;
    b.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) b.push_back(mono(f.pres.field, a.basis()[i]));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Element ij = a.multiply(b[i], b[j]);
        for (int k = 0; k < n; ++k) {
          Element left = a.multiply(ij, b[k]);
          Element right = a.multiply(b[i], a.multiply(b[j], b[k]));
          if (!(left.terms == right.terms)) {
            CAPTURE(i);
            CAPTURE(j);
            CAPTURE(k);
            REQUIRE(left.terms == right.terms);
          }
        }
      }
    }
  }
}

TEST_CASE("the sum of trivial paths is a two-sided unit") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    QuotientAlgebra a = build_quotient(f.pres);
    Element unit;
    for (int v = 0; v < static_cast<int>(f.pres.quiver.vertices.size()); ++v) {
      unit.add_term(f.pres.field, Path::trivial(v), f.pres.field.one());
    }
    for (const auto& p : a.basis()) {
      Element x = mono(f.pres.field, p);
      CHECK(a.multiply(unit, x).terms == x.terms);
      CHECK(a.multiply(x, unit).terms == x.terms);
    }
  }
}

TEST_CASE("coordinate interface round-trips") {
  Presentation p = builtin("q1e", {2});
  QuotientAlgebra a = build_quotient(p);
  int n = a.dimension();
  for (int i = 0; i < n; ++i) {
    QuotientAlgebra::Coords c(static_cast<size_t>(n), p.field.zero());
    c[static_cast<size_t>(i)] = p.field.one();
    Element x = a.element_of(c);
    CHECK(render(p, x) == render(p, mono(p.field, a.basis()[i])));
    CHECK(a.coords_of(x) == c);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      QuotientAlgebra::Coords ci(static_cast<size_t>(n), p.field.zero());
      QuotientAlgebra::Coords cj(static_cast<size_t>(n), p.field.zero());
      ci[static_cast<size_t>(i)] = p.field.one();
      cj[static_cast<size_t>(j)] = p.field.one();
      Element prod = a.multiply(mono(p.field, a.basis()[i]),
                                mono(p.field, a.basis()[j]));
      CHECK(a.mul_coords(ci, cj) == a.coords_of(prod));
    }
  }
}

TEST_CASE("extend_coords multiplies by a single arrow") {
  Presentation p = builtin("two_loop", {2});
  QuotientAlgebra a = build_quotient(p);
  int n = a.dimension();
  for (int i = 0; i < n; ++i) {
    QuotientAlgebra::Coords c(static_cast<size_t>(n), p.field.zero());
    c[static_cast<size_t>(i)] = p.field.one();
    for (int arrow = 0; arrow < static_cast<int>(p.quiver.arrows.size());
         ++arrow) {
      Path ap;
      ap.base_vertex = p.quiver.arrows[static_cast<size_t>(arrow)].source;
      ap.arrows = {arrow};
      Element direct =
          a.multiply(mono(p.field, a.basis()[i]), mono(p.field, ap));
      CHECK(a.extend_coords(c, arrow) == a.coords_of(direct));
    }
  }
}

TEST_CASE("infinite-dimensional input raises the bound error") {
  // One loop with no relations is the free algebra on one letter.
  Presentation p;
  p.name = "free_loop";
  p.field = Field::rationals();
  p.quiver.vertices = {"v"};
  p.quiver.arrows.push_back({"x", 0, 0});
  CHECK_THROWS_AS((void)build_quotient(p, 12), NotFiniteWithinBound);
  try {
    (void)build_quotient(p, 9);
    FAIL("expected NotFiniteWithinBound");
  } catch (const NotFiniteWithinBound& e) {
    CHECK(e.max_len == 9);
    CHECK(std::string(e.what()).find('9') != std::string::npos);
  }
}

TEST_CASE("short relations are rejected as inadmissible") {
  Presentation p;
  p.name = "bad";
  p.field = Field::rationals();
  p.quiver.vertices = {"v"};
  p.quiver.arrows.push_back({"x", 0, 0});
  Path x;
  x.base_vertex = 0;
  x.arrows = {0};
  Path xx = x;
  xx.arrows = {0, 0};
  Element rel;
  rel.add_term(p.field, x, p.field.one());
  rel.add_term(p.field, xx, p.field.one());
  p.relations.push_back(rel);  // x + x^2 has a length-1 term
  CHECK_THROWS_AS((void)build_quotient(p), NotAdmissible);
}

TEST_CASE("overlong words are refused by normal_form") {
  Presentation p = builtin("truncated_poly", {3});
  QuotientAlgebra a = build_quotient(p);
  Path w;
  w.base_vertex = 0;
  w.arrows.assign(static_cast<size_t>(a.truncation_length()) + 1, 0);
  CHECK_THROWS_AS((void)a.normal_form(mono(p.field, w)), TruncationExceeded);
}

TEST_CASE("stabilization lengths are frozen for the builtin families") {
  CHECK(build_quotient(builtin("q1e", {2})).certificate().stabilized_at == 6);
  CHECK(build_quotient(builtin("two_loop", {2})).certificate().stabilized_at ==
        5);
  CHECK(build_quotient(builtin("truncated_poly", {3}))
            .certificate()
            .stabilized_at == 4);
}

TEST_CASE("connectivity detection") {
  for (const auto& f : small_fixtures()) {
    CAPTURE(f.label);
    CHECK(is_connected(f.pres.quiver));
  }
  Presentation p;
  p.field = Field::rationals();
  p.quiver.vertices = {"u", "v"};
  p.quiver.arrows.push_back({"x", 0, 0});
  p.quiver.arrows.push_back({"y", 1, 1});
  CHECK_FALSE(is_connected(p.quiver));
}
