// Shared small presentations with their externally computed dimensions.
// Every fixture here stays below dimension 64 so the full multiplication
// table and all basis triples are cheap to sweep.

#pragma once

#include "qga/parser.hpp"
#include "qga/presentation.hpp"

#include <string>
#include <vector>

namespace qga::testing {

struct Fixture {
  std::string label;
  Presentation pres;
  int expected_dim;
};

inline std::vector<Fixture> small_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"q1e(2)", builtin("q1e", {2}), 8});
  out.push_back({"q1e(3)", builtin("q1e", {3}), 12});
  out.push_back({"two_loop(1)", builtin("two_loop", {1}), 4});
  out.push_back({"two_loop(2)", builtin("two_loop", {2}), 8});
  out.push_back({"truncated_poly(2)", builtin("truncated_poly", {2}), 2});
  out.push_back({"truncated_poly(4)", builtin("truncated_poly", {4}), 4});
  out.push_back({"linear_an(2)", builtin("linear_an", {2}), 3});
  out.push_back({"linear_an(3)", builtin("linear_an", {3}), 6});
  // Two vertices, two arrows each way; the monomial relation kills every
  // word containing x*y*x, leaving e_u, e_v, x, y, x*y, y*x, y*x*y.
  out.push_back({"zigzag",
                 parse_presentation("algebra zigzag\n"
                                    "vertices: u, v\n"
                                    "arrows: x:u->v, y:v->u\n"
                                    "relations: x*y*x\n"),
                 7});
  // Same shape over F2 to exercise finite field reduction paths.
  out.push_back({"q1e(2)/F2",
                 parse_presentation("algebra q1e2_f2\n"
                                    "arrows: a:e->e, b:e->e\n"
                                    "relations:\n"
                                    "  a^2 - b*a*b;\n"
                                    "  b^2 - a*b*a;\n"
                                    "  (a*b)^2 - (b*a)^2;\n"
                                    "  (a*b)^2*a\n"
                                    "field: F2\n"),
                 8});
  // Commutativity relation across two parallel routes of a square.
  out.push_back({"square",
                 parse_presentation("algebra square\n"
                                    "vertices: p, q, r, s\n"
                                    "arrows: a:p->q, b:q->s, c:p->r, d:r->s\n"
                                    "relations: a*b - c*d\n"),
                 9});
  return out;
}

}  // namespace qga::testing
