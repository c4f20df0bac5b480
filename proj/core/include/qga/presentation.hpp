// Quivers, paths, linear combinations of paths, and algebra presentations
// (a quiver plus a list of relations over a coefficient field).
// Composition is diagrammatic throughout: in the product p*q the path p is
// traversed first, so p*q requires target(p) == source(q).

#pragma once

#include "qga/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qga {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;  // -1 when absent
  int arrow_index(const std::string& name) const;   // -1 when absent
};

// A composable word of arrow indices.  The empty word is the trivial path
// at base_vertex; for nonempty words base_vertex is the source of the
// first arrow.
struct Path {
  int base_vertex = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, {}}; }

  int length() const { return static_cast<int>(arrows.size()); }
  int source() const { return base_vertex; }
  int target(const Quiver& q) const {
    return arrows.empty() ? base_vertex : q.arrows[arrows.back()].target;
  }

  bool operator==(const Path& o) const {
    return base_vertex == o.base_vertex && arrows == o.arrows;
  }
};

// Shorter paths first; equal lengths compare the arrow words
// lexicographically in declaration order, trivial paths by vertex.
bool lenlex_less(const Path& a, const Path& b);

struct PathLenLex {
  bool operator()(const Path& a, const Path& b) const {
    return lenlex_less(a, b);
  }
};

std::optional<Path> compose(const Quiver& q, const Path& a, const Path& b);

// Finite linear combination of pairwise parallel paths with nonzero
// coefficients.  Terms iterate in length-lex order.
struct Element {
  std::map<Path, Scalar, PathLenLex> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Field& k, const Path& p, const Scalar& c);
};

Element add(const Field& k, const Element& x, const Element& y);
Element scale(const Field& k, const Scalar& c, const Element& x);

struct Presentation {
  std::string name;
  Quiver quiver;
  std::vector<Element> relations;
  Field field;
};

// Throws std::invalid_argument on duplicate or clashing names, dangling
// arrow endpoints, relation paths of length < 2, or non-parallel terms
// within one relation.
void validate_presentation(const Presentation& p);

// Built-in families: q1e(r >= 2), two_loop(r >= 1), truncated_poly(n >= 2),
// linear_an(n >= 2).  Throws std::invalid_argument for unknown families or
// parameters out of range.
Presentation builtin(const std::string& family,
                     const std::vector<long long>& params);
// Spec form "family:p1,p2".
Presentation builtin(const std::string& spec);

// Canonical text form: relations in declaration order, terms in length-lex
// order with explicit signs.  The output reparses to an identical
// presentation.
std::string serialize(const Presentation& p);

std::string path_to_string(const Quiver& q, const Path& p);
std::string element_to_string(const Quiver& q, const Field& k,
                              const Element& x);

}  // namespace qga
