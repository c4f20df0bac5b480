#include "qga/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace qga {

int Quiver::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

bool lenlex_less(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) {
    return a.arrows.size() < b.arrows.size();
  }
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.base_vertex < b.base_vertex;
}

std::optional<Path> compose(const Quiver& q, const Path& a, const Path& b) {
  if (a.target(q) != b.source()) return std::nullopt;
  if (a.arrows.empty()) return b;
  if (b.arrows.empty()) return a;
  Path r = a;
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

void Element::add_term(const Field& k, const Path& p, const Scalar& c) {
  auto it = terms.find(p);
  if (it == terms.end()) {
    if (!k.is_zero(c)) terms.emplace(p, c);
    return;
  }
  it->second = k.add(it->second, c);
  if (k.is_zero(it->second)) terms.erase(it);
}

Element add(const Field& k, const Element& x, const Element& y) {
  Element r = x;
  for (const auto& [p, c] : y.terms) r.add_term(k, p, c);
  return r;
}

Element scale(const Field& k, const Scalar& c, const Element& x) {
  Element r;
  for (const auto& [p, d] : x.terms) r.add_term(k, p, k.mul(c, d));
  return r;
}

namespace {

bool valid_path(const Quiver& q, const Path& p) {
  int at = p.base_vertex;
  if (at < 0 || at >= static_cast<int>(q.vertices.size())) return false;
  for (int a : p.arrows) {
    if (a < 0 || a >= static_cast<int>(q.arrows.size())) return false;
    if (q.arrows[a].source != at) return false;
    at = q.arrows[a].target;
  }
  return true;
}

}  // namespace

void validate_presentation(const Presentation& p) {
  const Quiver& q = p.quiver;
  if (q.vertices.empty()) throw std::invalid_argument("no vertices");
  for (size_t i = 0; i < q.vertices.size(); ++i) {
    if (q.vertices[i].empty()) throw std::invalid_argument("empty vertex name");
    for (size_t j = i + 1; j < q.vertices.size(); ++j) {
      if (q.vertices[i] == q.vertices[j]) {
        throw std::invalid_argument("duplicate vertex " + q.vertices[i]);
      }
    }
  }
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    if (a.name.empty()) throw std::invalid_argument("empty arrow name");
    if (q.vertex_index(a.name) >= 0) {
      throw std::invalid_argument("arrow name clashes with vertex " + a.name);
    }
    for (size_t j = i + 1; j < q.arrows.size(); ++j) {
      if (a.name == q.arrows[j].name) {
        throw std::invalid_argument("duplicate arrow " + a.name);
      }
    }
    if (a.source < 0 || a.source >= static_cast<int>(q.vertices.size()) ||
        a.target < 0 || a.target >= static_cast<int>(q.vertices.size())) {
      throw std::invalid_argument("arrow " + a.name + " has a dangling end");
    }
  }
  for (size_t r = 0; r < p.relations.size(); ++r) {
    const Element& rel = p.relations[r];
    if (rel.is_zero()) {
      throw std::invalid_argument("relation " + std::to_string(r + 1) +
                                  " is zero");
    }
    const Path& first = rel.terms.begin()->first;
    for (const auto& [path, c] : rel.terms) {
      if (!valid_path(q, path)) {
        throw std::invalid_argument("relation " + std::to_string(r + 1) +
                                    " contains an invalid path");
      }
      if (path.length() < 2) {
        throw std::invalid_argument("relation " + std::to_string(r + 1) +
                                    " contains a path of length < 2");
      }
      if (path.source() != first.source() ||
          path.target(q) != first.target(q)) {
        throw std::invalid_argument("relation " + std::to_string(r + 1) +
                                    " has non-parallel terms");
      }
      if (p.field.is_zero(c)) {
        throw std::invalid_argument("relation " + std::to_string(r + 1) +
                                    " stores a zero coefficient");
      }
    }
  }
}

namespace {

Path word(int base, std::initializer_list<int> arrows) {
  Path p;
  p.base_vertex = base;
  p.arrows.assign(arrows);
  return p;
}

// (xy)^k as an arrow word starting with x.
std::vector<int> alternating(int x, int y, int k) {
  std::vector<int> w;
  for (int i = 0; i < k; ++i) {
    w.push_back(x);
    w.push_back(y);
  }
  return w;
}

Element monomial(const Field& k, const Path& p) {
  Element e;
  e.add_term(k, p, k.one());
  return e;
}

Element difference(const Field& k, const Path& p, const Path& q) {
  Element e;
  e.add_term(k, p, k.one());
  e.add_term(k, q, k.neg(k.one()));
  return e;
}

}  // namespace

Presentation builtin(const std::string& family,
                     const std::vector<long long>& params) {
  auto arity = [&](size_t n) {
    if (params.size() != n) {
      throw std::invalid_argument("builtin " + family + " takes " +
                                  std::to_string(n) + " parameter(s)");
    }
  };
  Presentation p;
  p.field = Field::rationals();

  if (family == "q1e") {
    arity(1);
    long long r = params[0];
    if (r < 2) throw std::invalid_argument("q1e requires r >= 2");
    p.name = "q1e(" + std::to_string(r) + ")";
    p.quiver.vertices = {"e"};
    p.quiver.arrows = {{"a", 0, 0}, {"b", 0, 0}};
    const Field& k = p.field;
    // a^2 = (ba)^{r-1} b, b^2 = (ab)^{r-1} a, (ab)^r = (ba)^r, (ab)^r a = 0.
    std::vector<int> ba_b = alternating(1, 0, static_cast<int>(r) - 1);
    ba_b.push_back(1);
    std::vector<int> ab_a = alternating(0, 1, static_cast<int>(r) - 1);
    ab_a.push_back(0);
    std::vector<int> ab_r = alternating(0, 1, static_cast<int>(r));
    std::vector<int> ba_r = alternating(1, 0, static_cast<int>(r));
    std::vector<int> ab_r_a = ab_r;
    ab_r_a.push_back(0);
    p.relations.push_back(difference(k, word(0, {0, 0}), Path{0, ba_b}));
    p.relations.push_back(difference(k, word(0, {1, 1}), Path{0, ab_a}));
    p.relations.push_back(difference(k, Path{0, ab_r}, Path{0, ba_r}));
    p.relations.push_back(monomial(k, Path{0, ab_r_a}));
  } else if (family == "two_loop") {
    arity(1);
    long long r = params[0];
    if (r < 1) throw std::invalid_argument("two_loop requires r >= 1");
    p.name = "two_loop(" + std::to_string(r) + ")";
    p.quiver.vertices = {"e"};
    p.quiver.arrows = {{"a", 0, 0}, {"b", 0, 0}};
    const Field& k = p.field;
    std::vector<int> ab_r = alternating(0, 1, static_cast<int>(r));
    std::vector<int> ba_r = alternating(1, 0, static_cast<int>(r));
    p.relations.push_back(monomial(k, word(0, {0, 0})));
    p.relations.push_back(monomial(k, word(0, {1, 1})));
    p.relations.push_back(difference(k, Path{0, ab_r}, Path{0, ba_r}));
  } else if (family == "truncated_poly") {
    arity(1);
    long long n = params[0];
    if (n < 2) throw std::invalid_argument("truncated_poly requires n >= 2");
    p.name = "truncated_poly(" + std::to_string(n) + ")";
    p.quiver.vertices = {"v"};
    p.quiver.arrows = {{"x", 0, 0}};
    Path xn{0, std::vector<int>(static_cast<size_t>(n), 0)};
    p.relations.push_back(monomial(p.field, xn));
  } else if (family == "linear_an") {
    arity(1);
    long long n = params[0];
    if (n < 2) throw std::invalid_argument("linear_an requires n >= 2");
    p.name = "linear_an(" + std::to_string(n) + ")";
    for (long long i = 1; i <= n; ++i) {
      p.quiver.vertices.push_back("v" + std::to_string(i));
    }
    for (long long i = 1; i < n; ++i) {
      p.quiver.arrows.push_back({"a" + std::to_string(i),
                                 static_cast<int>(i) - 1,
                                 static_cast<int>(i)});
    }
  } else {
    throw std::invalid_argument("unknown builtin family " + family);
  }
  validate_presentation(p);
  return p;
}

Presentation builtin(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("builtin spec needs the form family:params");
  }
  std::string family = spec.substr(0, colon);
  std::vector<long long> params;
  std::string rest = spec.substr(colon + 1);
  // Split on commas by hand: getline-style splitting would swallow a
  // trailing empty piece, letting "family:2," slip through.
  size_t start = 0;
  while (start <= rest.size()) {
    size_t comma = rest.find(',', start);
    std::string piece = rest.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad builtin parameter '" + piece + "'");
    }
    if (used != piece.size()) {
      throw std::invalid_argument("bad builtin parameter '" + piece + "'");
    }
    params.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (params.empty()) {
    throw std::invalid_argument("builtin spec needs at least one parameter");
  }
  return builtin(family, params);
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return q.vertices[p.base_vertex];
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

std::string element_to_string(const Quiver& q, const Field& k,
                              const Element& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : x.terms) {
    bool negative = c.v < 0;  // finite fields store nonnegative reps
    Scalar mag = negative ? k.neg(c) : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (!(mag == k.one())) s += k.str(mag) + "*";
    s += path_to_string(q, p);
  }
  return s;
}

std::string serialize(const Presentation& p) {
  validate_presentation(p);
  if (p.field.kind() == FieldKind::gf4) {
    for (const Element& rel : p.relations) {
      for (const auto& [path, c] : rel.terms) {
        if (!(c == p.field.one())) {
          throw std::invalid_argument(
              "relation coefficient not representable in the text format");
        }
      }
    }
  }
  std::string out;
  if (!p.name.empty()) out += "algebra " + p.name + "\n";
  out += "vertices: ";
  for (size_t i = 0; i < p.quiver.vertices.size(); ++i) {
    if (i) out += ", ";
    out += p.quiver.vertices[i];
  }
  out += "\narrows: ";
  for (size_t i = 0; i < p.quiver.arrows.size(); ++i) {
    const Arrow& a = p.quiver.arrows[i];
    if (i) out += ", ";
    out += a.name + ":" + p.quiver.vertices[a.source] + "->" +
           p.quiver.vertices[a.target];
  }
  out += "\nrelations:";
  for (const Element& rel : p.relations) {
    out += " " + element_to_string(p.quiver, p.field, rel) + ";";
  }
  out += "\nfield: " + p.field.name() + "\n";
  return out;
}

}  // namespace qga
