#include "qga/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace qga {

namespace {

struct Tok {
  enum Kind { Name, Int, Sym, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  // Consumes the rest of the current line, trimmed; used for the header name.
  std::string rest_of_line() {
    size_t start = pos;
    while (pos < text.size() && text[pos] != '\n' && text[pos] != '#') {
      advance();
    }
    size_t end = pos;
    while (start < end &&
           std::isspace(static_cast<unsigned char>(text[start]))) {
      ++start;
    }
    while (end > start &&
           std::isspace(static_cast<unsigned char>(text[end - 1]))) {
      --end;
    }
    return std::string(text.substr(start, end - start));
  }

  std::vector<Tok> run() {
    std::vector<Tok> toks;
    while (true) {
      skip_space();
      if (pos >= text.size()) break;
      int l = line, c = col;
      char ch = text[pos];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string s;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_')) {
          s += text[pos];
          advance();
        }
        toks.push_back({Tok::Name, s, l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string s;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          s += text[pos];
          advance();
        }
        toks.push_back({Tok::Int, s, l, c});
      } else if (ch == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
        advance();
        advance();
        toks.push_back({Tok::Sym, "->", l, c});
      } else if (std::string(":,;+-*/^()").find(ch) != std::string::npos) {
        advance();
        toks.push_back({Tok::Sym, std::string(1, ch), l, c});
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", l,
                         c);
      }
    }
    toks.push_back({Tok::End, "", line, col});
    return toks;
  }
};

struct Parser {
  std::vector<Tok> toks;
  size_t pos = 0;
  Presentation out;

  const Tok& peek(size_t ahead = 0) const {
    size_t i = pos + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }

  const Tok& get() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

  bool at_sym(const char* s) const {
    return peek().kind == Tok::Sym && peek().text == s;
  }

  // A section keyword is a name directly followed by ':'.
  bool at_section(const char* name) const {
    return peek().kind == Tok::Name && peek().text == name &&
           peek(1).kind == Tok::Sym && peek(1).text == ":";
  }

  void expect_sym(const char* s) {
    if (!at_sym(s)) {
      throw ParseError(std::string("expected '") + s + "'", peek().line,
                       peek().col);
    }
    ++pos;
  }

  std::string expect_name(const char* what) {
    if (peek().kind != Tok::Name) {
      throw ParseError(std::string("expected ") + what, peek().line,
                       peek().col);
    }
    return get().text;
  }

  void parse_sections() {
    if (at_section("vertices")) {
      pos += 2;
      out.quiver.vertices.push_back(expect_name("vertex name"));
      while (at_sym(",")) {
        ++pos;
        out.quiver.vertices.push_back(expect_name("vertex name"));
      }
    }
    bool inferred = out.quiver.vertices.empty();
    if (!at_section("arrows")) {
      throw ParseError("expected arrows section", peek().line, peek().col);
    }
    pos += 2;
    auto vertex_of = [&](const std::string& name, const Tok& where) {
      int i = out.quiver.vertex_index(name);
      if (i >= 0) return i;
      if (!inferred) {
        throw ParseError("unknown vertex " + name, where.line, where.col);
      }
      out.quiver.vertices.push_back(name);
      return static_cast<int>(out.quiver.vertices.size()) - 1;
    };
    auto arrow_decl_ahead = [&] {
      return peek().kind == Tok::Name && peek(1).kind == Tok::Sym &&
             peek(1).text == ":" && peek(2).kind == Tok::Name &&
             peek(3).kind == Tok::Sym && peek(3).text == "->";
    };
    while (arrow_decl_ahead()) {
      Tok name_tok = peek();
      std::string name = expect_name("arrow name");
      expect_sym(":");
      Tok src_tok = peek();
      std::string src = expect_name("vertex name");
      expect_sym("->");
      Tok tgt_tok = peek();
      std::string tgt = expect_name("vertex name");
      if (out.quiver.arrow_index(name) >= 0) {
        throw ParseError("duplicate arrow " + name, name_tok.line,
                         name_tok.col);
      }
      out.quiver.arrows.push_back(
          {name, vertex_of(src, src_tok), vertex_of(tgt, tgt_tok)});
      if (at_sym(",")) {
        ++pos;
        if (!arrow_decl_ahead()) {
          throw ParseError("expected arrow declaration", peek().line,
                           peek().col);
        }
      }
    }
    for (size_t i = 0; i < out.quiver.vertices.size(); ++i) {
      const std::string& v = out.quiver.vertices[i];
      for (size_t j = i + 1; j < out.quiver.vertices.size(); ++j) {
        if (out.quiver.vertices[j] == v) {
          throw ParseError("duplicate vertex " + v, 1, 1);
        }
      }
      if (out.quiver.arrow_index(v) >= 0) {
        throw ParseError("name " + v + " is both a vertex and an arrow", 1, 1);
      }
    }
  }

  // Relations are recorded as token ranges and evaluated once the field is
  // known.
  std::vector<std::pair<size_t, size_t>> relation_ranges;

  void parse_relation_list() {
    if (!at_section("relations")) {
      throw ParseError("expected relations section", peek().line, peek().col);
    }
    pos += 2;
    while (true) {
      if (peek().kind == Tok::End || at_section("field")) break;
      size_t start = pos;
      while (peek().kind != Tok::End && !at_sym(";") && !at_section("field")) {
        ++pos;
      }
      if (pos == start) {
        throw ParseError("empty relation", peek().line, peek().col);
      }
      relation_ranges.emplace_back(start, pos);
      if (at_sym(";")) ++pos;
    }
  }

  void parse_field() {
    out.field = Field::rationals();
    if (!at_section("field")) return;
    pos += 2;
    Tok tok = peek();
    std::string name = expect_name("field name");
    try {
      out.field = Field::from_name(name);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), tok.line, tok.col);
    }
  }

  // Expression evaluation over a recorded token range.

  size_t expr_end = 0;

  bool expr_at_sym(const char* s) const {
    return pos < expr_end && toks[pos].kind == Tok::Sym && toks[pos].text == s;
  }

  const Tok& expr_peek() const {
    return pos < expr_end ? toks[pos] : toks[expr_end];
  }

  Element mul_strict(const Element& x, const Element& y, const Tok& where) {
    Element r;
    for (const auto& [p, c] : x.terms) {
      for (const auto& [q, d] : y.terms) {
        auto pq = compose(out.quiver, p, q);
        if (!pq) {
          throw ParseError("non-composable product " +
                               path_to_string(out.quiver, p) + " * " +
                               path_to_string(out.quiver, q),
                           where.line, where.col);
        }
        r.add_term(out.field, *pq, out.field.mul(c, d));
      }
    }
    return r;
  }

  Element power(Element base, long long k, const Tok& where) {
    if (k < 1) {
      throw ParseError("exponent must be positive", where.line, where.col);
    }
    if (k > 10000) {
      throw ParseError("exponent too large", where.line, where.col);
    }
    Element r = base;
    for (long long i = 1; i < k; ++i) r = mul_strict(r, base, where);
    return r;
  }

  long long parse_int(const char* what) {
    if (expr_peek().kind != Tok::Int) {
      throw ParseError(std::string("expected ") + what, expr_peek().line,
                       expr_peek().col);
    }
    const Tok& t = toks[pos++];
    if (t.text.size() > 18) {
      throw ParseError("integer too large", t.line, t.col);
    }
    return std::stoll(t.text);
  }

  Element parse_factor() {
    Tok where = expr_peek();
    Element base;
    if (expr_at_sym("(")) {
      ++pos;
      base = parse_expr();
      if (!expr_at_sym(")")) {
        throw ParseError("expected ')'", expr_peek().line, expr_peek().col);
      }
      ++pos;
    } else if (expr_peek().kind == Tok::Name) {
      std::string name = toks[pos++].text;
      int a = out.quiver.arrow_index(name);
      int v = out.quiver.vertex_index(name);
      Path p;
      if (a >= 0) {
        p.base_vertex = out.quiver.arrows[a].source;
        p.arrows = {a};
      } else if (v >= 0) {
        p.base_vertex = v;
      } else {
        throw ParseError("unknown name " + name, where.line, where.col);
      }
      base.add_term(out.field, p, out.field.one());
    } else {
      throw ParseError("expected path factor", expr_peek().line,
                       expr_peek().col);
    }
    if (expr_at_sym("^")) {
      ++pos;
      Tok exp_tok = expr_peek();
      long long k = parse_int("exponent");
      return power(base, k, exp_tok);
    }
    return base;
  }

  Element parse_term() {
    Element value;
    bool have_value = false;
    if (expr_peek().kind == Tok::Int) {
      Tok coeff_tok = expr_peek();
      Int num(toks[pos++].text);
      Int den = 1;
      if (expr_at_sym("/")) {
        ++pos;
        Tok den_tok = expr_peek();
        if (expr_peek().kind != Tok::Int) {
          throw ParseError("expected denominator", den_tok.line, den_tok.col);
        }
        den = Int(toks[pos++].text);
        if (den == 0) {
          throw ParseError("division by zero in coefficient", den_tok.line,
                           den_tok.col);
        }
      }
      Scalar c;
      try {
        c = out.field.from_rational(Rational(num, den));
      } catch (const std::invalid_argument&) {
        throw ParseError("coefficient not invertible in " + out.field.name(),
                         coeff_tok.line, coeff_tok.col);
      }
      if (!expr_at_sym("*")) {
        throw ParseError("expected '*' after coefficient", expr_peek().line,
                         expr_peek().col);
      }
      ++pos;
      Element f = parse_factor();
      value = scale(out.field, c, f);
      have_value = true;
    }
    while (true) {
      if (!have_value) {
        value = parse_factor();
        have_value = true;
      } else if (expr_at_sym("*")) {
        ++pos;
        Tok where = expr_peek();
        Element f = parse_factor();
        value = mul_strict(value, f, where);
      } else {
        break;
      }
    }
    return value;
  }

  Element parse_expr() {
    bool negate = false;
    if (expr_at_sym("-")) {
      ++pos;
      negate = true;
    }
    Element value = parse_term();
    if (negate) value = scale(out.field, out.field.neg(out.field.one()), value);
    while (expr_at_sym("+") || expr_at_sym("-")) {
      bool minus = toks[pos].text == "-";
      ++pos;
      Element term = parse_term();
      if (minus) {
        term = scale(out.field, out.field.neg(out.field.one()), term);
      }
      value = add(out.field, value, term);
    }
    return value;
  }

  void evaluate_relations() {
    for (auto [start, end] : relation_ranges) {
      pos = start;
      expr_end = end;
      Tok head = toks[start];
      Element rel = parse_expr();
      if (pos != end) {
        throw ParseError("unexpected token in relation", toks[pos].line,
                         toks[pos].col);
      }
      if (rel.is_zero()) {
        throw ParseError("relation is zero", head.line, head.col);
      }
      const Path& first = rel.terms.begin()->first;
      for (const auto& [p, c] : rel.terms) {
        if (p.length() < 2) {
          throw ParseError("relation contains a path of length < 2", head.line,
                           head.col);
        }
        if (p.source() != first.source() ||
            p.target(out.quiver) != first.target(out.quiver)) {
          throw ParseError("relation terms are not parallel", head.line,
                           head.col);
        }
      }
      out.relations.push_back(std::move(rel));
    }
  }

  Presentation run() {
    parse_sections();
    parse_relation_list();
    parse_field();
    size_t after_field = pos;
    if (toks[after_field].kind != Tok::End) {
      throw ParseError("unexpected trailing content", toks[after_field].line,
                       toks[after_field].col);
    }
    evaluate_relations();
    validate_presentation(out);
    return std::move(out);
  }
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Lexer lex{text};
  std::string name;
  lex.skip_space();
  // Header: the word "algebra" not used as a section keyword; the name runs
  // to the end of the line.
  if (text.substr(lex.pos, 7) == "algebra" &&
      (lex.pos + 7 >= text.size() ||
       (!std::isalnum(static_cast<unsigned char>(text[lex.pos + 7])) &&
        text[lex.pos + 7] != '_' && text[lex.pos + 7] != ':'))) {
    int l = lex.line, c = lex.col;
    for (int i = 0; i < 7; ++i) lex.advance();
    name = lex.rest_of_line();
    if (name.empty()) throw ParseError("missing algebra name", l, c);
  }
  Parser parser;
  parser.toks = lex.run();
  Presentation p = parser.run();
  p.name = name;
  return p;
}

}  // namespace qga
