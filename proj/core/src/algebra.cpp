#include "qga/algebra.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qga {

namespace detail {

// Truncated path space: every path of length <= L is interned with ids
// ascending by (length, reverse lex), so the id order is the reduction
// order and the leading term of a row is its smallest id.
struct Truncation {
  int L = 0;
  int narrows = 0;
  int nverts = 0;
  Field field;
  std::vector<int> base;    // per id
  std::vector<int> target;  // per id
  std::vector<int> parent;  // per id, id minus last arrow, -1 for trivial
  std::vector<int> last;    // per id, last arrow, -1 for trivial
  std::vector<int> len;     // per id
  std::vector<int> ext;     // id * narrows + a -> id, -1 when absent
  // Reduced rows keyed by pivot id; each row is sorted by id, leads with
  // (pivot, 1), and every tail id is larger than the pivot.
  std::map<int, std::vector<std::pair<int, Scalar>>> rows;
  // basis_ext[j][a]: basis coordinates of (basis path j) * (arrow a).
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> basis_ext;

  int extend(int id, int a) const {
    return ext[static_cast<size_t>(id) * narrows + a];
  }

  int walk(int id, const std::vector<int>& arrows) const {
    for (int a : arrows) {
      if (id < 0) return id;
      if (a < 0 || a >= narrows) return -1;
      id = extend(id, a);
    }
    return id;
  }

  Path path_of(int id) const {
    Path p;
    p.arrows.resize(len[id]);
    for (int i = len[id]; i-- > 0; id = parent[id]) p.arrows[i] = last[id];
    p.base_vertex = base[id];
    return p;
  }

  // row -= c * other, both sorted by id.
  std::vector<std::pair<int, Scalar>> axpy(
      const std::vector<std::pair<int, Scalar>>& row, const Scalar& c,
      const std::vector<std::pair<int, Scalar>>& other) const {
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(row.size() + other.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
      if (j == other.size() ||
          (i < row.size() && row[i].first < other[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || other[j].first < row[i].first) {
        out.emplace_back(other[j].first,
                         field.neg(field.mul(c, other[j].second)));
        ++j;
      } else {
        Scalar s = field.sub(row[i].second, field.mul(c, other[j].second));
        if (!field.is_zero(s)) out.emplace_back(row[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  void insert_row(std::vector<std::pair<int, Scalar>> row) {
    while (!row.empty()) {
      auto it = rows.find(row[0].first);
      if (it == rows.end()) {
        Scalar scale = field.inv(row[0].second);
        for (auto& [id, c] : row) c = field.mul(c, scale);
        rows.emplace(row[0].first, std::move(row));
        return;
      }
      row = axpy(row, row[0].second, it->second);
    }
  }

  // Fully reduces a sparse id-indexed vector; reduction only introduces
  // larger ids, so one ascending sweep suffices.
  std::vector<std::pair<int, Scalar>> reduce(std::map<int, Scalar> work) const {
    std::vector<std::pair<int, Scalar>> out;
    while (!work.empty()) {
      auto [id, c] = *work.begin();
      work.erase(work.begin());
      if (field.is_zero(c)) continue;
      auto it = rows.find(id);
      if (it == rows.end()) {
        out.emplace_back(id, c);
        continue;
      }
      const auto& row = it->second;
      for (size_t k = 1; k < row.size(); ++k) {
        auto [slot, fresh] = work.try_emplace(row[k].first, field.zero());
        slot->second =
            field.sub(slot->second, field.mul(c, row[k].second));
        (void)fresh;
      }
    }
    return out;
  }
};

}  // namespace detail

namespace {

using detail::Truncation;

std::shared_ptr<Truncation> build_truncation(const Presentation& p, int L) {
  auto t = std::make_shared<Truncation>();
  t->L = L;
  t->narrows = static_cast<int>(p.quiver.arrows.size());
  t->nverts = static_cast<int>(p.quiver.vertices.size());
  t->field = p.field;

  // Intern words by length; within a length, extending parents in id order
  // by arrows in reverse declaration order keeps ids reverse lex.
  std::vector<int> block_start = {0};
  for (int v = 0; v < t->nverts; ++v) {
    t->base.push_back(v);
    t->target.push_back(v);
    t->parent.push_back(-1);
    t->last.push_back(-1);
    t->len.push_back(0);
  }
  block_start.push_back(t->nverts);
  for (int l = 1; l <= L; ++l) {
    for (int id = block_start[l - 1]; id < block_start[l]; ++id) {
      for (int a = t->narrows - 1; a >= 0; --a) {
        if (p.quiver.arrows[a].source != t->target[id]) continue;
        t->base.push_back(t->base[id]);
        t->target.push_back(p.quiver.arrows[a].target);
        t->parent.push_back(id);
        t->last.push_back(a);
        t->len.push_back(l);
      }
    }
    block_start.push_back(static_cast<int>(t->base.size()));
  }
  int total = static_cast<int>(t->base.size());
  t->ext.assign(static_cast<size_t>(total) * std::max(t->narrows, 1), -1);
  for (int id = t->nverts; id < total; ++id) {
    t->ext[static_cast<size_t>(t->parent[id]) * t->narrows + t->last[id]] = id;
  }

  // Row space: every shift u * rel * w, with terms longer than L dropped.
  // All shifts are generated; skipping shifts whose u or w reduces against
  // existing rows is not sound, because the implied rewriting into other
  // shifts need not terminate.
  for (const Element& rel : p.relations) {
    const Path& head = rel.terms.begin()->first;
    int src = head.source();
    int tgt = head.target(p.quiver);
    int min_len = head.length();
    std::vector<std::pair<std::vector<int>, Scalar>> terms;
    for (const auto& [path, c] : rel.terms) terms.emplace_back(path.arrows, c);

    for (int u = 0; u < total; ++u) {
      if (t->target[u] != src) continue;
      if (t->len[u] + min_len > L) continue;
      std::vector<int> mids(terms.size());
      for (size_t i = 0; i < terms.size(); ++i) {
        mids[i] = t->walk(u, terms[i].first);
      }
      // Depth-first over right shifts w, extending every term in step.
      int w_budget = L - t->len[u] - min_len;
      auto emit = [&](const std::vector<int>& ids) {
        std::map<int, Scalar> acc;
        for (size_t i = 0; i < ids.size(); ++i) {
          if (ids[i] < 0) continue;
          auto [slot, fresh] = acc.try_emplace(ids[i], t->field.zero());
          slot->second = t->field.add(slot->second, terms[i].second);
          (void)fresh;
        }
        std::vector<std::pair<int, Scalar>> row;
        for (auto& [id, c] : acc) {
          if (!t->field.is_zero(c)) row.emplace_back(id, c);
        }
        if (!row.empty()) t->insert_row(std::move(row));
      };
      struct Frame {
        int w;  // id of the right shift, starting at the trivial path
        int depth;
        std::vector<int> ids;
      };
      std::vector<Frame> stack;
      stack.push_back({tgt, 0, mids});
      while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        emit(f.ids);
        if (f.depth == w_budget) continue;
        for (int a = 0; a < t->narrows; ++a) {
          if (p.quiver.arrows[a].source != t->target[f.w]) continue;
          int w2 = t->extend(f.w, a);
          if (w2 < 0) continue;
          Frame g;
          g.w = w2;
          g.depth = f.depth + 1;
          g.ids.resize(f.ids.size());
          for (size_t i = 0; i < f.ids.size(); ++i) {
            g.ids[i] = f.ids[i] < 0 ? -1 : t->extend(f.ids[i], a);
          }
          stack.push_back(std::move(g));
        }
      }
    }
  }
  return t;
}

std::vector<Path> free_paths(const Truncation& t) {
  std::vector<Path> basis;
  int total = static_cast<int>(t.base.size());
  for (int id = 0; id < total; ++id) {
    if (!t.rows.count(id)) basis.push_back(t.path_of(id));
  }
  return basis;
}

}  // namespace

int QuotientAlgebra::basis_index(const Path& p) const {
  auto it = basis_index_.find(p);
  return it == basis_index_.end() ? -1 : it->second;
}

Element QuotientAlgebra::normal_form(const Element& x) const {
  const Truncation& t = *trunc_;
  std::map<int, Scalar> work;
  for (const auto& [path, c] : x.terms) {
    if (path.base_vertex < 0 || path.base_vertex >= t.nverts) {
      throw std::invalid_argument("path leaves the quiver");
    }
    if (path.length() > t.L) {
      throw TruncationExceeded("word of length " +
                               std::to_string(path.length()) +
                               " exceeds truncation length " +
                               std::to_string(t.L));
    }
    int id = t.walk(path.base_vertex, path.arrows);
    if (id < 0) throw std::invalid_argument("path leaves the quiver");
    auto [slot, fresh] = work.try_emplace(id, field().zero());
    slot->second = field().add(slot->second, c);
    (void)fresh;
  }
  Element out;
  for (const auto& [id, c] : t.reduce(std::move(work))) {
    out.add_term(field(), t.path_of(id), c);
  }
  return out;
}

bool QuotientAlgebra::reduces_to_zero(const Element& x) const {
  return normal_form(x).is_zero();
}

QuotientAlgebra::Coords QuotientAlgebra::coords_of(const Element& x) const {
  Coords c(basis_.size(), field().zero());
  for (const auto& [path, s] : x.terms) {
    int i = basis_index(path);
    if (i < 0) {
      throw std::invalid_argument("not a basis path: " +
                                  path_to_string(quiver(), path));
    }
    c[i] = field().add(c[i], s);
  }
  return c;
}

Element QuotientAlgebra::element_of(const Coords& c) const {
  if (c.size() != basis_.size()) {
    throw std::invalid_argument("coordinate vector has wrong length");
  }
  Element x;
  for (size_t i = 0; i < c.size(); ++i) x.add_term(field(), basis_[i], c[i]);
  return x;
}

QuotientAlgebra::Coords QuotientAlgebra::mul_coords(const Coords& x,
                                                    const Coords& y) const {
  if (x.size() != basis_.size() || y.size() != basis_.size()) {
    throw std::invalid_argument("coordinate vector has wrong length");
  }
  Coords out(basis_.size(), field().zero());
  for (size_t i = 0; i < x.size(); ++i) {
    if (field().is_zero(x[i])) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (field().is_zero(y[j])) continue;
      Scalar c = field().mul(x[i], y[j]);
      for (const auto& [k, s] :
           table_at(static_cast<int>(i), static_cast<int>(j))) {
        out[k] = field().add(out[k], field().mul(c, s));
      }
    }
  }
  return out;
}

QuotientAlgebra::Coords QuotientAlgebra::extend_coords(const Coords& x,
                                                       int arrow) const {
  if (x.size() != basis_.size()) {
    throw std::invalid_argument("coordinate vector has wrong length");
  }
  if (arrow < 0 || arrow >= static_cast<int>(quiver().arrows.size())) {
    throw std::invalid_argument("arrow index out of range");
  }
  Coords out(basis_.size(), field().zero());
  for (size_t i = 0; i < x.size(); ++i) {
    if (field().is_zero(x[i])) continue;
    for (const auto& [k, s] : trunc_->basis_ext[i][arrow]) {
      out[k] = field().add(out[k], field().mul(x[i], s));
    }
  }
  return out;
}

Element QuotientAlgebra::multiply(const Element& x, const Element& y) const {
  return element_of(mul_coords(coords_of(x), coords_of(y)));
}

const Element& QuotientAlgebra::structure_constant(int i, int j) const {
  int dim = dimension();
  if (i < 0 || i >= dim || j < 0 || j >= dim) {
    throw std::out_of_range("basis index out of range");
  }
  return table_elements_[static_cast<size_t>(i) * dim + j];
}

QuotientAlgebra build_quotient(const Presentation& p, int max_len) {
  for (const Element& rel : p.relations) {
    for (const auto& [path, c] : rel.terms) {
      if (path.length() < 2) {
        throw NotAdmissible("relation term " + path_to_string(p.quiver, path) +
                            " has length < 2");
      }
    }
  }
  validate_presentation(p);

  int start = 2;
  for (const Element& rel : p.relations) {
    for (const auto& [path, c] : rel.terms) {
      start = std::max(start, path.length());
    }
  }
  if (start > max_len) throw NotFiniteWithinBound(max_len);

  // Accept a level once it reproduces the previous level's basis: equality
  // of the quotients modulo words longer than L and L+1 forces, by a
  // Nakayama induction, equality with the presented quotient itself.
  std::shared_ptr<Truncation> trunc;
  std::vector<Path> basis;
  bool accepted = false;
  std::vector<Path> prev;
  bool have_prev = false;
  for (int L = start; L <= max_len; ++L) {
    trunc = build_truncation(p, L);
    basis = free_paths(*trunc);
    if (have_prev && basis == prev) {
      accepted = true;
      break;
    }
    prev = std::move(basis);
    have_prev = true;
  }
  if (!accepted) throw NotFiniteWithinBound(max_len);

  QuotientAlgebra alg;
  alg.pres_ = p;
  alg.trunc_ = trunc;
  std::sort(basis.begin(), basis.end(), lenlex_less);
  alg.basis_ = std::move(basis);
  int dim = alg.dimension();
  for (int i = 0; i < dim; ++i) alg.basis_index_.emplace(alg.basis_[i], i);
  const Field& k = p.field;
  Truncation& t = *trunc;

  // Closure checks on the accepted basis.
  for (int v = 0; v < t.nverts; ++v) {
    if (alg.basis_index(Path{v, {}}) < 0) {
      throw std::logic_error("internal consistency: missing trivial path");
    }
  }
  int max_basis_len = 0;
  for (const Path& b : alg.basis_) {
    max_basis_len = std::max(max_basis_len, b.length());
    for (size_t from = 0; from < b.arrows.size(); ++from) {
      Path sub;
      sub.base_vertex = from == 0 ? b.base_vertex
                                  : p.quiver.arrows[b.arrows[from - 1]].target;
      for (size_t n = 1; from + n <= b.arrows.size(); ++n) {
        sub.arrows.push_back(b.arrows[from + n - 1]);
        if (alg.basis_index(sub) < 0) {
          throw std::logic_error("internal consistency: basis not subword "
                                 "closed");
        }
      }
    }
  }
  if (max_basis_len >= t.L) {
    throw std::logic_error("internal consistency: basis reaches the "
                           "truncation boundary");
  }

  // Single-arrow extension table, the primitive everything else uses.
  t.basis_ext.assign(dim, {});
  std::vector<int> basis_id(dim);
  std::vector<int> id_to_basis(t.base.size(), -1);
  for (int i = 0; i < dim; ++i) {
    basis_id[i] = t.walk(alg.basis_[i].base_vertex, alg.basis_[i].arrows);
    id_to_basis[basis_id[i]] = i;
  }
  for (int i = 0; i < dim; ++i) {
    t.basis_ext[i].resize(std::max(t.narrows, 1));
    for (int a = 0; a < t.narrows; ++a) {
      if (p.quiver.arrows[a].source != t.target[basis_id[i]]) continue;
      int id = t.extend(basis_id[i], a);
      if (id < 0) {
        throw std::logic_error("internal consistency: extension leaves the "
                               "truncation");
      }
      std::map<int, Scalar> work;
      work.emplace(id, k.one());
      for (const auto& [rid, c] : t.reduce(std::move(work))) {
        t.basis_ext[i][a].emplace_back(id_to_basis[rid], c);
      }
    }
  }

  // Full table by extending along the arrows of the right factor; the
  // right factor minus its last arrow is an earlier basis path.
  alg.table_.assign(static_cast<size_t>(dim) * dim, {});
  auto extend_sparse = [&](const std::vector<std::pair<int, Scalar>>& x,
                           int a) {
    std::map<int, Scalar> acc;
    for (const auto& [i, c] : x) {
      for (const auto& [j, s] : t.basis_ext[i][a]) {
        auto [slot, fresh] = acc.try_emplace(j, k.zero());
        slot->second = k.add(slot->second, k.mul(c, s));
        (void)fresh;
      }
    }
    std::vector<std::pair<int, Scalar>> out;
    for (auto& [j, c] : acc) {
      if (!k.is_zero(c)) out.emplace_back(j, c);
    }
    return out;
  };
  for (int j = 0; j < dim; ++j) {
    const Path& bj = alg.basis_[j];
    if (bj.arrows.empty()) {
      for (int i = 0; i < dim; ++i) {
        if (alg.basis_[i].target(p.quiver) == bj.base_vertex) {
          alg.table_[static_cast<size_t>(i) * dim + j] = {{i, k.one()}};
        }
      }
      continue;
    }
    Path prefix = bj;
    int a = prefix.arrows.back();
    prefix.arrows.pop_back();
    int jp = alg.basis_index(prefix);
    for (int i = 0; i < dim; ++i) {
      alg.table_[static_cast<size_t>(i) * dim + j] =
          extend_sparse(alg.table_[static_cast<size_t>(i) * dim + jp], a);
    }
  }
  alg.table_elements_.resize(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Element e;
      for (const auto& [idx, c] : alg.table_[static_cast<size_t>(i) * dim + j]) {
        e.add_term(k, alg.basis_[idx], c);
      }
      alg.table_elements_[static_cast<size_t>(i) * dim + j] = std::move(e);
    }
  }

  // The table must be unital and associative and must kill every relation.
  auto unit_vec = [&](int i) {
    QuotientAlgebra::Coords c(dim, k.zero());
    c[i] = k.one();
    return c;
  };
  QuotientAlgebra::Coords one(dim, k.zero());
  for (int v = 0; v < t.nverts; ++v) {
    one[alg.basis_index(Path{v, {}})] = k.one();
  }
  auto equal = [&](const QuotientAlgebra::Coords& x,
                   const QuotientAlgebra::Coords& y) {
    for (int i = 0; i < dim; ++i) {
      if (!k.is_zero(k.sub(x[i], y[i]))) return false;
    }
    return true;
  };
  for (int i = 0; i < dim; ++i) {
    if (!equal(alg.mul_coords(one, unit_vec(i)), unit_vec(i)) ||
        !equal(alg.mul_coords(unit_vec(i), one), unit_vec(i))) {
      throw std::logic_error("internal consistency: table is not unital");
    }
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      auto ij = alg.mul_coords(unit_vec(i), unit_vec(j));
      for (int l = 0; l < dim; ++l) {
        if (!equal(alg.mul_coords(ij, unit_vec(l)),
                   alg.mul_coords(unit_vec(i),
                                  alg.mul_coords(unit_vec(j), unit_vec(l))))) {
          throw std::logic_error("internal consistency: table is not "
                                 "associative");
        }
      }
    }
  }
  for (const Element& rel : p.relations) {
    QuotientAlgebra::Coords acc(dim, k.zero());
    for (const auto& [path, c] : rel.terms) {
      QuotientAlgebra::Coords cur = unit_vec(alg.basis_index(Path{path.source(), {}}));
      for (int a : path.arrows) cur = alg.extend_coords(cur, a);
      for (int i = 0; i < dim; ++i) {
        acc[i] = k.add(acc[i], k.mul(c, cur[i]));
      }
    }
    for (int i = 0; i < dim; ++i) {
      if (!k.is_zero(acc[i])) {
        throw std::logic_error("internal consistency: relation does not "
                               "vanish through the table");
      }
    }
  }

  alg.cert_.stabilized_at = t.L;
  alg.cert_.verified_closure = true;

  // Reduction never shortens a word, so the i-th radical power is spanned
  // by the basis paths of length >= i.
  for (int l = 1; l <= max_basis_len; ++l) {
    int count = 0;
    for (const Path& b : alg.basis_) {
      if (b.length() >= l) ++count;
    }
    alg.radical_dims_.push_back(count);
  }
  return alg;
}

std::vector<int> radical_series(const QuotientAlgebra& a) {
  const Field& k = a.field();
  int dim = a.dimension();
  int narrows = static_cast<int>(a.quiver().arrows.size());
  // Span maintained in row echelon form over the basis coordinates.
  std::vector<QuotientAlgebra::Coords> echelon;
  auto insert = [&](QuotientAlgebra::Coords v) {
    for (const auto& row : echelon) {
      int lead = 0;
      while (k.is_zero(row[lead])) ++lead;
      if (!k.is_zero(v[lead])) {
        Scalar c = v[lead];
        for (int i = 0; i < dim; ++i) {
          v[i] = k.sub(v[i], k.mul(c, row[i]));
        }
      }
    }
    int lead = 0;
    while (lead < dim && k.is_zero(v[lead])) ++lead;
    if (lead == dim) return false;
    Scalar c = k.inv(v[lead]);
    for (int i = 0; i < dim; ++i) v[i] = k.mul(v[i], c);
    echelon.push_back(std::move(v));
    std::sort(echelon.begin(), echelon.end(),
              [&](const auto& x, const auto& y) {
                int lx = 0, ly = 0;
                while (k.is_zero(x[lx])) ++lx;
                while (k.is_zero(y[ly])) ++ly;
                return lx < ly;
              });
    return true;
  };
  std::vector<QuotientAlgebra::Coords> generators;
  for (int i = 0; i < dim; ++i) {
    if (a.basis()[i].length() == 0) continue;
    QuotientAlgebra::Coords v(dim, k.zero());
    v[i] = k.one();
    generators.push_back(std::move(v));
  }
  std::vector<int> dims;
  while (true) {
    echelon.clear();
    for (const auto& g : generators) insert(g);
    if (echelon.empty()) break;
    dims.push_back(static_cast<int>(echelon.size()));
    std::vector<QuotientAlgebra::Coords> next;
    for (const auto& v : echelon) {
      for (int arrow = 0; arrow < narrows; ++arrow) {
        next.push_back(a.extend_coords(v, arrow));
      }
    }
    generators = std::move(next);
  }
  return dims;
}

bool is_connected(const Quiver& q) {
  int n = static_cast<int>(q.vertices.size());
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> todo = {0};
  seen[0] = true;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (const Arrow& a : q.arrows) {
      int other = -1;
      if (a.source == v && !seen[a.target]) other = a.target;
      if (a.target == v && !seen[a.source]) other = a.source;
      if (other >= 0) {
        seen[other] = true;
        todo.push_back(other);
      }
    }
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

}  // namespace qga
