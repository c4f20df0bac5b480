// Finite-dimensional quotients of path algebras.  build_quotient works in
// the truncated path space of length <= L for growing L: it row-reduces the
// span of all shifted relations u*rel*w (terms beyond length L drop out,
// which is computing modulo paths of length > L) and reads the monomial
// basis off the free columns.  Column order is length first, then reverse
// lex in declared arrow order, so each pivot eliminates the shortest path
// of a row and ties keep the lex-smallest representative.  A level is
// accepted once it reproduces the previous level's basis: equality of the
// two truncated quotients propagates to all longer truncations (multiply
// the ideal identity by the arrow ideal and induct), so for an admissible
// ideal the accepted answer is the presented quotient itself.  On top of
// that, acceptance re-verifies closure: the basis is subword closed and
// shorter than the truncation, products of basis paths with arrows reduce
// back into the basis span, the induced multiplication table is unital
// and associative on all basis triples, and every relation evaluates to
// zero through the table.

#pragma once

#include "qga/presentation.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qga {

struct NotFiniteWithinBound : std::runtime_error {
  int max_len;
  explicit NotFiniteWithinBound(int bound)
      : std::runtime_error("quotient did not stabilize within truncation "
                           "length " +
                           std::to_string(bound)),
        max_len(bound) {}
};

struct NotAdmissible : std::runtime_error {
  explicit NotAdmissible(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationExceeded : std::runtime_error {
  explicit TruncationExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct StabilizationCertificate {
  int stabilized_at = 0;
  bool verified_closure = false;
};

namespace detail {
struct Truncation;
}

class QuotientAlgebra {
 public:
  const Presentation& presentation() const { return pres_; }
  const Field& field() const { return pres_.field; }
  const Quiver& quiver() const { return pres_.quiver; }

  // Normal-form paths in length-lex order, trivial paths first.
  const std::vector<Path>& basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int basis_index(const Path& p) const;  // -1 when p is not a basis path

  const StabilizationCertificate& certificate() const { return cert_; }
  int truncation_length() const { return cert_.stabilized_at; }

  // Layer dimensions of the arrow-ideal filtration, top layer first,
  // until the first zero power.
  const std::vector<int>& radical_dims() const { return radical_dims_; }

  // Reduction into the basis span.  Paths of x may be arbitrary words of
  // length <= truncation_length(); longer words throw TruncationExceeded.
  Element normal_form(const Element& x) const;
  bool reduces_to_zero(const Element& x) const;

  // Product of elements of the basis span (throws std::invalid_argument
  // when a term is not a basis path).
  Element multiply(const Element& x, const Element& y) const;
  const Element& structure_constant(int i, int j) const;

  // Dense coordinate interface over the basis.
  using Coords = std::vector<Scalar>;
  Coords coords_of(const Element& x) const;
  Element element_of(const Coords& c) const;
  Coords mul_coords(const Coords& x, const Coords& y) const;
  // x * b_j extended by a single arrow, the primitive the table is built
  // from.
  Coords extend_coords(const Coords& x, int arrow) const;

  friend QuotientAlgebra build_quotient(const Presentation& p, int max_len);

 private:
  Presentation pres_;
  std::vector<Path> basis_;
  std::map<Path, int, PathLenLex> basis_index_;
  StabilizationCertificate cert_;
  std::vector<int> radical_dims_;
  // (i, j) -> sparse list of (k, c) with b_i b_j = sum c b_k.
  std::vector<std::vector<std::pair<int, Scalar>>> table_;
  mutable std::vector<Element> table_elements_;
  std::shared_ptr<detail::Truncation> trunc_;

  const std::vector<std::pair<int, Scalar>>& table_at(int i, int j) const {
    return table_[static_cast<size_t>(i) * basis_.size() + j];
  }
};

// Throws NotAdmissible when a relation has a path of length < 2 and
// NotFiniteWithinBound when no truncation length <= max_len certifies.
QuotientAlgebra build_quotient(const Presentation& p, int max_len = 50);

std::vector<int> radical_series(const QuotientAlgebra& a);

bool is_connected(const Quiver& q);

}  // namespace qga
