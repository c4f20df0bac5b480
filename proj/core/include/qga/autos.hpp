// Automorphism evidence over finite fields.  Candidates fix the trivial
// paths and send each arrow to a radical element parallel to it; such a
// candidate extends multiplicatively to the basis.  Exhaustive enumeration
// over all image tuples, pruned by checking each relation as soon as all
// of its arrows are assigned, yields the full list together with a
// unipotence report for (M - I)^dim.

#pragma once

#include "qga/algebra.hpp"

#include <stdexcept>
#include <vector>

namespace qga {

struct SearchSpaceExceeded : std::runtime_error {
  Int estimate;
  Int cap;
  SearchSpaceExceeded(Int estimate_, Int cap_)
      : std::runtime_error("search space of size " + estimate_.str() +
                           " exceeds cap " + cap_.str()),
        estimate(std::move(estimate_)),
        cap(std::move(cap_)) {}
};

struct AutomorphismCandidate {
  std::vector<Element> images;  // per arrow, in declaration order
  // Column j holds the coordinates of the image of basis path j.
  std::vector<QuotientAlgebra::Coords> matrix;
};

// Validates that every image is parallel to its arrow and lies in the
// radical span, then extends multiplicatively.  Throws
// std::invalid_argument on invalid images.
AutomorphismCandidate candidate_from_images(const QuotientAlgebra& a,
                                            std::vector<Element> images);

// Every relation maps to zero under the multiplicative extension.
bool is_homomorphism(const QuotientAlgebra& a,
                     const AutomorphismCandidate& c);

// The induced matrix has full rank.
bool is_invertible(const QuotientAlgebra& a, const AutomorphismCandidate& c);

// (M - I)^dim == 0.  Requires an automorphism; throws
// std::invalid_argument when the candidate is not one.
bool is_unipotent(const QuotientAlgebra& a, const AutomorphismCandidate& c);

struct UnipotenceReport {
  Int searched = 0;  // image tuples considered before pruning
  int count = 0;     // automorphisms found
  bool all_unipotent = true;
  std::vector<int> non_unipotent;  // indices into the automorphism list
};

struct EnumerationResult {
  std::vector<AutomorphismCandidate> automorphisms;
  UnipotenceReport report;
};

struct EnumerationOptions {
  Int cap = Int(1) << 24;
  int jobs = 1;
};

// Product over arrows of q^(parallel radical basis paths).
Int enumeration_estimate(const QuotientAlgebra& a);

// Requires a finite coefficient field; throws SearchSpaceExceeded when the
// estimate exceeds the cap.  Deterministic order (image coefficient tuples
// ascending); parallel runs produce the identical list.
EnumerationResult enumerate_automorphisms(const QuotientAlgebra& a,
                                          const EnumerationOptions& opt = {});

// Conjugation x -> u x u^{-1} as a candidate (verified, not assumed).
// Throws std::invalid_argument when u is not invertible or the conjugate
// images are not parallel to the arrows.
AutomorphismCandidate inner_automorphism(const QuotientAlgebra& a,
                                         const Element& u);

}  // namespace qga
