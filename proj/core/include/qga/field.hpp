// Exact scalar arithmetic for the supported coefficient fields: the
// rationals and the finite fields F2, F3, F4, F5, F7.  F4 is modeled as
// F2[w]/(w^2 + w + 1) with elements encoded 0, 1, w = 2, w + 1 = 3.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qga {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Value of a field element.  For finite fields the canonical integer
// representative is stored in the numerator.
struct Scalar {
  Rational v;

  Scalar() = default;
  explicit Scalar(Rational r) : v(std::move(r)) {}

  bool operator==(const Scalar& o) const { return v == o.v; }
  bool operator!=(const Scalar& o) const { return v != o.v; }
  bool operator<(const Scalar& o) const { return v < o.v; }
};

enum class FieldKind { rationals, prime, gf4 };

class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals() { return Field(); }
  static Field prime(int p);
  static Field gf4();
  // Accepts "Q", "F2", "F3", "F4", "F5", "F7".
  static Field from_name(const std::string& name);

  FieldKind kind() const { return kind_; }
  // 0 for the rationals, q for a finite field of q elements.
  int order() const { return order_; }
  std::string name() const;
  bool is_finite() const { return kind_ != FieldKind::rationals; }

  Scalar zero() const { return Scalar(Rational(0)); }
  Scalar one() const { return from_integer(1); }
  Scalar from_integer(const Int& n) const;
  Scalar from_rational(const Rational& r) const;
  // Element with canonical encoding i in [0, order); identity on Q.
  Scalar nth(int i) const;
  // Position of a scalar in the canonical enumeration (finite fields only).
  int index_of(const Scalar& s) const;

  bool is_zero(const Scalar& a) const { return a.v == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero

  std::string str(const Scalar& a) const;

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && order_ == o.order_;
  }

 private:
  FieldKind kind_ = FieldKind::rationals;
  int order_ = 0;
};

}  // namespace qga
