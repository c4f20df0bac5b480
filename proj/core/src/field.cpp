#include "qga/field.hpp"

#include <sstream>

namespace qga {

namespace {

// F4 multiplication on codes 0, 1, w = 2, w + 1 = 3 under w^2 = w + 1.
constexpr int kGf4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
constexpr int kGf4Inv[4] = {0, 1, 3, 2};

int code_of(const Scalar& a) {
  return static_cast<int>(numerator(a.v));
}

}  // namespace

Field Field::prime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw std::invalid_argument("unsupported prime field F" +
                                std::to_string(p));
  }
  Field f;
  f.kind_ = FieldKind::prime;
  f.order_ = p;
  return f;
}

Field Field::gf4() {
  Field f;
  f.kind_ = FieldKind::gf4;
  f.order_ = 4;
  return f;
}

Field Field::from_name(const std::string& name) {
  if (name == "Q") return rationals();
  if (name == "F2") return prime(2);
  if (name == "F3") return prime(3);
  if (name == "F4") return gf4();
  if (name == "F5") return prime(5);
  if (name == "F7") return prime(7);
  throw std::invalid_argument("unknown field " + name);
}

std::string Field::name() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "F" + std::to_string(order_);
}

Scalar Field::from_integer(const Int& n) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(Rational(n));
    case FieldKind::prime: {
      Int r = n % order_;
      if (r < 0) r += order_;
      return Scalar(Rational(r));
    }
    case FieldKind::gf4: {
      // The prime field of F4 is F2.
      Int r = n % 2;
      if (r < 0) r += 2;
      return Scalar(Rational(r));
    }
  }
  throw std::logic_error("bad field kind");
}

Scalar Field::from_rational(const Rational& r) const {
  if (kind_ == FieldKind::rationals) return Scalar(r);
  Scalar num = from_integer(numerator(r));
  Scalar den = from_integer(denominator(r));
  return mul(num, inv(den));
}

Scalar Field::nth(int i) const {
  if (kind_ == FieldKind::rationals) return Scalar(Rational(i));
  if (i < 0 || i >= order_) throw std::invalid_argument("scalar index");
  return Scalar(Rational(i));
}

int Field::index_of(const Scalar& s) const {
  if (kind_ == FieldKind::rationals) {
    throw std::invalid_argument("index_of needs a finite field");
  }
  return code_of(s);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(a.v + b.v);
    case FieldKind::prime: {
      Int r = numerator(a.v) + numerator(b.v);
      if (r >= order_) r -= order_;
      return Scalar(Rational(r));
    }
    case FieldKind::gf4:
      return Scalar(Rational(code_of(a) ^ code_of(b)));
  }
  throw std::logic_error("bad field kind");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  return add(a, neg(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(a.v * b.v);
    case FieldKind::prime:
      return Scalar(Rational((numerator(a.v) * numerator(b.v)) % order_));
    case FieldKind::gf4:
      return Scalar(Rational(kGf4Mul[code_of(a)][code_of(b)]));
  }
  throw std::logic_error("bad field kind");
}

Scalar Field::neg(const Scalar& a) const {
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(-a.v);
    case FieldKind::prime: {
      if (a.v == 0) return a;
      return Scalar(Rational(order_ - numerator(a.v)));
    }
    case FieldKind::gf4:
      return a;  // characteristic 2
  }
  throw std::logic_error("bad field kind");
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::invalid_argument("inverse of zero");
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(Rational(1) / a.v);
    case FieldKind::prime: {
      // Fermat: a^(p-2).
      Scalar r = one();
      for (int e = 0; e < order_ - 2; ++e) r = mul(r, a);
      return r;
    }
    case FieldKind::gf4:
      return Scalar(Rational(kGf4Inv[code_of(a)]));
  }
  throw std::logic_error("bad field kind");
}

std::string Field::str(const Scalar& a) const {
  if (kind_ == FieldKind::gf4) {
    static const char* names[4] = {"0", "1", "w", "w+1"};
    return names[code_of(a)];
  }
  std::ostringstream os;
  os << a.v;
  return os.str();
}

}  // namespace qga
