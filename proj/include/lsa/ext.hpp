#pragma once
#include <memory>
#include <string>
#include <vector>

#include "lsa/poly1.hpp"

namespace lsa {

using ExtField = std::shared_ptr<const Poly1>;

// Element of Q(i)[t]/(m) for an irreducible monic m of degree 2 or 3.
// A null field means the element is a plain Gaussian rational; such values
// combine with any field.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(long c) : v_(Poly1::constant(Gaussian(c))) {}
  ExtScalar(const Gaussian& c) : v_(Poly1::constant(c)) {}
  ExtScalar(ExtField f, const Poly1& v);
  static ExtScalar zero() { return ExtScalar(); }
  static ExtScalar one() { return ExtScalar(1); }
  // Checks monic, degree 2..3 and irreducibility; throws DomainMismatch otherwise.
  static ExtField make_field(const Poly1& modulus);
  static ExtScalar generator(const ExtField& f) { return ExtScalar(f, Poly1({Gaussian(), Gaussian(1)})); }

  const ExtField& field() const { return f_; }
  const Poly1& value() const { return v_; }
  // Coefficients of 1, t, ..., t^(deg-1).
  std::vector<Gaussian> coeffs() const;
  bool is_zero() const { return v_.is_zero(); }
  bool is_base() const { return v_.degree() <= 0; }
  Gaussian base_value() const { return v_.coeff(0); }

  ExtScalar operator-() const { return ExtScalar(f_, -v_); }
  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) { return a * b.inverse(); }
  ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
  ExtScalar& operator-=(const ExtScalar& o) { return *this = *this - o; }
  ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }
  ExtScalar& operator/=(const ExtScalar& o) { return *this = *this / o; }
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) { return a.v_ == b.v_; }
  ExtScalar inverse() const;

  std::string str() const;

 private:
  static ExtField common(const ExtScalar& a, const ExtScalar& b);
  ExtField f_;
  Poly1 v_;
};

}  // namespace lsa
