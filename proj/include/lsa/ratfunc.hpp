#pragma once
#include <string>

#include "lsa/multipoly.hpp"

namespace lsa {

// Quotient of polynomials. Normalized so that the denominator has leading
// coefficient 1, common monomial factors are removed, and univariate common
// factors are cancelled.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Gaussian& c) : num_(c), den_(1) {}
  RatFunc(const MultiPoly& p) : num_(p), den_(1) {}
  RatFunc(const MultiPoly& n, const MultiPoly& d);
  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(1); }
  static RatFunc var(const std::string& name) { return RatFunc(MultiPoly::var(name)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Gaussian constant_value() const;
  std::vector<std::string> vars() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  RatFunc pow(int k) const;

  // Partial substitution; throws DenominatorVanishes.
  RatFunc substitute(const Bindings& b) const;
  // Full evaluation; throws UnboundVariable or DenominatorVanishes.
  Gaussian evaluate(const Bindings& b) const;

  std::string str() const;
  bool is_compound() const;

 private:
  RatFunc(MultiPoly n, MultiPoly d, bool /*already normalized*/) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();
  MultiPoly num_, den_;
};

}  // namespace lsa
