#pragma once
#include <string>
#include <utility>
#include <vector>

#include "lsa/gaussian.hpp"

namespace lsa {

// Dense univariate polynomial over Q(i); c[k] is the coefficient of t^k.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Gaussian> c) : c_(std::move(c)) { trim(); }
  static Poly1 constant(const Gaussian& a) { return Poly1({a}); }
  static Poly1 monomial(const Gaussian& a, int k);
  static Poly1 linear_root(const Gaussian& r) { return Poly1({-r, Gaussian(1)}); }  // t - r

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Gaussian& lead() const { return c_.back(); }
  Gaussian coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Gaussian(); }
  const std::vector<Gaussian>& coeffs() const { return c_; }

  Poly1 monic() const;
  Gaussian eval(const Gaussian& x) const;
  Poly1 derivative() const;

  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  Poly1 operator-() const;
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

  // Quotient and remainder; throws DivisionByZero on zero divisor.
  static std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
  static Poly1 gcd(Poly1 a, Poly1 b);  // monic, or zero
  // Returns (g, s) with s*a = g mod m, g = gcd(a, m).
  static std::pair<Poly1, Poly1> inverse_mod(const Poly1& a, const Poly1& m);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Gaussian> c_;
};

struct Factor {
  Poly1 factor;  // monic, irreducible over Q(i)
  int multiplicity;
};

struct Factorization {
  Gaussian lead;
  std::vector<Factor> factors;  // ordered by degree, then coefficients
};

// Complete factorization over Q(i) for degree <= 4; throws DegreeTooHigh otherwise.
Factorization factor_low_degree(const Poly1& p);
// Roots in Q(i), with multiplicity.
std::vector<std::pair<Gaussian, int>> roots_in_qi(const Poly1& p);

}  // namespace lsa
