#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>

namespace lsa {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);
std::optional<Rational> sqrt_exact(const Rational& q);

// Element re + im*i of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long v) : re_(v) {}
  Gaussian(const Rational& re, const Rational& im = 0) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian zero() { return Gaussian(); }
  static Gaussian one() { return Gaussian(1); }
  static Gaussian I() { return Gaussian(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_rational() const { return sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); only for deterministic ordering.
  friend bool operator<(const Gaussian& a, const Gaussian& b) {
    return a.re_ != b.re_ ? a.re_ < b.re_ : a.im_ < b.im_;
  }

  // Plain form such as "3", "-1/2", "i", "1/2-3*i".
  std::string str() const;
  // True when str() needs parentheses as a factor.
  bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

 private:
  Rational re_, im_;
};

std::optional<Gaussian> sqrt_exact(const Gaussian& z);

}  // namespace lsa
