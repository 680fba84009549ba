#include "lsa/gaussian.hpp"

#include "lsa/errors.hpp"

namespace lsa {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  if (sgn(q.get_den()) == 0) throw DivisionByZero("zero denominator in " + s);
  return q;
}

std::optional<Rational> sqrt_exact(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Gaussian> sqrt_exact(const Gaussian& z) {
  if (z.is_zero()) return Gaussian();
  auto r = sqrt_exact(z.norm());
  if (!r) return std::nullopt;
  Rational x2 = (z.re() + *r) / 2, y2 = (*r - z.re()) / 2;
  auto x = sqrt_exact(x2), y = sqrt_exact(y2);
  if (!x || !y) return std::nullopt;
  Rational yy = *y;
  if (sgn(z.im()) < 0) yy = -yy;
  Gaussian w(*x, yy);
  if (w * w == z) return w;
  w = Gaussian(*x, -yy);
  if (w * w == z) return w;
  return std::nullopt;
}

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = m;
  return *this;
}
Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

std::string Gaussian::str() const {
  if (sgn(im_) == 0) return to_string(re_);
  std::string ims;
  if (im_ == 1) ims = "i";
  else if (im_ == -1) ims = "-i";
  else ims = to_string(im_) + "*i";
  if (sgn(re_) == 0) return ims;
  return to_string(re_) + (sgn(im_) > 0 ? "+" : "") + ims;
}

}  // namespace lsa
