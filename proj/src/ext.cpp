#include "lsa/ext.hpp"

#include "lsa/errors.hpp"

namespace lsa {

ExtScalar::ExtScalar(ExtField f, const Poly1& v) : f_(std::move(f)) {
  v_ = f_ ? Poly1::divmod(v, *f_).second : v;
  if (!f_ && v_.degree() > 0) throw DomainMismatch("extension element without a field");
}

ExtField ExtScalar::make_field(const Poly1& m) {
  if (m.degree() < 2 || m.degree() > 3) throw ExtensionDegreeTooHigh("extension degree must be 2 or 3");
  if (!m.lead().is_one()) throw DomainMismatch("modulus must be monic");
  auto f = factor_low_degree(m);
  if (f.factors.size() != 1 || f.factors[0].multiplicity != 1)
    throw DomainMismatch("modulus " + m.str() + " is reducible over Q(i)");
  return std::make_shared<const Poly1>(m);
}

ExtField ExtScalar::common(const ExtScalar& a, const ExtScalar& b) {
  if (!a.f_) return b.f_;
  if (!b.f_ || a.f_ == b.f_ || *a.f_ == *b.f_) return a.f_;
  throw DomainMismatch("elements of different extension fields");
}

std::vector<Gaussian> ExtScalar::coeffs() const {
  int n = f_ ? f_->degree() : 1;
  std::vector<Gaussian> c(n);
  for (int k = 0; k < n; ++k) c[k] = v_.coeff(k);
  return c;
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  ExtScalar r;
  r.f_ = ExtScalar::common(a, b);
  r.v_ = a.v_ + b.v_;
  return r;
}

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  ExtField f = ExtScalar::common(a, b);
  return ExtScalar(f, a.v_ * b.v_);
}

ExtScalar ExtScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (!f_ || is_base()) return ExtScalar(f_, Poly1::constant(v_.coeff(0).inverse()));
  auto [g, s] = Poly1::inverse_mod(v_, *f_);
  if (g.degree() != 0) throw DivisionByZero("non-invertible element (reducible modulus)");
  return ExtScalar(f_, s);
}

std::string ExtScalar::str() const {
  if (is_base()) return v_.coeff(0).str();
  return "[" + v_.str("t") + " mod " + f_->str("t") + "]";
}

}  // namespace lsa
