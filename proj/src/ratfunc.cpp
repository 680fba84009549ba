#include "lsa/ratfunc.hpp"

#include <algorithm>

#include "lsa/errors.hpp"

namespace lsa {

RatFunc::RatFunc(const MultiPoly& n, const MultiPoly& d) : num_(n), den_(d) { normalize(); }

namespace {

// gcd of all groups of p when viewed as polynomials in `name`, combined with g.
Poly1 gcd_groups(const MultiPoly& p, const std::string& name, Poly1 g) {
  for (auto& [e, q] : p.group_by(name, nullptr)) {
    g = Poly1::gcd(g, q);
    if (g.degree() <= 0) break;
  }
  return g;
}

}  // namespace

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  // common monomial content
  std::map<std::string, int> common;
  for (const auto& v : den_.vars()) {
    if (!num_.has_var(v)) continue;
    int m = 1 << 30;
    for (const MultiPoly* p : {&num_, &den_}) {
      size_t k = std::lower_bound(p->vars().begin(), p->vars().end(), v) - p->vars().begin();
      for (auto& [e, c] : p->terms()) m = std::min(m, e[k]);
    }
    if (m > 0) common[v] = m;
  }
  if (!common.empty()) {
    num_ = num_.divide_monomial(common);
    den_ = den_.divide_monomial(common);
  }
  // univariate common factors
  const MultiPoly* uni = nullptr;
  const MultiPoly* other = nullptr;
  if (den_.vars().size() == 1) {
    uni = &den_;
    other = &num_;
  } else if (num_.vars().size() == 1 && !den_.is_constant()) {
    uni = &num_;
    other = &den_;
  }
  if (uni) {
    std::string x = uni->vars().front();
    Poly1 g = gcd_groups(*other, x, uni->to_poly1(x));
    if (g.degree() >= 1) {
      num_ = *num_.divide_by(g, x);
      den_ = *den_.divide_by(g, x);
    }
  }
  Gaussian lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Gaussian inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Gaussian RatFunc::constant_value() const {
  if (!is_constant()) throw DomainMismatch("not a constant: " + str());
  return num_.constant_value() / den_.constant_value();
}

std::vector<std::string> RatFunc::vars() const {
  std::vector<std::string> u;
  std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(), den_.vars().end(),
                 std::back_inserter(u));
  return u;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ * b.num_, MultiPoly(1), true);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return RatFunc(1) / pow(-k);
  return RatFunc(num_.pow(k), den_.pow(k));
}

RatFunc RatFunc::substitute(const Bindings& b) const {
  MultiPoly d = den_.substitute(b);
  if (d.is_zero()) throw DenominatorVanishes("denominator " + den_.str() + " vanishes");
  return RatFunc(num_.substitute(b), d);
}

Gaussian RatFunc::evaluate(const Bindings& b) const {
  RatFunc r = substitute(b);
  if (!r.is_constant()) throw UnboundVariable("unbound variable " + r.vars().front());
  return r.constant_value();
}

bool RatFunc::is_compound() const { return den_.is_constant() && num_.is_compound(); }

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  std::string n = num_.is_compound() ? "(" + num_.str() + ")" : num_.str();
  std::string d = den_.str();
  bool dparen = d.find_first_of("+-*/^") != std::string::npos;
  return n + "/" + (dparen ? "(" + d + ")" : d);
}

}  // namespace lsa
