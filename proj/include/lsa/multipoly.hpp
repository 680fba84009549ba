#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsa/gaussian.hpp"
#include "lsa/poly1.hpp"

namespace lsa {

using Bindings = std::map<std::string, Gaussian>;

// Sparse polynomial over Q(i). Variables are kept sorted by name and pruned
// when they no longer occur; terms are ordered lexicographically.
class MultiPoly {
 public:
  using Exps = std::vector<int>;

  MultiPoly() = default;
  MultiPoly(const Gaussian& c);
  MultiPoly(long c) : MultiPoly(Gaussian(c)) {}
  static MultiPoly var(const std::string& name);
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return MultiPoly(Gaussian(1)); }
  static MultiPoly from_poly1(const Poly1& p, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, Gaussian>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  Gaussian constant_value() const;  // throws if not constant
  Gaussian leading_coeff() const;   // zero for the zero polynomial
  int degree_in(const std::string& name) const;
  int total_degree() const;
  bool has_var(const std::string& name) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Gaussian& c) const;
  MultiPoly pow(int k) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Partial substitution of bound variables.
  MultiPoly substitute(const Bindings& b) const;
  // Full evaluation; throws UnboundVariable.
  Gaussian evaluate(const Bindings& b) const;
  // Replace one variable by a polynomial.
  MultiPoly subst(const std::string& name, const MultiPoly& value) const;

  std::optional<std::string> univariate_var() const;
  Poly1 to_poly1(const std::string& name) const;  // throws DomainMismatch on other variables
  // Splits by the monomial in the other variables: each group is a Poly1 in `name`.
  std::map<Exps, Poly1> group_by(const std::string& name, std::vector<std::string>* others) const;
  // Exact division by a univariate polynomial in `name`; returns nullopt if inexact.
  std::optional<MultiPoly> divide_by(const Poly1& d, const std::string& name) const;
  // Divides by the monomial with the given exponents (all must divide).
  MultiPoly divide_monomial(const std::map<std::string, int>& e) const;

  std::string str() const;
  // True when str() needs parentheses as a factor.
  bool is_compound() const;

 private:
  MultiPoly(std::vector<std::string> vars, std::map<Exps, Gaussian> terms);
  MultiPoly remap(const std::vector<std::string>& vars) const;
  void prune();

  std::vector<std::string> vars_;
  std::map<Exps, Gaussian> terms_;
};

}  // namespace lsa
