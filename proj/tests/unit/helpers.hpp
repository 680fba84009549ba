#pragma once
#include <doctest.h>

#include <random>
#include <string>

#include "lsa/ext.hpp"
#include "lsa/poly1.hpp"

#include "lsa/catalog.hpp"
#include "lsa/constructions.hpp"
#include "lsa/document.hpp"
#include "lsa/errors.hpp"
#include "lsa/iso.hpp"
#include "lsa/lie.hpp"
#include "lsa/props.hpp"

namespace doctest {
template <>
struct StringMaker<lsa::Gaussian> {
  static String convert(const lsa::Gaussian& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<lsa::RatFunc> {
  static String convert(const lsa::RatFunc& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<lsa::MultiPoly> {
  static String convert(const lsa::MultiPoly& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<lsa::Poly1> {
  static String convert(const lsa::Poly1& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<lsa::ExtScalar> {
  static String convert(const lsa::ExtScalar& v) { return v.str().c_str(); }
};
template <class S>
struct StringMaker<lsa::Matrix<S>> {
  static String convert(const lsa::Matrix<S>& v) { return v.str().c_str(); }
};
}  // namespace doctest

namespace th {

using namespace lsa;
using G = Gaussian;
using M = Matrix<Gaussian>;
using V = Vec<Gaussian>;

inline G q(long a, long b = 1) { return G(Rational(a, b)); }

// Product table from document body lines.
inline Algebra<G> alg(const std::string& body, int n = 3) {
  Document d = parse_document("kind algebra dim " + std::to_string(n) + " domain gaussian\n" + body);
  return d.algebra.map([](const RatFunc& x) { return x.constant_value(); });
}

inline LieAlgebra<G> lie(const std::string& body, int n = 3) {
  Document d = parse_document("kind lie dim " + std::to_string(n) + " domain gaussian\n" + body);
  return d.lie.map([](const RatFunc& x) { return x.constant_value(); });
}

inline const Catalog& catalog() {
  static Catalog c = load_catalog();
  return c;
}

inline Algebra<G> entry(const std::string& id, const Bindings& b = {}) { return instantiate(catalog(), id, b); }

// Deterministic member of a parametric automorphism group.
inline M random_aut(LieTag tag, const G& l, std::mt19937& rng) {
  auto grp = aut_group(tag, l);
  REQUIRE(grp.has_value());
  std::uniform_int_distribution<int> pick(0, static_cast<int>(grp->components.size()) - 1), val(-3, 3);
  for (;;) {
    const AutComponent& c = grp->components[pick(rng)];
    Bindings b;
    for (auto& p : c.params) b[p] = G(val(rng));
    M T = c.pattern.map([&](const MultiPoly& p) { return p.evaluate(b); });
    if (!det(T).is_zero()) return T;
  }
}

inline M random_matrix(int n, std::mt19937& rng, int h = 3) {
  std::uniform_int_distribution<int> val(-h, h);
  M m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = G(val(rng));
  return m;
}

// Naive product used as an oracle: sum over basis pairs.
inline V naive_mul(const Algebra<G>& a, const V& x, const V& y) {
  V r(a.n, G());
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) r[k] += x[i] * y[j] * a.at(i, j, k);
  return r;
}

}  // namespace th
