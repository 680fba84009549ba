#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/gaussian.hpp"
#include "lsa/multipoly.hpp"

namespace lsa {

template <class S>
Certificate<S> check_jacobi(const LieAlgebra<S>& g) {
  int n = g.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto ei = unit_vec<S>(n, i), ej = unit_vec<S>(n, j), ek = unit_vec<S>(n, k);
        Vec<S> s = g.bracket(ei, g.bracket(ej, ek)) + g.bracket(ej, g.bracket(ek, ei)) +
                   g.bracket(ek, g.bracket(ei, ej));
        if (!is_zero_vec(s)) return {false, {i, j, k}, s};
      }
  return {};
}

// Column j holds [e_i, e_j].
template <class S>
Matrix<S> ad(const LieAlgebra<S>& g, const Vec<S>& x) {
  Matrix<S> m(g.n, g.n);
  for (int j = 0; j < g.n; ++j) {
    Vec<S> v = g.bracket(x, unit_vec<S>(g.n, j));
    for (int k = 0; k < g.n; ++k) m(k, j) = v[k];
  }
  return m;
}

template <class S>
Matrix<S> killing_form(const LieAlgebra<S>& g) {
  std::vector<Matrix<S>> ads;
  for (int i = 0; i < g.n; ++i) ads.push_back(ad(g, unit_vec<S>(g.n, i)));
  Matrix<S> K(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      Matrix<S> p = ads[i] * ads[j];
      S t = S::zero();
      for (int k = 0; k < g.n; ++k) t += p(k, k);
      K(i, j) = t;
    }
  return K;
}

// Row i of T is the image of e_i. True iff T is invertible and preserves brackets.
template <class S>
bool preserves_bracket(const LieAlgebra<S>& g, const Matrix<S>& T) {
  if (static_cast<int>(T.rows()) != g.n || static_cast<int>(T.cols()) != g.n)
    throw DimensionMismatch("automorphism matrix shape");
  if (det(T).is_zero()) return false;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.bracket(i, j) * T != g.bracket(T.row(i), T.row(j))) return false;
  return true;
}

enum class LieTag { Abelian, Heisenberg, N, Dl, E, Sl2, Unrecognized };
std::string tag_name(LieTag t);

struct LieClass {
  LieTag tag = LieTag::Unrecognized;
  std::optional<Gaussian> param;      // canonical l for Dl
  std::optional<Gaussian> invariant;  // l + 1/l, available for every Dl
  // Rows: canonical basis vectors in the original coordinates.
  std::optional<Matrix<Gaussian>> witness;
  bool eigenvalue_outside_domain = false;
  std::string str() const;
  // Same isomorphism class (tag and parameter / invariant).
  bool same_class(const LieClass& o) const;
};

// Representative of {l, 1/l} with |l| < 1, or |l| = 1 and Im l >= 0.
Gaussian canonical_l(const Gaussian& l);
bool is_canonical_l(const Gaussian& l);
LieAlgebra<Gaussian> canonical_lie(LieTag tag, const Gaussian& l = Gaussian(1));
LieClass classify3(const LieAlgebra<Gaussian>& g);

// Explicit parametric automorphism groups of the canonical algebras.
struct AutComponent {
  Matrix<MultiPoly> pattern;  // entries polynomial in the parameters
  std::vector<std::string> params;
};
struct AutGroup {
  std::string id;
  std::vector<AutComponent> components;
};
std::optional<AutGroup> aut_group(LieTag tag, const Gaussian& l = Gaussian(1));
// Membership by matching T against a component pattern; requires det T != 0.
bool aut_group_member(const AutGroup& grp, const Matrix<Gaussian>& T);

// Bracket preservation, cross-checked against the explicit group when g is canonical.
bool check_lie_automorphism(const LieAlgebra<Gaussian>& g, const Matrix<Gaussian>& T);

}  // namespace lsa
