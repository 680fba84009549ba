#pragma once
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/lie.hpp"

namespace lsa {

// F[i] is the matrix of f(e_i); row r is the image of v_r.
template <class S>
struct Representation {
  LieAlgebra<S> g;
  std::vector<Matrix<S>> F;

  // Matrix of f(x) for x given in coordinates.
  Matrix<S> action(const Vec<S>& x) const {
    size_t m = F.empty() ? 0 : F[0].rows();
    Matrix<S> r(m, m);
    for (size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) r = r + x[i] * F[i];
    return r;
  }
};

// C[i][j] = A_j(e_i): row i holds the coordinates of q(e_i).
template <class S>
struct Cocycle {
  Representation<S> rep;
  Matrix<S> C;
};

template <class S>
void check_rep_shape(const Representation<S>& rep) {
  if (static_cast<int>(rep.F.size()) != rep.g.n) throw DimensionMismatch("one matrix per basis element required");
  for (auto& f : rep.F)
    if (f.rows() != f.cols() || f.rows() != rep.F[0].rows()) throw DimensionMismatch("representation matrices");
}

// f([e_i,e_j]) = f(e_i) f(e_j) - f(e_j) f(e_i); with row action this reads F_{[i,j]} = F_j F_i - F_i F_j.
template <class S>
Certificate<S> check_representation(const Representation<S>& rep) {
  check_rep_shape(rep);
  for (int i = 0; i < rep.g.n; ++i)
    for (int j = i + 1; j < rep.g.n; ++j) {
      Matrix<S> d = rep.action(rep.g.bracket(i, j)) - (rep.F[j] * rep.F[i] - rep.F[i] * rep.F[j]);
      for (size_t r = 0; r < d.rows(); ++r)
        if (!is_zero_vec(d.row(r))) return {false, {i, j, static_cast<int>(r)}, d.row(r)};
    }
  return {};
}

// q([e_i,e_j]) = f(e_i) q(e_j) - f(e_j) q(e_i).
template <class S>
Certificate<S> check_cocycle(const Cocycle<S>& c) {
  int n = c.rep.g.n;
  if (static_cast<int>(c.C.rows()) != n) throw DimensionMismatch("cocycle matrix rows");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<S> lhs = c.rep.g.bracket(i, j) * c.C;
      Vec<S> rhs = c.C.row(j) * c.rep.F[i] - c.C.row(i) * c.rep.F[j];
      Vec<S> d = lhs - rhs;
      if (!is_zero_vec(d)) return {false, {i, j}, d};
    }
  return {};
}

template <class S>
bool is_bijective(const Cocycle<S>& c) {
  return c.C.rows() == c.C.cols() && !det(c.C).is_zero();
}

// x * y = q^{-1}(f(x) q(y)).
template <class S>
Algebra<S> phi(const Cocycle<S>& c) {
  if (!check_representation(c.rep) || !check_cocycle(c)) throw NotCocycle("not a representation and 1-cocycle");
  if (!is_bijective(c)) throw NotBijective("det C = 0");
  Matrix<S> Cinv = inverse(c.C);
  int n = c.rep.g.n;
  Algebra<S> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.set_product(i, j, (c.C.row(j) * c.rep.F[i]) * Cinv);
  return a;
}

// (L, id): row r of F_i holds the coordinates of e_i e_r.
template <class S>
Cocycle<S> psi(const Algebra<S>& a) {
  if (!check_left_symmetric(a)) throw NotLeftSymmetric("psi requires a left-symmetric algebra");
  Cocycle<S> c;
  c.rep.g = commutator_lie(a);
  for (int i = 0; i < a.n; ++i) {
    Matrix<S> f(a.n, a.n);
    for (int r = 0; r < a.n; ++r)
      for (int s = 0; s < a.n; ++s) f(r, s) = a.at(i, r, s);
    c.rep.F.push_back(f);
  }
  c.C = Matrix<S>::identity(a.n);
  return c;
}

// f2 = g f1 g^{-1}, q2 = g q1; with row action F2_i = G^{-1} F1_i G and C2 = C1 G.
template <class S>
bool verify_cocycle_iso(const Cocycle<S>& c1, const Cocycle<S>& c2, const Matrix<S>& G) {
  auto Gi = try_inverse(G);
  if (!Gi) throw SingularWitness("cocycle isomorphism witness is singular");
  if (!(c1.rep.g == c2.rep.g)) return false;
  if (c2.C != c1.C * G) return false;
  for (size_t i = 0; i < c1.rep.F.size(); ++i)
    if (c2.rep.F[i] != *Gi * c1.rep.F[i] * G) return false;
  return true;
}

// f2 = g f1 T g^{-1}, q2 = g q1 T; with row action F2_i = G^{-1} f1(T e_i) G and C2 = T C1 G.
// When this holds, T is an isomorphism phi(c2) -> phi(c1).
template <class S>
bool verify_cocycle_equiv(const Cocycle<S>& c1, const Cocycle<S>& c2, const Matrix<S>& G, const Matrix<S>& T) {
  auto Gi = try_inverse(G);
  if (!Gi) throw SingularWitness("cocycle equivalence witness is singular");
  if (!preserves_bracket(c1.rep.g, T)) throw NotAutomorphism("T is not a Lie algebra automorphism");
  if (!(c1.rep.g == c2.rep.g)) return false;
  if (c2.C != T * c1.C * G) return false;
  for (size_t i = 0; i < c1.rep.F.size(); ++i)
    if (c2.rep.F[i] != *Gi * c1.rep.action(T.row(i)) * G) return false;
  return true;
}

// Builds the cocycle equivalent to c1 under (G, T).
template <class S>
Cocycle<S> transform_cocycle(const Cocycle<S>& c1, const Matrix<S>& G, const Matrix<S>& T) {
  Matrix<S> Gi = inverse(G);
  Cocycle<S> c2;
  c2.rep.g = c1.rep.g;
  for (size_t i = 0; i < c1.rep.F.size(); ++i) c2.rep.F.push_back(Gi * c1.rep.action(T.row(i)) * G);
  c2.C = T * c1.C * G;
  return c2;
}

}  // namespace lsa
