#pragma once
#include <optional>

#include "lsa/cocycle.hpp"
#include "lsa/props.hpp"

namespace lsa {

// Linear maps are given by rows: row i is the image of e_i.

template <class S>
struct DerivationInput {
  Algebra<S> base;
  Matrix<S> D;
};

template <class S>
bool is_derivation(const Algebra<S>& a, const Matrix<S>& D) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Vec<S> lhs = a.product(i, j) * D;
      Vec<S> rhs = multiply(a, D.row(i), unit_vec<S>(a.n, j)) + multiply(a, unit_vec<S>(a.n, i), D.row(j));
      if (lhs != rhs) return false;
    }
  return true;
}

// x * y = x . D(y)
template <class S>
Algebra<S> novikov_from_derivation(const DerivationInput<S>& in) {
  if (!is_commutative(in.base) || !is_associative(in.base))
    throw NotCommutativeAssociative("base algebra must be commutative and associative");
  if (!is_derivation(in.base, in.D)) throw NotDerivation("D is not a derivation");
  Algebra<S> r(in.base.n);
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) r.set_product(i, j, multiply(in.base, unit_vec<S>(r.n, i), in.D.row(j)));
  return r;
}

// [R x, R y] = R([R x, y] + [x, R y])
template <class S>
Certificate<S> check_cybe(const LieAlgebra<S>& g, const Matrix<S>& Rm) {
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      auto ei = unit_vec<S>(g.n, i), ej = unit_vec<S>(g.n, j);
      Vec<S> lhs = g.bracket(Rm.row(i), Rm.row(j));
      Vec<S> rhs = (g.bracket(Rm.row(i), ej) + g.bracket(ei, Rm.row(j))) * Rm;
      if (lhs != rhs) return {false, {i, j}, lhs - rhs};
    }
  return {};
}

// x * y = [R x, y]
template <class S>
Algebra<S> lsa_from_rmatrix(const LieAlgebra<S>& g, const Matrix<S>& Rm) {
  if (!check_cybe(g, Rm)) throw CybeFails("R does not satisfy the classical Yang-Baxter equation");
  Algebra<S> a(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) a.set_product(i, j, g.bracket(Rm.row(i), unit_vec<S>(g.n, j)));
  return a;
}

// rho acts on V by rows; row u of T holds T(v_u) in g coordinates.
template <class S>
struct OOperatorInput {
  Representation<S> rho;
  Matrix<S> T;
};

// [T u, T v] = T(rho(T u) v - rho(T v) u)
template <class S>
Certificate<S> check_o_operator(const OOperatorInput<S>& in) {
  const auto& g = in.rho.g;
  size_t m = in.T.rows();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b) {
      Vec<S> lhs = g.bracket(in.T.row(a), in.T.row(b));
      Vec<S> rhs = (in.rho.action(in.T.row(a)).row(b) - in.rho.action(in.T.row(b)).row(a)) * in.T;
      if (lhs != rhs) return {false, {static_cast<int>(a), static_cast<int>(b)}, lhs - rhs};
    }
  return {};
}

template <class S>
struct InducedProducts {
  Algebra<S> on_v;         // u * v = rho(T u) v
  Algebra<S> on_image;     // T(u) * T(v) = T(rho(T u) v), in the basis below
  Matrix<S> image_basis;   // rows: basis of T(V) in g coordinates
};

template <class S>
InducedProducts<S> induced_products(const OOperatorInput<S>& in) {
  if (!check_o_operator(in)) throw NotOOperator("T is not an O-operator");
  size_t m = in.T.rows();
  InducedProducts<S> out;
  out.on_v = Algebra<S>(static_cast<int>(m));
  for (size_t a = 0; a < m; ++a) {
    Matrix<S> ra = in.rho.action(in.T.row(a));
    for (size_t b = 0; b < m; ++b) out.on_v.set_product(static_cast<int>(a), static_cast<int>(b), ra.row(b));
  }
  Matrix<S> Tr = in.T;
  auto piv = rref(Tr);
  std::vector<Vec<S>> basis, pre;
  std::vector<Vec<S>> trows;
  for (size_t a = 0; a < m; ++a) trows.push_back(in.T.row(a));
  for (size_t p = 0; p < piv.size(); ++p) {
    basis.push_back(Tr.row(p));
    pre.push_back(*solve_row_combination(trows, Tr.row(p)));
  }
  size_t k = basis.size(), n = in.T.cols();
  out.image_basis = k ? Matrix<S>::from_rows(basis, n) : Matrix<S>(0, n);
  // well-definedness: kernel vectors of T must map to zero
  auto ker = nullspace(in.T.transpose());
  for (size_t p = 0; p < k; ++p) {
    Matrix<S> rp = in.rho.action(basis[p]);
    for (auto& kv : ker)
      if (!is_zero_vec((kv * rp) * in.T)) throw NotOOperator("product on the image of T is not well defined");
  }
  out.on_image = Algebra<S>(static_cast<int>(k));
  for (size_t p = 0; p < k; ++p) {
    Matrix<S> rp = in.rho.action(basis[p]);
    for (size_t q = 0; q < k; ++q) {
      Vec<S> val = (pre[q] * rp) * in.T;
      out.on_image.set_product(static_cast<int>(p), static_cast<int>(q), *solve_row_combination(basis, val));
    }
  }
  return out;
}

}  // namespace lsa
