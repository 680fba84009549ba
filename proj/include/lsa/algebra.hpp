#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lsa/matrix.hpp"

namespace lsa {

template <class S>
struct LieAlgebra;

// Structure constants: e_i e_j = sum_k c(i,j,k) e_k.
template <class S>
struct Algebra {
  int n = 0;
  std::vector<S> c;

  Algebra() = default;
  explicit Algebra(int dim) : n(dim), c(static_cast<size_t>(dim) * dim * dim, S::zero()) {
    if (dim < 0 || dim > 4) throw DimensionMismatch("algebra dimension must be at most 4");
  }
  S& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * n + j) * n + k]; }
  const S& at(int i, int j, int k) const { return c[(static_cast<size_t>(i) * n + j) * n + k]; }
  Vec<S> product(int i, int j) const {
    return Vec<S>(c.begin() + (static_cast<size_t>(i) * n + j) * n, c.begin() + (static_cast<size_t>(i) * n + j + 1) * n);
  }
  void set_product(int i, int j, const Vec<S>& v) {
    for (int k = 0; k < n; ++k) at(i, j, k) = v[k];
  }
  bool is_zero() const {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  template <class F>
  auto map(F f) const -> Algebra<decltype(f(std::declval<S>()))> {
    Algebra<decltype(f(std::declval<S>()))> r(n);
    for (size_t k = 0; k < c.size(); ++k) r.c[k] = f(c[k]);
    return r;
  }
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.n == b.n && a.c == b.c; }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }
};

template <class S>
Vec<S> multiply(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y) {
  if (static_cast<int>(x.size()) != a.n || static_cast<int>(y.size()) != a.n)
    throw DimensionMismatch("vector does not conform to algebra");
  Vec<S> r(a.n, S::zero());
  for (int i = 0; i < a.n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < a.n; ++j) {
      if (y[j].is_zero()) continue;
      S xy = x[i] * y[j];
      for (int k = 0; k < a.n; ++k)
        if (!a.at(i, j, k).is_zero()) r[k] += xy * a.at(i, j, k);
    }
  }
  return r;
}

template <class S>
Vec<S> associator(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

template <class S>
Vec<S> basis_assoc(const Algebra<S>& a, int i, int j, int k) {
  int n = a.n;
  return associator(a, unit_vec<S>(n, i), unit_vec<S>(n, j), unit_vec<S>(n, k));
}

// Result of an identity check over basis elements; indices are 0-based.
template <class S>
struct Certificate {
  bool ok = true;
  std::vector<int> where;
  Vec<S> difference;
  explicit operator bool() const { return ok; }
  std::string str() const {
    if (ok) return "ok";
    std::string s = "fails at (";
    for (size_t k = 0; k < where.size(); ++k) s += (k ? "," : "") + std::string("e") + std::to_string(where[k] + 1);
    return s + "), difference " + vec_str(difference);
  }
};

template <class S>
Certificate<S> check_left_symmetric(const Algebra<S>& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) {
        Vec<S> d = basis_assoc(a, i, j, k) - basis_assoc(a, j, i, k);
        if (!is_zero_vec(d)) return {false, {i, j, k}, d};
      }
  return {};
}

// Column j holds the coordinates of x e_j.
template <class S>
Matrix<S> left_matrix(const Algebra<S>& a, const Vec<S>& x) {
  Matrix<S> m(a.n, a.n);
  for (int j = 0; j < a.n; ++j) {
    Vec<S> v = multiply(a, x, unit_vec<S>(a.n, j));
    for (int i = 0; i < a.n; ++i) m(i, j) = v[i];
  }
  return m;
}

// Column j holds the coordinates of e_j x.
template <class S>
Matrix<S> right_matrix(const Algebra<S>& a, const Vec<S>& x) {
  Matrix<S> m(a.n, a.n);
  for (int j = 0; j < a.n; ++j) {
    Vec<S> v = multiply(a, unit_vec<S>(a.n, j), x);
    for (int i = 0; i < a.n; ++i) m(i, j) = v[i];
  }
  return m;
}

template <class S>
Matrix<S> L(const Algebra<S>& a, int i) {
  return left_matrix(a, unit_vec<S>(a.n, i));
}
template <class S>
Matrix<S> R(const Algebra<S>& a, int i) {
  return right_matrix(a, unit_vec<S>(a.n, i));
}

template <class S>
struct LieAlgebra {
  int n = 0;
  std::vector<S> b;  // [e_i, e_j] = sum_k b(i,j,k) e_k

  LieAlgebra() = default;
  explicit LieAlgebra(int dim) : n(dim), b(static_cast<size_t>(dim) * dim * dim, S::zero()) {}
  S& at(int i, int j, int k) { return b[(static_cast<size_t>(i) * n + j) * n + k]; }
  const S& at(int i, int j, int k) const { return b[(static_cast<size_t>(i) * n + j) * n + k]; }
  Vec<S> bracket(int i, int j) const {
    return Vec<S>(b.begin() + (static_cast<size_t>(i) * n + j) * n, b.begin() + (static_cast<size_t>(i) * n + j + 1) * n);
  }
  // Sets [e_i,e_j] = v and [e_j,e_i] = -v.
  void set(int i, int j, const Vec<S>& v) {
    for (int k = 0; k < n; ++k) {
      at(i, j, k) = v[k];
      at(j, i, k) = -v[k];
    }
  }
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> r(n, S::zero());
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        S xy = x[i] * y[j];
        for (int k = 0; k < n; ++k)
          if (!at(i, j, k).is_zero()) r[k] += xy * at(i, j, k);
      }
    }
    return r;
  }
  bool is_antisymmetric() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!(at(i, j, k) + at(j, i, k)).is_zero()) return false;
    return true;
  }
  template <class F>
  auto map(F f) const -> LieAlgebra<decltype(f(std::declval<S>()))> {
    LieAlgebra<decltype(f(std::declval<S>()))> r(n);
    for (size_t k = 0; k < b.size(); ++k) r.b[k] = f(b[k]);
    return r;
  }
  friend bool operator==(const LieAlgebra& x, const LieAlgebra& y) { return x.n == y.n && x.b == y.b; }
};

template <class S>
LieAlgebra<S> commutator_lie(const Algebra<S>& a) {
  LieAlgebra<S> g(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) g.at(i, j, k) = a.at(i, j, k) - a.at(j, i, k);
  return g;
}

template <class S>
Certificate<S> check_left_regular(const Algebra<S>& a) {
  auto g = commutator_lie(a);
  std::vector<Matrix<S>> Ls;
  for (int i = 0; i < a.n; ++i) Ls.push_back(L(a, i));
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) {
      Matrix<S> lhs = Ls[i] * Ls[j] - Ls[j] * Ls[i];
      Matrix<S> rhs = left_matrix(a, g.bracket(i, j));
      Matrix<S> d = lhs - rhs;
      if (!d.is_zero()) {
        for (int c = 0; c < a.n; ++c)
          if (!is_zero_vec(d.col(c))) return {false, {i, j, c}, d.col(c)};
      }
    }
  return {};
}

// The algebra expressed in a new basis whose k-th vector has coordinates P row k.
template <class S>
Algebra<S> change_basis(const Algebra<S>& a, const Matrix<S>& P) {
  Matrix<S> Pinv = inverse(P);
  Algebra<S> r(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) r.set_product(i, j, multiply(a, P.row(i), P.row(j)) * Pinv);
  return r;
}

template <class S>
LieAlgebra<S> change_basis(const LieAlgebra<S>& g, const Matrix<S>& P) {
  Matrix<S> Pinv = inverse(P);
  LieAlgebra<S> r(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      Vec<S> v = g.bracket(P.row(i), P.row(j)) * Pinv;
      for (int k = 0; k < g.n; ++k) r.at(i, j, k) = v[k];
    }
  return r;
}

}  // namespace lsa
