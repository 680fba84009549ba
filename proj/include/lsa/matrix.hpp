#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lsa/errors.hpp"

namespace lsa {

template <class S>
using Vec = std::vector<S>;

// Dense matrix. Elimination routines require S to be a field.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, S::zero()) {}
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (auto& row : rows) {
      if (row.size() != c_) throw DimensionMismatch("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }
  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<S>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("row length");
      for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_cols(const std::vector<Vec<S>>& cols, size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  S& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const S& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  Vec<S> row(size_t i) const { return Vec<S>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  Vec<S> col(size_t j) const {
    Vec<S> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<S>()))> {
    Matrix<decltype(f(std::declval<S>()))> m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix m = a;
    for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix m = a;
    for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape");
    Matrix m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const S& x = a(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < b.c_; ++j)
          if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.a_) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < r_; ++i) {
      s += i ? ",[" : "[";
      for (size_t j = 0; j < c_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

 private:
  void same_shape(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw DimensionMismatch("matrix shape");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<S> a_;
};

// Row vector times matrix.
template <class S>
Vec<S> operator*(const Vec<S>& v, const Matrix<S>& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector-matrix shape");
  Vec<S> r(m.cols(), S::zero());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r[j] += v[i] * m(i, j);
  }
  return r;
}

// Matrix times column vector.
template <class S>
Vec<S> mat_vec(const Matrix<S>& m, const Vec<S>& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector shape");
  Vec<S> r(m.rows(), S::zero());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

template <class S>
Vec<S> operator+(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length");
  Vec<S> r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}
template <class S>
Vec<S> operator-(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length");
  Vec<S> r = a;
  for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}
template <class S>
Vec<S> scale(const S& s, const Vec<S>& a) {
  Vec<S> r = a;
  for (auto& x : r) x = s * x;
  return r;
}
template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
template <class S>
Vec<S> unit_vec(size_t n, size_t k) {
  Vec<S> v(n, S::zero());
  v[k] = S::one();
  return v;
}
template <class S>
std::string vec_str(const Vec<S>& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s + ")";
}

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<size_t> rref(Matrix<S>& m) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    S inv = S::one() / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      S f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class S>
size_t rank(Matrix<S> m) {
  return rref(m).size();
}

// Basis of {x : m x = 0} as column vectors.
template <class S>
std::vector<Vec<S>> nullspace(Matrix<S> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec<S>> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec<S> v(m.cols(), S::zero());
    v[f] = S::one();
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
    basis.push_back(v);
  }
  return basis;
}

template <class S>
S det(Matrix<S> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  size_t n = m.rows();
  S d = S::one();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return S::zero();
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d = d * m(c, c);
    S inv = S::one() / m(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      S f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class S>
std::optional<Matrix<S>> try_inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  size_t n = m.rows();
  Matrix<S> a(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = S::one();
  }
  auto piv = rref(a);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<S> r(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  auto r = try_inverse(m);
  if (!r) throw SingularWitness("matrix is singular");
  return *r;
}

// Coordinates of the row vector v in the row space basis `rows`, if it lies there.
template <class S>
std::optional<Vec<S>> solve_row_combination(const std::vector<Vec<S>>& rows, const Vec<S>& v) {
  size_t k = rows.size(), n = v.size();
  Matrix<S> a(n, k + 1);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) a(i, j) = rows[j][i];
  for (size_t i = 0; i < n; ++i) a(i, k) = v[i];
  auto piv = rref(a);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  Vec<S> x(k, S::zero());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = a(i, k);
  return x;
}

}  // namespace lsa
