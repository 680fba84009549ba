#pragma once
#include <string>
#include <utility>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/ext.hpp"
#include "lsa/lie.hpp"
#include "lsa/multipoly.hpp"
#include "lsa/ratfunc.hpp"

namespace lsa {

template <class S>
bool is_associative(const Algebra<S>& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k)
        if (!is_zero_vec(basis_assoc(a, i, j, k))) return false;
  return true;
}

template <class S>
bool is_commutative(const Algebra<S>& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

template <class S>
bool is_novikov(const Algebra<S>& a) {
  std::vector<Matrix<S>> Rs;
  for (int i = 0; i < a.n; ++i) Rs.push_back(R(a, i));
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j)
      if (Rs[i] * Rs[j] != Rs[j] * Rs[i]) return false;
  return true;
}

template <class S>
bool is_bisymmetric(const Algebra<S>& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = j + 1; k < a.n; ++k)
        if (basis_assoc(a, i, j, k) != basis_assoc(a, i, k, j)) return false;
  return true;
}

// Name of the k-th symbolic coordinate used by the trace identities.
inline std::string coord_var(int k) { return "_x" + std::to_string(k + 1); }

// tr(R_x^k) = 0 for k = 1..n with x = sum x_k e_k symbolic. P is a ring
// holding both the scalars of S and the coordinate variables.
template <class P, class S, class Lift>
bool transitive_by_traces(const Algebra<S>& a, Lift lift) {
  int n = a.n;
  Matrix<P> Rx(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      P e = P::zero();
      for (int k = 0; k < n; ++k)
        if (!a.at(j, k, i).is_zero()) e += lift(a.at(j, k, i)) * P::var(coord_var(k));
      Rx(i, j) = e;
    }
  Matrix<P> pw = Rx;
  for (int k = 1; k <= n; ++k) {
    P t = P::zero();
    for (int i = 0; i < n; ++i) t += pw(i, i);
    if (!t.is_zero()) return false;
    if (k < n) pw = pw * Rx;
  }
  return true;
}

bool is_transitive(const Algebra<Gaussian>& a);
bool is_transitive(const Algebra<RatFunc>& a);
// Direct check R_x^n = 0 for one concrete x.
bool right_nilpotent_at(const Algebra<Gaussian>& a, const Vec<Gaussian>& x);

struct Ideal {
  int dim = 0;
  std::vector<Vec<ExtScalar>> basis;  // coordinates, possibly in an extension field
  int conjugates = 1;                 // number of Galois conjugates represented
  std::string str() const;
};

// A subspace U whose every line (kind 1) or every hyperplane ker(phi), phi in U (kind 2), is an ideal.
struct IdealFamily {
  int kind = 1;
  std::vector<Vec<Gaussian>> span;
};

struct IdealReport {
  std::vector<Ideal> ideals;
  std::vector<IdealFamily> families;
  bool all_subspaces = false;
  bool infinite() const { return !families.empty(); }
};

IdealReport find_ideals(const Algebra<Gaussian>& a);
bool ideal_closed(const Algebra<Gaussian>& a, const Ideal& I);
bool is_simple(const Algebra<Gaussian>& a);

struct SemisimpleResult {
  bool semisimple = false;
  std::vector<Ideal> summands;
};
SemisimpleResult is_semisimple(const Algebra<Gaussian>& a);

struct Fingerprint {
  bool left_symmetric, associative, transitive, novikov, bisymmetric, commutative;
  int product_span, left_annihilator, right_annihilator, two_sided_annihilator;
  int rank_LL, rank_RR, rank_LR;
  int square_left, square_right;  // dims of (AA)A and A(AA)
  int symmetric_span;             // span of e_i e_j + e_j e_i
  int derivations;                // dim Der(A)
  int nucleus_left, nucleus_middle, nucleus_right;
  LieClass lie;
  std::vector<std::pair<std::string, std::string>> fields() const;
  std::string str() const;
};

// Dimension of the derivation algebra.
int derivation_dim(const Algebra<Gaussian>& a);
Fingerprint fingerprint(const Algebra<Gaussian>& a);
// Name of the first differing field, or empty.
std::string fingerprint_difference(const Fingerprint& x, const Fingerprint& y);

// Span dimension of the given vectors.
int span_dim(const std::vector<Vec<Gaussian>>& vs, int n);

}  // namespace lsa
