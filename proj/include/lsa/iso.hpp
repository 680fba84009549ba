#pragma once
#include <optional>
#include <string>

#include "lsa/props.hpp"

namespace lsa {

// Row i of F is the image of e_i. True iff F is invertible and F(xy) = F(x)F(y).
template <class S>
bool verify_lsa_iso(const Algebra<S>& a, const Algebra<S>& b, const Matrix<S>& F) {
  if (a.n != b.n || static_cast<int>(F.rows()) != a.n || static_cast<int>(F.cols()) != a.n)
    throw DimensionMismatch("isomorphism witness shape");
  if (det(F).is_zero()) throw SingularWitness("isomorphism witness is singular");
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.product(i, j) * F != multiply(b, F.row(i), F.row(j))) return false;
  return true;
}

enum class IsoStatus { Isomorphic, NotIsomorphic, Unknown };
std::string status_name(IsoStatus s);

struct IsoVerdict {
  IsoStatus status = IsoStatus::Unknown;
  std::optional<Matrix<Gaussian>> witness;  // a -> b
  std::string separating_field;             // for NotIsomorphic
  std::string note;
  std::string str() const;
};

struct SearchOptions {
  long node_budget = 20000;
};

IsoVerdict search_lsa_iso(const Algebra<Gaussian>& a, const Algebra<Gaussian>& b, const SearchOptions& opt = {});

}  // namespace lsa
