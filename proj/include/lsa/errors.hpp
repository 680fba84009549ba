#pragma once
#include <stdexcept>
#include <string>

namespace lsa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LSA_ERROR(Name)                                          \
  struct Name : Error {                                          \
    explicit Name(const std::string& m = #Name) : Error(m) {}    \
  };

LSA_ERROR(DivisionByZero)
LSA_ERROR(DomainMismatch)
LSA_ERROR(UnboundVariable)
LSA_ERROR(DenominatorVanishes)
LSA_ERROR(DegreeTooHigh)
LSA_ERROR(DimensionMismatch)
LSA_ERROR(NotDimension3)
LSA_ERROR(NotBijective)
LSA_ERROR(NotCocycle)
LSA_ERROR(NotLeftSymmetric)
LSA_ERROR(SingularWitness)
LSA_ERROR(NotAutomorphism)
LSA_ERROR(NotCommutativeAssociative)
LSA_ERROR(NotDerivation)
LSA_ERROR(CybeFails)
LSA_ERROR(NotOOperator)
LSA_ERROR(UnknownId)
LSA_ERROR(ConstraintViolated)
LSA_ERROR(ZeroAlgebra)
LSA_ERROR(ExtensionDegreeTooHigh)
LSA_ERROR(SemanticError)

#undef LSA_ERROR

struct SyntaxError : Error {
  int line, col;
  SyntaxError(const std::string& m, int line_ = 0, int col_ = 0)
      : Error(line_ ? std::to_string(line_) + ":" + std::to_string(col_) + ": " + m : m),
        line(line_), col(col_) {}
};

}  // namespace lsa
