#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/ratfunc.hpp"

namespace lsa {

// Shared line-level syntax.
// "[[a,b],[c,d]]" -> rows of scalars; "0" -> empty (caller supplies the shape).
std::vector<std::vector<RatFunc>> parse_matrix_literal(const std::string& s, int line, int col);
Matrix<RatFunc> matrix_from_literal(const std::vector<std::vector<RatFunc>>& rows, int n, int line, int col);
// "c1 e1 + c2 e3 - e2" -> coordinates; "0" -> zero vector.
Vec<RatFunc> parse_linear_combination(const std::string& s, int n, int line, int col);
// "e12" -> 11; returns -1 if not a basis name.
int parse_basis_name(const std::string& s);
std::string format_linear_combination(const Vec<RatFunc>& v);
std::string format_matrix(const Matrix<RatFunc>& m);

enum class DocKind { Algebra, Lie, Representation, Cocycle, RMatrix, OOperator, IsoWitness };
enum class Domain { Rational, Gaussian, RatFunc };

struct ParamDecl {
  std::string name;
  std::vector<RatFunc> excluded;
};

struct Document {
  DocKind kind = DocKind::Algebra;
  int dim = 3;
  Domain domain = Domain::Rational;
  std::vector<ParamDecl> params;
  Algebra<RatFunc> algebra;
  LieAlgebra<RatFunc> lie;
  std::vector<Matrix<RatFunc>> F;
  std::optional<Matrix<RatFunc>> C, R, T;
  std::string from, to;  // iso_witness references
};

std::string kind_name(DocKind k);
std::string domain_name(Domain d);

// Throws SyntaxError (line, column) or SemanticError.
Document parse_document(const std::string& text);
std::string emit_document(const Document& d);
Document read_document_file(const std::string& path);

// Binds the declared parameters; throws SemanticError on missing or excluded values.
Bindings check_document_bindings(const Document& d, const Bindings& b);

Document algebra_document(const Algebra<RatFunc>& a, Domain domain);

}  // namespace lsa
