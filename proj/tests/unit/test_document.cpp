#include "helpers.hpp"

using namespace th;

namespace {
std::string shipped(const std::string& name) { return std::string(LSA_DOCS_DIR) + "/" + name; }
}  // namespace

TEST_CASE("shipped algebra file") {
  Document d = read_document_file(shipped("H-1.lsa"));
  CHECK(d.kind == DocKind::Algebra);
  int nonzero = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) nonzero += !is_zero_vec(d.algebra.product(i, j));
  CHECK(nonzero == 5);
  Document z = read_document_file(shipped("zero.lsa"));
  CHECK(z.algebra.is_zero());
}

TEST_CASE("all shipped kinds parse") {
  CHECK(read_document_file(shipped("AI-1.lsa")).kind == DocKind::Cocycle);
  Document w = read_document_file(shipped("H-2prime-to-H-2.lsa"));
  CHECK(w.kind == DocKind::IsoWitness);
  CHECK(w.from == "H-2'");
  CHECK(w.to == "H-2");
  Document p = read_document_file(shipped("H-7.lsa"));
  REQUIRE(p.params.size() == 1);
  CHECK(p.params[0].name == "lambda");
  CHECK_THROWS_AS(check_document_bindings(p, {{"lambda", G(0)}}), SemanticError);
  CHECK_THROWS_AS(check_document_bindings(p, {}), SemanticError);
  CHECK(parse_document("kind rmatrix dim 3 domain rational\n[e1,e2] = e3\nR = [[1,0,0],[0,0,0],[0,0,0]]\n").R);
  CHECK(parse_document("kind ooperator dim 3 domain rational\nf(e1) = 0\nT = 0\n").T);
  CHECK(parse_document("kind representation dim 3 domain gaussian\nf(e2) = [[i,0,0],[0,0,0],[0,0,0]]\n").F[1](0, 0) ==
        RatFunc(G::I()));
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_document("kind algebra dim 3 domain rational\ne1 e1 = 1/0 e1\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind algebra dim 3 domain ratfunc\ne1 e1 = q e1\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind algebra dim 3 domain rational\ne1 e4 = e1\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind algebra dim 3 domain rational\ne1 e1 = e4\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind algebra dim 3 domain rational\ne1 e1 = i e1\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind algebra dim 3 domain rational\ne1 e1 = e1\ne1 e1 = e2\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind cocycle dim 3 domain rational\nC = [[1,0],[0,1]]\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind cocycle dim 3 domain rational\n[e1,e2] = e3\n"), SemanticError);
  CHECK_THROWS_AS(parse_document("kind lie dim 3 domain rational\ne1 e2 = e3\n"), SemanticError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_document("kind algebra dim 3 domain rational\n# comment\ne1 e2 = e3 +\n");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 3);
    CHECK(e.col >= 1);
  }
  try {
    parse_document("kind algebra dim 3 domain rational\ne1 e2 = 2 * (1 + e3\n");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_document("kind algebra dim three domain rational\n"), SyntaxError);
  CHECK_THROWS_AS(parse_document("kind wibble dim 3 domain rational\n"), SyntaxError);
  CHECK_THROWS_AS(parse_document(""), SyntaxError);
  CHECK_THROWS_AS(parse_document("kind algebra dim 3 domain rational\nf(e1) = [[1,0,0],[0,1,0],[0,0,1]\n"), SemanticError);
}

TEST_CASE("normalization round trip") {
  std::string messy =
      "# header comment\nkind algebra dim 3 domain ratfunc\nparams mu != 0\ne2 e1 = 1*e3 + 0 e1 + e3\n"
      "e1 e1 =   (mu-1)*e2 - 1/2 e3\ne1 e2 = -e1\n";
  Document d = parse_document(messy);
  std::string norm = emit_document(d);
  CHECK(norm ==
        "kind algebra dim 3 domain ratfunc\nparams mu != 0\ne1 e1 = (mu-1) e2 - 1/2 e3\ne1 e2 = -e1\ne2 e1 = 2 e3\n");
  Document again = parse_document(norm);
  CHECK(emit_document(again) == norm);
  CHECK(again.algebra == d.algebra);
}

TEST_CASE("every catalog table survives emit and parse") {
  for (auto& e : catalog().entries) {
    Document d = algebra_document(e.table, Domain::RatFunc);
    for (auto& p : e.params) d.params.push_back(ParamDecl{p.name, {}});
    std::string text = emit_document(d);
    Document back = parse_document(text);
    CHECK(back.algebra == e.table);
    CHECK(emit_document(back) == text);
  }
}

TEST_CASE("linear combination syntax") {
  Vec<RatFunc> v = parse_linear_combination("lambda*(lambda-1)/mu e3 - e1 + 2*e2", 3, 1, 1);
  RatFunc l = RatFunc::var("lambda"), m = RatFunc::var("mu");
  CHECK(v[0] == RatFunc(-1));
  CHECK(v[1] == RatFunc(2));
  CHECK(v[2] == l * (l - RatFunc(1)) / m);
  CHECK(format_linear_combination(v) == "-e1 + 2 e2 + (lambda^2-lambda)/mu e3");
}
