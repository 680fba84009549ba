#include <random>

#include "helpers.hpp"
#include "lsa/ext.hpp"
#include "lsa/parse_scalar.hpp"
#include "lsa/poly1.hpp"

using namespace th;

namespace {

Poly1 P(std::initializer_list<G> c) { return Poly1(std::vector<G>(c)); }

Poly1 multiply_back(const Factorization& f) {
  Poly1 r = Poly1::constant(f.lead);
  for (auto& fac : f.factors)
    for (int k = 0; k < fac.multiplicity; ++k) r = r * fac.factor;
  return r;
}

G rand_g(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4), den(1, 3);
  return G(Rational(d(rng), den(rng)), Rational(d(rng), den(rng)));
}

RatFunc var(const char* s) { return RatFunc::var(s); }

}  // namespace

TEST_CASE("gaussian arithmetic") {
  CHECK((G(1, 1) * G(1, -1)) == G(2));
  CHECK(G(Rational(2, 4)) == G(Rational(1, 2)));
  CHECK(G(Rational(2, 4)).str() == "1/2");
  CHECK(G(Rational(1, 2), -3).str() == "1/2-3*i");
  CHECK_THROWS_AS(G(1) / G(0), DivisionByZero);
  CHECK(G(3, 4).norm() == 25);
}

TEST_CASE("gaussian field axioms on random triples") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    G a = rand_g(rng), b = rand_g(rng), c = rand_g(rng);
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    if (!a.is_zero()) CHECK((a * a.inverse()) == G(1));
  }
}

TEST_CASE("rational functions") {
  RatFunc l = var("lambda"), m = var("mu");
  CHECK(((l * l - l) / m + l / m) == (l * l / m));
  CHECK(((l * l - l) / m + l / m).str() == "lambda^2/mu");
  CHECK(((l * l - l) / (l - 1)) == l);
  CHECK_THROWS_AS(l / RatFunc(), DivisionByZero);
}

TEST_CASE("substitution") {
  RatFunc l = var("lambda"), m = var("mu"), ll = var("l");
  CHECK((l * l - l).evaluate({{"lambda", G(2)}}) == G(2));
  CHECK((l * (l - 1) / m).evaluate({{"lambda", G(1)}, {"mu", G(3)}}) == G(0));
  CHECK((RatFunc(1) - RatFunc(2) * ll).evaluate({{"l", q(1, 2)}}) == G(0));
  CHECK_THROWS_AS((RatFunc(1) / (RatFunc(1) - RatFunc(2) * ll)).evaluate({{"l", q(1, 2)}}), DenominatorVanishes);
  CHECK_THROWS_AS((l + m).evaluate({{"lambda", G(1)}}), UnboundVariable);
  // partial substitution keeps the remaining variable
  CHECK((l * m).substitute({{"lambda", G(2)}}) == RatFunc(2) * m);
}

TEST_CASE("substitution commutes with multiplication on random polynomials") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 2);
  MultiPoly x = MultiPoly::var("x"), y = MultiPoly::var("y");
  for (int t = 0; t < 50; ++t) {
    MultiPoly p, r;
    for (int k = 0; k < 3; ++k) {
      p = p + x.pow(e(rng)) * y.pow(e(rng)) * MultiPoly(rand_g(rng));
      r = r + x.pow(e(rng)) * y.pow(e(rng)) * MultiPoly(rand_g(rng));
    }
    Bindings b{{"x", rand_g(rng)}, {"y", rand_g(rng)}};
    CHECK((p * r).evaluate(b) == p.evaluate(b) * r.evaluate(b));
    CHECK((p + r).evaluate(b) == p.evaluate(b) + r.evaluate(b));
  }
}

TEST_CASE("multivariate polynomial ring laws") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> e(0, 2);
  auto rp = [&] {
    MultiPoly p;
    for (const char* v : {"a", "b", "c"}) p = p + MultiPoly::var(v).pow(e(rng)) * MultiPoly(rand_g(rng));
    return p;
  };
  for (int t = 0; t < 30; ++t) {
    MultiPoly a = rp(), b = rp(), c = rp();
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
  }
}

TEST_CASE("rational function field axioms") {
  std::mt19937 rng(3);
  RatFunc l = var("l");
  auto rr = [&] { return (RatFunc(rand_g(rng)) * l + RatFunc(rand_g(rng))) / (l + RatFunc(rand_g(rng))); };
  for (int t = 0; t < 30; ++t) {
    RatFunc a = rr(), b = rr(), c = rr();
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    if (!a.is_zero()) CHECK((a * (RatFunc(1) / a)) == RatFunc(1));
  }
}

TEST_CASE("extension field inverse of t+1 modulo t^2-2") {
  ExtField f = ExtScalar::make_field(P({G(-2), G(0), G(1)}));
  ExtScalar t = ExtScalar::generator(f);
  ExtScalar inv = (t + ExtScalar(1)).inverse();
  // hand oracle: (t+1)(t-1) = t^2 - 1 = 1 in the quotient
  CHECK(inv == t - ExtScalar(1));
  CHECK(((t + ExtScalar(1)) * inv) == ExtScalar(1));
  CHECK_THROWS_AS(ExtScalar::make_field(P({G(-1), G(0), G(1)})), DomainMismatch);
}

TEST_CASE("extension field axioms on random triples") {
  std::mt19937 rng(21);
  ExtField f = ExtScalar::make_field(P({G(-2), G(0), G(0), G(1)}));
  auto re = [&] { return ExtScalar(f, P({rand_g(rng), rand_g(rng), rand_g(rng)})); };
  for (int k = 0; k < 30; ++k) {
    ExtScalar a = re(), b = re(), c = re();
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    if (!a.is_zero()) CHECK((a * a.inverse()) == ExtScalar(1));
  }
  ExtField g2 = ExtScalar::make_field(P({G(-3), G(0), G(1)}));
  CHECK_THROWS_AS(ExtScalar::generator(f) + ExtScalar::generator(g2), DomainMismatch);
}

TEST_CASE("factorization over Q(i)") {
  SUBCASE("t^2+1 splits") {
    auto f = factor_low_degree(P({G(1), G(0), G(1)}));
    REQUIRE(f.factors.size() == 2);
    CHECK(multiply_back(f) == P({G(1), G(0), G(1)}));
    for (auto& fac : f.factors) CHECK(fac.factor.degree() == 1);
  }
  SUBCASE("t^3-t splits into three roots") {
    auto f = factor_low_degree(P({G(0), G(-1), G(0), G(1)}));
    CHECK(f.factors.size() == 3);
    auto roots = roots_in_qi(P({G(0), G(-1), G(0), G(1)}));
    CHECK(roots.size() == 3);
  }
  SUBCASE("t^3-2 is irreducible") {
    // oracle: every divisor of 2 in Z[i] is a unit times 1, 1+i or 2; none is a root
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        G z(a, b);
        CHECK_FALSE((z * z * z) == G(2));
      }
    auto f = factor_low_degree(P({G(-2), G(0), G(0), G(1)}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].factor.degree() == 3);
  }
  SUBCASE("quartics") {
    auto f = factor_low_degree(P({G(4), G(0), G(0), G(0), G(1)}));
    CHECK(f.factors.size() == 4);
    auto g = factor_low_degree(P({G(-2), G(0), G(0), G(0), G(1)}));
    CHECK(g.factors.size() == 1);
  }
  CHECK_THROWS_AS(factor_low_degree(Poly1::monomial(G(1), 5)), DegreeTooHigh);
}

TEST_CASE("factorization multiplies back on random products") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3), nf(1, 4);
  for (int t = 0; t < 40; ++t) {
    Poly1 p = Poly1::constant(G(d(rng) == 0 ? 2 : d(rng) == 0 ? 1 : 3));
    int k = nf(rng);
    for (int j = 0; j < k; ++j) p = p * Poly1::linear_root(G(Rational(d(rng), 2), d(rng)));
    if (p.degree() <= 2) p = p * P({G(d(rng) == 0 ? 1 : 2), G(0), G(1)});
    if (p.degree() > 4) continue;
    auto f = factor_low_degree(p);
    CHECK(multiply_back(f) == p);
  }
}

TEST_CASE("scalar literal syntax") {
  RatFunc v = parse_scalar("l*(l-1)/m");
  CHECK(v == var("l") * (var("l") - RatFunc(1)) / var("m"));
  CHECK(parse_scalar("2^-1") == RatFunc(q(1, 2)));
  CHECK(parse_scalar("3/2*i - 1") == RatFunc(G(-1, Rational(3, 2))));
  CHECK_THROWS_AS(parse_scalar("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar("(1+"), SyntaxError);
}
