#include "helpers.hpp"

using namespace th;

namespace {

const char* kH1 = "e1 e1 = e1\ne1 e2 = e2 + e3\ne1 e3 = e3\ne2 e1 = e2\ne3 e1 = e3\n";
const char* kBad = "e1 e1 = e2\ne2 e1 = e1\n";

V e(int k) { return unit_vec<G>(3, k); }

// Oracle: all failing triples by direct expansion.
std::vector<std::array<int, 3>> failing_triples(const Algebra<G>& a) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        auto as = [&](int x, int y, int z) {
          return naive_mul(a, naive_mul(a, e(x), e(y)), e(z)) - naive_mul(a, e(x), naive_mul(a, e(y), e(z)));
        };
        if (as(i, j, k) != as(j, i, k)) out.push_back({i, j, k});
      }
  return out;
}

Algebra<G> random_table(std::mt19937& rng, int density) {
  std::uniform_int_distribution<int> v(-2, 2), d(0, 9);
  Algebra<G> a(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (d(rng) < density) a.c[(i * 3 + j) * 3 + k] = G(v(rng));
  return a;
}

}  // namespace

TEST_CASE("multiply reads the table row by left factor") {
  Algebra<G> h1 = alg(kH1);
  CHECK(multiply(h1, e(0), e(1)) == V{0, 1, 1});
  CHECK(multiply(Algebra<G>(3), V{1, 2, 3}, V{4, 5, 6}) == V{0, 0, 0});
  Algebra<G> n1 = entry("N-1", {{"lambda", G(2)}});
  CHECK(multiply(n1, e(2), e(2)) == V{0, 0, 2});
  CHECK_THROWS_AS(multiply(h1, V{1, 0}, e(0)), DimensionMismatch);
}

TEST_CASE("multiply is bilinear and agrees with the naive oracle") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> v(-3, 3);
  Algebra<G> a = random_table(rng, 5);
  for (int t = 0; t < 50; ++t) {
    V x{v(rng), v(rng), v(rng)}, x2{v(rng), v(rng), v(rng)}, y{v(rng), v(rng), v(rng)};
    CHECK(multiply(a, x + x2, y) == multiply(a, x, y) + multiply(a, x2, y));
    CHECK(multiply(a, y, x + x2) == multiply(a, y, x) + multiply(a, y, x2));
    CHECK(multiply(a, x, y) == naive_mul(a, x, y));
  }
}

TEST_CASE("associator") {
  Algebra<G> h1 = alg(kH1);
  CHECK(associator(h1, e(1), e(0), e(1)) == V{0, 0, 0});
  Algebra<G> idem = alg("e1 e1 = e1\n");
  CHECK(associator(idem, e(0), e(0), e(0)) == V{0, 0, 0});
  // H-1 is not associative: (e1 e1) e2 - e1 (e1 e2) = (e2+e3) - (e2+2 e3)
  CHECK(associator(h1, e(0), e(0), e(1)) == V{0, 0, -1});
}

TEST_CASE("left-symmetry with certificates") {
  CHECK(check_left_symmetric(alg(kH1)).ok);
  CHECK(check_left_symmetric(Algebra<G>(3)).ok);
  Algebra<G> bad = alg(kBad);
  auto cert = check_left_symmetric(bad);
  REQUIRE_FALSE(cert.ok);
  auto fails = failing_triples(bad);
  REQUIRE_FALSE(fails.empty());
  std::array<int, 3> w{cert.where[0], cert.where[1], cert.where[2]};
  CHECK(std::find(fails.begin(), fails.end(), w) != fails.end());
  CHECK_FALSE(is_zero_vec(cert.difference));
}

TEST_CASE("left regular representation check agrees with left-symmetry") {
  CHECK(check_left_regular(entry("H-2")).ok);
  CHECK(check_left_regular(Algebra<G>(3)).ok);
  CHECK_FALSE(check_left_regular(alg(kBad)).ok);
  std::mt19937 rng(9);
  int agree = 0;
  for (int t = 0; t < 300; ++t) {
    Algebra<G> a = random_table(rng, t % 3 == 0 ? 1 : 2);
    bool ls = check_left_symmetric(a).ok;
    CHECK(ls == check_left_regular(a).ok);
    CHECK(ls == failing_triples(a).empty());
    agree += ls;
  }
  CHECK(agree > 0);
}

TEST_CASE("commutator Lie algebra") {
  LieAlgebra<G> g = commutator_lie(alg(kH1));
  CHECK(g.bracket(0, 1) == V{0, 0, 1});
  CHECK(g.bracket(0, 2) == V{0, 0, 0});
  CHECK(g.bracket(1, 2) == V{0, 0, 0});
  CHECK(commutator_lie(alg("e1 e2 = e3\ne2 e1 = e3\n")) == LieAlgebra<G>(3));
  LieAlgebra<G> n = commutator_lie(entry("N-1", {{"lambda", G(3)}}));
  CHECK(n.bracket(2, 1) == V{0, 1, 0});
  for (auto& en : catalog().entries)
    for (auto& b : samples(en)) {
      Algebra<G> a = instantiate(en, b);
      CHECK(check_jacobi(commutator_lie(a)).ok);
    }
}

TEST_CASE("left and right multiplication matrices use columns") {
  Algebra<G> h1 = alg(kH1);
  M L1 = left_matrix(h1, e(0));
  CHECK(L1.col(0) == V{1, 0, 0});
  CHECK(L1.col(1) == V{0, 1, 1});
  CHECK(L1.col(2) == V{0, 0, 1});
  CHECK(right_matrix(h1, e(0)) == M::identity(3));
  CHECK(left_matrix(Algebra<G>(3), V{1, 1, 1}).is_zero());
}

TEST_CASE("change of basis transports products") {
  std::mt19937 rng(4);
  Algebra<G> a = entry("E-2");
  for (int t = 0; t < 10; ++t) {
    M P = random_matrix(3, rng);
    if (det(P).is_zero()) continue;
    Algebra<G> b = change_basis(a, P);
    // new e_i is row i of P
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(b.product(i, j) * P == multiply(a, P.row(i), P.row(j)));
  }
}

TEST_CASE("matrix elimination") {
  M m{{2, 1, 0}, {1, 1, 0}, {0, 0, 3}};
  CHECK(det(m) == G(3));
  CHECK(inverse(m) * m == M::identity(3));
  M s{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(s) == 2);
  CHECK_THROWS_AS(inverse(s), SingularWitness);
  auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero_vec(mat_vec(s, ns[0])));
}
