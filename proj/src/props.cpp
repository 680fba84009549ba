#include "lsa/props.hpp"

#include <functional>

namespace lsa {

using G = Gaussian;
using VG = Vec<Gaussian>;
using E = ExtScalar;
using VE = Vec<ExtScalar>;

bool is_transitive(const Algebra<G>& a) {
  return transitive_by_traces<MultiPoly>(a, [](const G& x) { return MultiPoly(x); });
}

bool is_transitive(const Algebra<RatFunc>& a) {
  return transitive_by_traces<RatFunc>(a, [](const RatFunc& x) { return x; });
}

bool right_nilpotent_at(const Algebra<G>& a, const VG& x) {
  Matrix<G> r = right_matrix(a, x), p = r;
  for (int k = 1; k < a.n; ++k) p = p * r;
  return p.is_zero();
}

int span_dim(const std::vector<VG>& vs, int n) {
  if (vs.empty()) return 0;
  return static_cast<int>(rank(Matrix<G>::from_rows(vs, n)));
}

std::string Ideal::str() const {
  std::string s = "span{";
  for (size_t k = 0; k < basis.size(); ++k) s += (k ? ", " : "") + vec_str(basis[k]);
  s += "}";
  if (conjugates > 1) s += " and " + std::to_string(conjugates - 1) + " conjugate(s)";
  return s;
}

namespace {

// Characteristic polynomial det(tI - A) by Faddeev-LeVerrier.
Poly1 charpoly(const Matrix<G>& A) {
  size_t n = A.rows();
  std::vector<G> c(n + 1);
  c[n] = G(1);
  Matrix<G> M(n, n);
  for (size_t k = 1; k <= n; ++k) {
    M = A * M + c[n - k + 1] * Matrix<G>::identity(n);
    Matrix<G> AM = A * M;
    G tr;
    for (size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / G(static_cast<long>(k));
  }
  return Poly1(c);
}

// Rows spanning the annihilator of the column space of B (vectors as columns).
std::vector<VG> annihilator(const std::vector<VG>& B, int n) {
  if (B.empty()) {
    std::vector<VG> all;
    for (int k = 0; k < n; ++k) all.push_back(unit_vec<G>(n, k));
    return all;
  }
  return nullspace(Matrix<G>::from_rows(B, n));
}

// Largest M-invariant subspace contained in span(B).
std::vector<VG> largest_invariant(const Matrix<G>& M, std::vector<VG> B, int n) {
  for (;;) {
    if (B.empty()) return B;
    auto Q = annihilator(B, n);
    if (Q.empty()) return B;
    Matrix<G> Bm = Matrix<G>::from_cols(B, n);
    Matrix<G> cond = Matrix<G>::from_rows(Q, n) * M * Bm;
    auto ys = nullspace(cond);
    if (ys.size() == B.size()) return B;
    std::vector<VG> nb;
    for (auto& y : ys) nb.push_back(mat_vec(Bm, y));
    B = nb;
  }
}

struct Found {
  std::vector<VE> basis;
  int conjugates = 1;
};

bool line_invariant(const Matrix<E>& M, const VE& v) {
  VE w = mat_vec(M, v);
  size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  E mu = w[p] / v[p];
  return w == scale(mu, v);
}

Matrix<E> lift(const Matrix<G>& m) {
  return m.map([](const G& x) { return E(x); });
}

VE lift(const VG& v) {
  VE r;
  for (auto& x : v) r.push_back(E(x));
  return r;
}

void search(const std::vector<Matrix<G>>& ops, size_t idx, std::vector<VG> U, int n, std::vector<Found>& out) {
  if (U.empty()) return;
  if (idx == ops.size()) {
    Found f;
    for (auto& u : U) f.basis.push_back(lift(u));
    out.push_back(f);
    return;
  }
  const Matrix<G>& M = ops[idx];
  auto W = largest_invariant(M, U, n);
  if (W.empty()) return;
  size_t d = W.size();
  Matrix<G> A(d, d);
  for (size_t j = 0; j < d; ++j) {
    auto co = solve_row_combination(W, mat_vec(M, W[j]));
    for (size_t i = 0; i < d; ++i) A(i, j) = (*co)[i];
  }
  Matrix<G> Wm = Matrix<G>::from_cols(W, n);
  auto fac = factor_low_degree(charpoly(A));
  for (const auto& f : fac.factors) {
    if (f.factor.degree() == 1) {
      G alpha = -f.factor.coeff(0);
      std::vector<VG> Eb;
      for (auto& y : nullspace(A - alpha * Matrix<G>::identity(d))) Eb.push_back(mat_vec(Wm, y));
      search(ops, idx + 1, Eb, n, out);
      continue;
    }
    ExtField K = E::make_field(f.factor);
    E t = E::generator(K);
    Matrix<E> AK = lift(A);
    for (size_t i = 0; i < d; ++i) AK(i, i) = AK(i, i) - t;
    auto ys = nullspace(AK);
    if (ys.size() != 1) throw ExtensionDegreeTooHigh("extension eigenspace of dimension > 1");
    VE v = mat_vec(lift(Wm), ys.front());
    bool ok = true;
    for (size_t k = idx + 1; k < ops.size() && ok; ++k) ok = line_invariant(lift(ops[k]), v);
    if (ok) out.push_back({{v}, f.factor.degree()});
  }
}

std::vector<Matrix<G>> operator_list(const Algebra<G>& a, bool transpose) {
  int n = a.n;
  std::vector<Matrix<G>> ls, rs;
  for (int i = 0; i < n; ++i) {
    ls.push_back(L(a, i));
    rs.push_back(R(a, i));
  }
  std::vector<Matrix<G>> ops;
  ops.push_back(ls[n - 1]);
  ops.push_back(rs[n - 1]);
  ops.push_back(ls[0] + rs[n > 1 ? 1 : 0]);
  Matrix<G> gen(n, n);
  long w = 1;
  for (int i = 0; i < n; ++i) {
    gen = gen + G(w) * ls[i];
    w += 2;
    gen = gen + G(w) * rs[i];
    w += 3;
  }
  ops.push_back(gen);
  for (int i = 0; i < n; ++i) {
    ops.push_back(ls[i]);
    ops.push_back(rs[i]);
  }
  if (transpose)
    for (auto& m : ops) m = m.transpose();
  return ops;
}

}  // namespace

IdealReport find_ideals(const Algebra<G>& a) {
  int n = a.n;
  IdealReport rep;
  if (a.is_zero()) {
    rep.all_subspaces = true;
    std::vector<VG> all;
    for (int k = 0; k < n; ++k) all.push_back(unit_vec<G>(n, k));
    rep.families.push_back({1, all});
    rep.families.push_back({2, all});
    return rep;
  }
  std::vector<VG> full;
  for (int k = 0; k < n; ++k) full.push_back(unit_vec<G>(n, k));
  for (int kind : {1, 2}) {
    std::vector<Found> found;
    search(operator_list(a, kind == 2), 0, full, n, found);
    for (auto& f : found) {
      if (f.basis.size() >= 2) {
        IdealFamily fam{kind, {}};
        for (auto& v : f.basis) {
          VG g;
          for (auto& x : v) g.push_back(x.base_value());
          fam.span.push_back(g);
        }
        rep.families.push_back(fam);
        continue;
      }
      Ideal I;
      I.conjugates = f.conjugates;
      if (kind == 1) {
        I.dim = 1;
        I.basis = f.basis;
      } else {
        // hyperplane ker(phi)
        const VE& phi = f.basis.front();
        Matrix<E> m(1, n);
        for (int k = 0; k < n; ++k) m(0, k) = phi[k];
        I.basis = nullspace(m);
        I.dim = static_cast<int>(I.basis.size());
      }
      if (I.dim > 0 && I.dim < n) rep.ideals.push_back(I);
    }
  }
  return rep;
}

bool ideal_closed(const Algebra<G>& a, const Ideal& I) {
  Algebra<E> ae = a.map([](const G& x) { return E(x); });
  std::vector<VE> B = I.basis;
  for (auto& v : B)
    for (int i = 0; i < a.n; ++i) {
      auto ei = lift(unit_vec<G>(a.n, i));
      for (const VE& w : {multiply(ae, ei, v), multiply(ae, v, ei)})
        if (!solve_row_combination(B, w)) return false;
    }
  return true;
}

bool is_simple(const Algebra<G>& a) {
  if (a.is_zero()) throw ZeroAlgebra("simplicity is undefined for the zero algebra");
  auto rep = find_ideals(a);
  return rep.ideals.empty() && rep.families.empty();
}

namespace {

std::vector<VG> components(const Ideal& I, int n) {
  std::vector<VG> out;
  for (auto& v : I.basis) {
    int deg = 1;
    for (auto& x : v)
      if (x.field()) deg = std::max(deg, x.field()->degree());
    for (int k = 0; k < deg; ++k) {
      VG c(n);
      for (int m = 0; m < n; ++m) c[m] = v[m].value().coeff(k);
      out.push_back(c);
    }
  }
  return out;
}

bool nonzero_square(const Algebra<G>& a, const Ideal& I) {
  Algebra<E> ae = a.map([](const G& x) { return E(x); });
  for (auto& u : I.basis)
    for (auto& v : I.basis)
      if (!is_zero_vec(multiply(ae, u, v))) return true;
  return false;
}

}  // namespace

SemisimpleResult is_semisimple(const Algebra<G>& a) {
  if (a.is_zero()) throw ZeroAlgebra("semisimplicity is undefined for the zero algebra");
  int n = a.n;
  SemisimpleResult res;
  std::vector<VG> prods;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prods.push_back(a.product(i, j));
  if (span_dim(prods, n) < n) return res;
  auto rep = find_ideals(a);
  if (rep.infinite()) return res;
  if (rep.ideals.empty()) {
    Ideal whole;
    whole.dim = n;
    for (int k = 0; k < n; ++k) whole.basis.push_back(lift(unit_vec<G>(n, k)));
    res.semisimple = true;
    res.summands = {whole};
    return res;
  }
  std::vector<Ideal> lines, minimal;
  for (auto& I : rep.ideals)
    if (I.dim == 1) lines.push_back(I);
  for (auto& I : rep.ideals) {
    if (I.dim == 1) {
      minimal.push_back(I);
      continue;
    }
    bool contains_line = false;
    for (auto& l : lines) {
      try {
        std::vector<VE> B = I.basis;
        if (solve_row_combination(B, l.basis.front())) contains_line = true;
      } catch (const DomainMismatch&) {
      }
    }
    if (!contains_line) minimal.push_back(I);
  }
  int total = 0;
  std::vector<VG> comps;
  for (auto& I : minimal) {
    total += I.dim * I.conjugates;
    for (auto& c : components(I, n)) comps.push_back(c);
    if (!nonzero_square(a, I)) return res;
  }
  if (total != n || span_dim(comps, n) != n) return res;
  res.semisimple = true;
  res.summands = minimal;
  return res;
}

namespace {

int annihilator_dim(const Algebra<G>& a, bool left, bool right) {
  int n = a.n;
  std::vector<VG> rows;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (left) {
        VG r(n);
        for (int i = 0; i < n; ++i) r[i] = a.at(i, j, k);
        rows.push_back(r);
      }
      if (right) {
        VG r(n);
        for (int i = 0; i < n; ++i) r[i] = a.at(j, i, k);
        rows.push_back(r);
      }
    }
  return n - span_dim(rows, n);
}

int trace_form_rank(const Algebra<G>& a, bool left1, bool left2) {
  int n = a.n;
  Matrix<G> B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<G> p = (left1 ? L(a, i) : R(a, i)) * (left2 ? L(a, j) : R(a, j));
      G t;
      for (int k = 0; k < n; ++k) t += p(k, k);
      B(i, j) = t;
    }
  return static_cast<int>(rank(B));
}

}  // namespace

int derivation_dim(const Algebra<G>& a) {
  int n = a.n;
  // unknown d(m,p): coefficient of e_p in D(e_m)
  Matrix<G> sys(n * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        size_t r = (i * n + j) * n + k;
        for (int m = 0; m < n; ++m) sys(r, m * n + k) += a.at(i, j, m);
        for (int p = 0; p < n; ++p) {
          sys(r, i * n + p) -= a.at(p, j, k);
          sys(r, j * n + p) -= a.at(i, p, k);
        }
      }
  return n * n - static_cast<int>(rank(sys));
}

namespace {

// slot 0, 1, 2: x in the left, middle or right argument of the associator
int nucleus_dim(const Algebra<G>& a, int slot) {
  int n = a.n;
  Matrix<G> m(n, n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int t[3] = {j, k, 0};
        int idx[3];
        for (int s = 0, u = 0; s < 3; ++s) idx[s] = s == slot ? i : t[u++];
        VG as = basis_assoc(a, idx[0], idx[1], idx[2]);
        for (int c = 0; c < n; ++c) m(i, (j * n + k) * n + c) = as[c];
      }
  return n - static_cast<int>(rank(m));
}

}  // namespace

Fingerprint fingerprint(const Algebra<G>& a) {
  int n = a.n;
  Fingerprint f;
  f.left_symmetric = static_cast<bool>(check_left_symmetric(a));
  f.associative = is_associative(a);
  f.transitive = is_transitive(a);
  f.novikov = is_novikov(a);
  f.bisymmetric = is_bisymmetric(a);
  f.commutative = is_commutative(a);
  std::vector<VG> prods;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prods.push_back(a.product(i, j));
  f.product_span = span_dim(prods, n);
  f.left_annihilator = annihilator_dim(a, true, false);
  f.right_annihilator = annihilator_dim(a, false, true);
  f.two_sided_annihilator = annihilator_dim(a, true, true);
  f.rank_LL = trace_form_rank(a, true, true);
  f.rank_RR = trace_form_rank(a, false, false);
  f.rank_LR = trace_form_rank(a, true, false);
  std::vector<VG> sl, sr;
  for (auto& p : prods)
    for (int k = 0; k < n; ++k) {
      sl.push_back(multiply(a, p, unit_vec<G>(n, k)));
      sr.push_back(multiply(a, unit_vec<G>(n, k), p));
    }
  f.square_left = span_dim(sl, n);
  f.square_right = span_dim(sr, n);
  std::vector<VG> sym;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) sym.push_back(a.product(i, j) + a.product(j, i));
  f.symmetric_span = span_dim(sym, n);
  f.derivations = derivation_dim(a);
  f.nucleus_left = nucleus_dim(a, 0);
  f.nucleus_middle = nucleus_dim(a, 1);
  f.nucleus_right = nucleus_dim(a, 2);
  if (n == 3) f.lie = classify3(commutator_lie(a));
  return f;
}

std::vector<std::pair<std::string, std::string>> Fingerprint::fields() const {
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  auto i = [](int x) { return std::to_string(x); };
  std::string lc = tag_name(lie.tag);
  if (lie.tag == LieTag::Dl && lie.invariant) lc += " l+1/l=" + lie.invariant->str();
  return {{"left_symmetric", b(left_symmetric)},
          {"associative", b(associative)},
          {"transitive", b(transitive)},
          {"novikov", b(novikov)},
          {"bisymmetric", b(bisymmetric)},
          {"commutative", b(commutative)},
          {"product_span", i(product_span)},
          {"left_annihilator", i(left_annihilator)},
          {"right_annihilator", i(right_annihilator)},
          {"two_sided_annihilator", i(two_sided_annihilator)},
          {"trace_form_LL_rank", i(rank_LL)},
          {"trace_form_RR_rank", i(rank_RR)},
          {"trace_form_LR_rank", i(rank_LR)},
          {"square_left_span", i(square_left)},
          {"square_right_span", i(square_right)},
          {"symmetric_span", i(symmetric_span)},
          {"derivation_dim", i(derivations)},
          {"left_nucleus", i(nucleus_left)},
          {"middle_nucleus", i(nucleus_middle)},
          {"right_nucleus", i(nucleus_right)},
          {"lie_class", lc}};
}

std::string Fingerprint::str() const {
  std::string s;
  for (auto& [k, v] : fields()) s += k + ": " + v + "\n";
  return s;
}

std::string fingerprint_difference(const Fingerprint& x, const Fingerprint& y) {
  auto fx = x.fields(), fy = y.fields();
  for (size_t k = 0; k < fx.size(); ++k)
    if (fx[k].second != fy[k].second) return fx[k].first;
  return "";
}

}  // namespace lsa
