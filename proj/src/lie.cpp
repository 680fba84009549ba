#include "lsa/lie.hpp"

namespace lsa {

std::string tag_name(LieTag t) {
  switch (t) {
    case LieTag::Abelian: return "Abelian";
    case LieTag::Heisenberg: return "Heisenberg";
    case LieTag::N: return "N";
    case LieTag::Dl: return "Dl";
    case LieTag::E: return "E";
    case LieTag::Sl2: return "Sl2";
    default: return "Unrecognized";
  }
}

std::string LieClass::str() const {
  std::string s = tag_name(tag);
  if (param) s += "(l=" + param->str() + ")";
  else if (tag == LieTag::Dl && invariant) s += "(l+1/l=" + invariant->str() + ")";
  return s;
}

bool LieClass::same_class(const LieClass& o) const {
  if (tag != o.tag) return false;
  if (tag != LieTag::Dl) return true;
  return invariant == o.invariant;
}

bool is_canonical_l(const Gaussian& l) {
  if (l.is_zero()) return false;
  Rational nn = l.norm();
  if (nn < 1) return true;
  return nn == 1 && sgn(l.im()) >= 0;
}

Gaussian canonical_l(const Gaussian& l) {
  if (l.is_zero()) return l;
  return is_canonical_l(l) ? l : l.inverse();
}

LieAlgebra<Gaussian> canonical_lie(LieTag tag, const Gaussian& l) {
  using V = Vec<Gaussian>;
  LieAlgebra<Gaussian> g(3);
  switch (tag) {
    case LieTag::Heisenberg: g.set(0, 1, V{0, 0, 1}); break;
    case LieTag::N: g.set(2, 1, V{0, 1, 0}); break;
    case LieTag::Dl:
      g.set(2, 0, V{1, 0, 0});
      g.set(2, 1, V{0, l, 0});
      break;
    case LieTag::E:
      g.set(2, 0, V{1, 0, 0});
      g.set(2, 1, V{1, 1, 0});
      break;
    case LieTag::Sl2:
      g.set(0, 1, V{0, 2, 0});
      g.set(0, 2, V{0, 0, -2});
      g.set(1, 2, V{1, 0, 0});
      break;
    default: break;
  }
  return g;
}

namespace {

using G = Gaussian;
using VG = Vec<Gaussian>;

// Row basis of the span of the given vectors.
std::vector<VG> row_basis(const std::vector<VG>& vs, size_t n) {
  if (vs.empty()) return {};
  Matrix<G> m = Matrix<G>::from_rows(vs, n);
  auto piv = rref(m);
  std::vector<VG> out;
  for (size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(i));
  return out;
}

VG center_vector(const LieAlgebra<G>& g) {
  int n = g.n;
  Matrix<G> m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m(j * n + k, i) = g.at(i, j, k);
  auto ns = nullspace(m);
  return ns.empty() ? VG() : ns.front();
}

}  // namespace

LieClass classify3(const LieAlgebra<G>& g) {
  if (g.n != 3) throw NotDimension3("classify3 needs dimension 3");
  LieClass out;
  std::vector<VG> brs;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) brs.push_back(g.bracket(i, j));
  auto D = row_basis(brs, 3);
  size_t d = D.size();
  if (d == 0) {
    out.tag = LieTag::Abelian;
    out.witness = Matrix<G>::identity(3);
    return out;
  }
  if (d == 1) {
    const VG& z = D[0];
    bool central = true;
    int k_nc = -1;
    for (int k = 0; k < 3; ++k)
      if (!is_zero_vec(g.bracket(unit_vec<G>(3, k), z))) {
        central = false;
        k_nc = k;
        break;
      }
    if (central) {
      out.tag = LieTag::Heisenberg;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          VG b = g.bracket(i, j);
          if (is_zero_vec(b)) continue;
          out.witness = Matrix<G>::from_rows({unit_vec<G>(3, i), unit_vec<G>(3, j), b}, 3);
          return out;
        }
    }
    out.tag = LieTag::N;
    VG ek = unit_vec<G>(3, k_nc);
    VG w = g.bracket(ek, z);
    auto alpha = solve_row_combination<G>({z}, w);
    VG e3 = scale(G(1) / (*alpha)[0], ek);
    VG c = center_vector(g);
    out.witness = Matrix<G>::from_rows({c, z, e3}, 3);
    return out;
  }
  if (d == 2) {
    out.tag = LieTag::Dl;
    int k_out = 0;
    for (int k = 0; k < 3; ++k)
      if (!solve_row_combination(D, unit_vec<G>(3, k))) {
        k_out = k;
        break;
      }
    VG x = unit_vec<G>(3, k_out);
    // A: column j = coordinates of [x, d_j] in the basis D
    Matrix<G> A(2, 2);
    for (int j = 0; j < 2; ++j) {
      auto co = solve_row_combination(D, g.bracket(x, D[j]));
      if (!co) {
        out.tag = LieTag::Unrecognized;
        return out;
      }
      A(0, j) = (*co)[0];
      A(1, j) = (*co)[1];
    }
    G tr = A(0, 0) + A(1, 1), dt = det(A);
    if (dt.is_zero()) {
      out.tag = LieTag::Unrecognized;
      return out;
    }
    G disc = tr * tr - G(4) * dt;
    out.invariant = tr * tr / dt - G(2);
    auto to_g = [&](const VG& y) { return scale(y[0], D[0]) + scale(y[1], D[1]); };
    if (disc.is_zero()) {
      G alpha = tr / G(2);
      Matrix<G> Nm = A - alpha * Matrix<G>::identity(2);
      if (Nm.is_zero()) {
        out.param = G(1);
        out.witness = Matrix<G>::from_rows({D[0], D[1], scale(alpha.inverse(), x)}, 3);
        return out;
      }
      out.tag = LieTag::E;
      out.invariant.reset();
      Matrix<G> Ns = alpha.inverse() * Nm;
      int j = Ns.col(0) != VG{0, 0} ? 0 : 1;
      VG y2 = unit_vec<G>(2, j), y1 = Ns.col(j);
      out.witness = Matrix<G>::from_rows({to_g(y1), to_g(y2), scale(alpha.inverse(), x)}, 3);
      return out;
    }
    auto s = sqrt_exact(disc);
    if (!s) {
      out.eigenvalue_outside_domain = true;
      return out;
    }
    G a1 = (tr + *s) / G(2), a2 = (tr - *s) / G(2);
    if (!is_canonical_l(a2 / a1)) std::swap(a1, a2);
    out.param = a2 / a1;
    auto eig = [&](const G& a) { return nullspace(A - a * Matrix<G>::identity(2)).front(); };
    out.witness = Matrix<G>::from_rows({to_g(eig(a1)), to_g(eig(a2)), scale(a1.inverse(), x)}, 3);
    return out;
  }
  out.tag = rank(killing_form(g)) == 3 ? LieTag::Sl2 : LieTag::Unrecognized;
  return out;
}

namespace {

MultiPoly pv(const std::string& s) { return MultiPoly::var(s); }

Matrix<MultiPoly> pm(std::initializer_list<std::initializer_list<MultiPoly>> rows) { return Matrix<MultiPoly>(rows); }

}  // namespace

std::optional<AutGroup> aut_group(LieTag tag, const Gaussian& l) {
  MultiPoly a11 = pv("a11"), a12 = pv("a12"), a13 = pv("a13"), a21 = pv("a21"), a22 = pv("a22"),
            a23 = pv("a23"), a31 = pv("a31"), a32 = pv("a32"), a33 = pv("a33");
  MultiPoly z(0), o(1);
  switch (tag) {
    case LieTag::Abelian:
      return AutGroup{"GL3", {{pm({{a11, a12, a13}, {a21, a22, a23}, {a31, a32, a33}}),
                               {"a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33"}}}};
    case LieTag::Heisenberg:
      return AutGroup{"H", {{pm({{a11, a12, a13}, {a21, a22, a23}, {z, z, a11 * a22 - a12 * a21}}),
                             {"a11", "a12", "a13", "a21", "a22", "a23"}}}};
    case LieTag::N:
      return AutGroup{"N", {{pm({{a11, z, z}, {z, a22, z}, {a31, a32, o}}), {"a11", "a22", "a31", "a32"}}}};
    case LieTag::Dl: {
      if (l == Gaussian(1))
        return AutGroup{"D1", {{pm({{a11, a12, z}, {a21, a22, z}, {a31, a32, o}}),
                                {"a11", "a12", "a21", "a22", "a31", "a32"}}}};
      AutComponent generic{pm({{a11, z, z}, {z, a22, z}, {a31, a32, o}}), {"a11", "a22", "a31", "a32"}};
      if (l == Gaussian(-1))
        return AutGroup{"Dm1", {generic, {pm({{z, a12, z}, {a21, z, z}, {a31, a32, MultiPoly(-1)}}),
                                          {"a12", "a21", "a31", "a32"}}}};
      return AutGroup{"Dl", {generic}};
    }
    case LieTag::E:
      return AutGroup{"E", {{pm({{a11, z, z}, {a21, a11, z}, {a31, a32, o}}), {"a11", "a21", "a31", "a32"}}}};
    default: return std::nullopt;
  }
}

bool aut_group_member(const AutGroup& grp, const Matrix<Gaussian>& T) {
  if (det(T).is_zero()) return false;
  for (const auto& comp : grp.components) {
    Bindings b;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        const MultiPoly& e = comp.pattern(i, j);
        if (e.vars().size() == 1 && e.terms().size() == 1 && e.total_degree() == 1 && e.leading_coeff().is_one() &&
            !b.count(e.vars().front()))
          b[e.vars().front()] = T(i, j);
      }
    if (b.size() != comp.params.size()) continue;
    bool ok = true;
    for (size_t i = 0; i < 3 && ok; ++i)
      for (size_t j = 0; j < 3 && ok; ++j) ok = comp.pattern(i, j).evaluate(b) == T(i, j);
    if (ok) return true;
  }
  return false;
}

bool check_lie_automorphism(const LieAlgebra<Gaussian>& g, const Matrix<Gaussian>& T) {
  bool direct = preserves_bracket(g, T);
  if (g.n == 3) {
    LieClass c = classify3(g);
    if (c.tag != LieTag::Sl2 && c.tag != LieTag::Unrecognized && c.witness && c.tag != LieTag::Dl) {
      if (canonical_lie(c.tag) == g) {
        auto grp = aut_group(c.tag);
        if (grp && aut_group_member(*grp, T) != direct)
          throw Error("automorphism group data disagrees with bracket check");
      }
    } else if (c.tag == LieTag::Dl && c.param && canonical_lie(c.tag, *c.param) == g) {
      auto grp = aut_group(c.tag, *c.param);
      if (grp && aut_group_member(*grp, T) != direct)
        throw Error("automorphism group data disagrees with bracket check");
    }
  }
  return direct;
}

}  // namespace lsa
