#include "lsa/iso.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lsa {

using G = Gaussian;

std::string status_name(IsoStatus s) {
  switch (s) {
    case IsoStatus::Isomorphic: return "Isomorphic";
    case IsoStatus::NotIsomorphic: return "NotIsomorphic";
    default: return "Unknown";
  }
}

std::string IsoVerdict::str() const {
  std::string s = status_name(status);
  if (witness) s += " witness " + witness->str();
  if (!separating_field.empty()) s += " separated by " + separating_field;
  if (!note.empty()) s += " (" + note + ")";
  return s;
}

namespace {

std::vector<G> grid_values() {
  std::vector<G> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto add = [&](const G& g) {
    if (seen.insert({g.re().get_str(), g.im().get_str()}).second) out.push_back(g);
  };
  add(G(0));
  for (int h = 1; h <= 4; ++h)
    for (int q = 1; q <= h; ++q)
      for (int p = 1; p <= h; ++p) {
        if (std::max(p, q) != h) continue;
        Rational r(p, q);
        r.canonicalize();
        add(G(r));
        add(G(-r));
        add(G(0, r));
        add(G(0, -r));
      }
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      if (a && b) add(G(a, b));
  return out;
}

struct Solver {
  std::vector<std::string> params;
  std::function<bool(const Bindings&)> accept;
  long budget;
  bool used_grid = false;
  bool exhausted = false;
  std::vector<G> grid = grid_values();
  std::optional<Bindings> result;

  static std::vector<MultiPoly> simplify(std::vector<MultiPoly> eqs, bool& contradiction) {
    std::vector<MultiPoly> out;
    contradiction = false;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) {
        contradiction = true;
        return {};
      }
      MultiPoly m = e.scaled(e.leading_coeff().inverse());
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
      return a.terms().size() < b.terms().size();
    });
    return out;
  }

  static std::vector<MultiPoly> substitute(const std::vector<MultiPoly>& eqs, const std::string& v, const MultiPoly& val) {
    std::vector<MultiPoly> r;
    for (auto& e : eqs) r.push_back(e.subst(v, val));
    return r;
  }

  static std::map<std::string, MultiPoly> compose(std::map<std::string, MultiPoly> subs, const std::string& v,
                                                  const MultiPoly& val) {
    for (auto& [k, e] : subs) e = e.subst(v, val);
    subs[v] = val;
    return subs;
  }

  bool finish(const std::map<std::string, MultiPoly>& subs) {
    std::vector<std::string> free;
    for (auto& p : params) {
      bool bound = subs.count(p) > 0;
      if (!bound) free.push_back(p);
    }
    const std::vector<G> cands{G(1), G(0), G(2), G(-1), G(3)};
    long tries = 0;
    Bindings b;
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
      if (++tries > 4000) return false;
      if (k == free.size()) {
        Bindings full = b;
        for (auto& [v, e] : subs) full[v] = e.evaluate(b);
        if (accept(full)) {
          result = full;
          return true;
        }
        return false;
      }
      for (auto& c : cands) {
        b[free[k]] = c;
        if (rec(k + 1)) return true;
      }
      b.erase(free[k]);
      return false;
    };
    return rec(0);
  }

  bool dfs(std::vector<MultiPoly> eqs, std::map<std::string, MultiPoly> subs) {
    if (--budget < 0) {
      exhausted = true;
      return false;
    }
    bool bad;
    eqs = simplify(std::move(eqs), bad);
    if (bad) return false;
    if (eqs.empty()) return finish(subs);
    // linear elimination with a constant coefficient
    for (auto& e : eqs) {
      for (auto& v : e.vars()) {
        if (e.degree_in(v) != 1) continue;
        std::vector<std::string> others;
        auto groups = e.group_by(v, &others);
        MultiPoly coef, rest;
        bool const_coef = true;
        for (auto& [oe, p] : groups) {
          bool constant_mono = std::all_of(oe.begin(), oe.end(), [](int x) { return x == 0; });
          if (!p.coeff(1).is_zero() && !constant_mono) const_coef = false;
        }
        if (!const_coef) continue;
        G c;
        // coefficient of v: e = c*v + rest with rest free of v
        MultiPoly r0 = e.subst(v, MultiPoly(0));
        MultiPoly lin = e - r0;  // c * v
        c = lin.subst(v, MultiPoly(1)).constant_value();
        MultiPoly val = (-r0).scaled(c.inverse());
        return dfs(substitute(eqs, v, val), compose(subs, v, val));
      }
    }
    // univariate equation: branch on roots in Q(i)
    for (auto& e : eqs) {
      auto v = e.univariate_var();
      if (!v) continue;
      Poly1 p = e.to_poly1(*v);
      if (p.degree() > 4) continue;
      auto roots = roots_in_qi(p);
      for (auto& [r, m] : roots) {
        (void)m;
        MultiPoly val(r);
        if (dfs(substitute(eqs, *v, val), compose(subs, *v, val))) return true;
      }
      return false;
    }
    // grid branch on the most frequent variable
    std::map<std::string, int> freq;
    for (auto& e : eqs)
      for (auto& v : e.vars()) ++freq[v];
    std::string best;
    int bf = -1;
    for (auto& [v, f] : freq)
      if (f > bf) {
        bf = f;
        best = v;
      }
    used_grid = true;
    for (auto& g : grid) {
      MultiPoly val(g);
      if (dfs(substitute(eqs, best, val), compose(subs, best, val))) return true;
      if (budget < 0) return false;
    }
    return false;
  }
};

}  // namespace

IsoVerdict search_lsa_iso(const Algebra<G>& a, const Algebra<G>& b, const SearchOptions& opt) {
  IsoVerdict v;
  if (a.n != b.n) {
    v.status = IsoStatus::NotIsomorphic;
    v.separating_field = "dimension";
    return v;
  }
  if (a == b) {
    v.status = IsoStatus::Isomorphic;
    v.witness = Matrix<G>::identity(a.n);
    return v;
  }
  Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (a.n == 3 && !fa.lie.same_class(fb.lie)) {
    v.status = IsoStatus::NotIsomorphic;
    v.separating_field = "lie_class";
    v.note = "LieClassMismatch " + fa.lie.str() + " vs " + fb.lie.str();
    return v;
  }
  std::string diff = fingerprint_difference(fa, fb);
  if (!diff.empty()) {
    v.status = IsoStatus::NotIsomorphic;
    v.separating_field = diff;
    return v;
  }
  if (a.n != 3 || !fa.lie.witness || !fb.lie.witness) {
    v.note = "no canonical Lie basis available";
    return v;
  }
  const Matrix<G>& Pa = *fa.lie.witness;
  const Matrix<G>& Pb = *fb.lie.witness;
  Algebra<G> ca = change_basis(a, Pa), cb = change_basis(b, Pb);
  G lparam = fa.lie.param.value_or(G(1));
  auto grp = aut_group(fa.lie.tag, lparam);
  if (!grp) {
    v.note = "no automorphism group data";
    return v;
  }
  Algebra<MultiPoly> ma = ca.map([](const G& x) { return MultiPoly(x); });
  Algebra<MultiPoly> mb = cb.map([](const G& x) { return MultiPoly(x); });
  Matrix<G> Pai = inverse(Pa);
  long budget = opt.node_budget;
  bool grid_used = false, exhausted = false;
  for (const auto& comp : grp->components) {
    const Matrix<MultiPoly>& Fp = comp.pattern;
    std::vector<MultiPoly> eqs;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec<MultiPoly> lhs = ma.product(i, j) * Fp;
        Vec<MultiPoly> rhs = multiply(mb, Fp.row(i), Fp.row(j));
        for (int k = 0; k < 3; ++k) eqs.push_back(lhs[k] - rhs[k]);
      }
    Solver s;
    s.params = comp.params;
    s.budget = budget;
    s.accept = [&](const Bindings& bind) {
      Matrix<G> F = Fp.map([&](const MultiPoly& e) { return e.evaluate(bind); });
      if (det(F).is_zero()) return false;
      return verify_lsa_iso(ca, cb, F);
    };
    bool ok = s.dfs(eqs, {});
    budget = s.budget;
    grid_used |= s.used_grid;
    exhausted |= s.exhausted;
    if (ok) {
      Matrix<G> Fc = Fp.map([&](const MultiPoly& e) { return e.evaluate(*s.result); });
      Matrix<G> F = Pai * Fc * Pb;
      if (!verify_lsa_iso(a, b, F)) throw Error("internal: transported witness failed verification");
      v.status = IsoStatus::Isomorphic;
      v.witness = F;
      return v;
    }
  }
  v.note = exhausted ? "search budget exhausted" : (grid_used ? "no solution on the grid" : "no solution with entries in Q(i)");
  return v;
}

}  // namespace lsa
