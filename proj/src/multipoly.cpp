#include "lsa/multipoly.hpp"

#include <algorithm>

#include "lsa/errors.hpp"

namespace lsa {

MultiPoly::MultiPoly(const Gaussian& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

MultiPoly::MultiPoly(std::vector<std::string> vars, std::map<Exps, Gaussian> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  prune();
}

MultiPoly MultiPoly::var(const std::string& name) { return MultiPoly({name}, {{{1}, Gaussian(1)}}); }

MultiPoly MultiPoly::from_poly1(const Poly1& p, const std::string& name) {
  std::map<Exps, Gaussian> t;
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) t[{k}] = p.coeff(k);
  return MultiPoly({name}, std::move(t));
}

void MultiPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  std::vector<bool> used(vars_.size(), false);
  for (auto& [e, c] : terms_)
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k]) used[k] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) nv.push_back(vars_[k]);
  std::map<Exps, Gaussian> nt;
  for (auto& [e, c] : terms_) {
    Exps ne;
    for (size_t k = 0; k < e.size(); ++k)
      if (used[k]) ne.push_back(e[k]);
    nt[ne] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MultiPoly MultiPoly::remap(const std::vector<std::string>& vars) const {
  std::vector<size_t> pos;
  for (const auto& v : vars_) pos.push_back(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  MultiPoly r;
  r.vars_ = vars;
  for (auto& [e, c] : terms_) {
    Exps ne(vars.size(), 0);
    for (size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
    r.terms_[ne] = c;
  }
  return r;
}

static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

Gaussian MultiPoly::constant_value() const {
  if (!is_constant()) throw DomainMismatch("not a constant: " + str());
  return terms_.empty() ? Gaussian() : terms_.begin()->second;
}

Gaussian MultiPoly::leading_coeff() const { return terms_.empty() ? Gaussian() : terms_.rbegin()->second; }

bool MultiPoly::has_var(const std::string& name) const {
  return std::binary_search(vars_.begin(), vars_.end(), name);
}

int MultiPoly::degree_in(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return 0;
  size_t k = it - vars_.begin();
  int d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) {
    MultiPoly r = a;
    for (auto& [e, c] : b.terms_) r.terms_[e] += c;
    r.prune();
    return r;
  }
  auto u = union_vars(a.vars_, b.vars_);
  return a.remap(u) + b.remap(u);
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (a.vars_ != b.vars_) {
    auto u = union_vars(a.vars_, b.vars_);
    return a.remap(u) * b.remap(u);
  }
  MultiPoly r;
  r.vars_ = a.vars_;
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      MultiPoly::Exps e(ea.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.terms_[e] += ca * cb;
    }
  r.prune();
  return r;
}

MultiPoly MultiPoly::scaled(const Gaussian& c) const {
  if (c.is_zero()) return MultiPoly();
  MultiPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly r = one(), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const Bindings& b) const {
  std::vector<int> bound(vars_.size(), 0);
  bool any = false;
  std::vector<Gaussian> vals(vars_.size());
  for (size_t k = 0; k < vars_.size(); ++k) {
    auto it = b.find(vars_[k]);
    if (it != b.end()) {
      bound[k] = 1;
      vals[k] = it->second;
      any = true;
    }
  }
  if (!any) return *this;
  MultiPoly r;
  r.vars_ = vars_;
  for (auto& [e, c] : terms_) {
    Gaussian x = c;
    Exps ne = e;
    for (size_t k = 0; k < e.size(); ++k)
      if (bound[k]) {
        for (int j = 0; j < e[k]; ++j) x *= vals[k];
        ne[k] = 0;
      }
    r.terms_[ne] += x;
  }
  r.prune();
  return r;
}

Gaussian MultiPoly::evaluate(const Bindings& b) const {
  MultiPoly r = substitute(b);
  if (!r.is_constant()) throw UnboundVariable("unbound variable " + r.vars_.front());
  return r.constant_value();
}

MultiPoly MultiPoly::subst(const std::string& name, const MultiPoly& value) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return *this;
  size_t k = it - vars_.begin();
  int maxd = degree_in(name);
  std::vector<MultiPoly> pw{one()};
  for (int j = 1; j <= maxd; ++j) pw.push_back(pw.back() * value);
  MultiPoly r;
  for (auto& [e, c] : terms_) {
    Exps ne = e;
    ne[k] = 0;
    MultiPoly mono(vars_, {{ne, c}});
    r += mono * pw[e[k]];
  }
  return r;
}

std::optional<std::string> MultiPoly::univariate_var() const {
  if (vars_.size() == 1) return vars_.front();
  return std::nullopt;
}

Poly1 MultiPoly::to_poly1(const std::string& name) const {
  if (is_constant()) return Poly1::constant(constant_value());
  if (vars_.size() != 1 || vars_.front() != name) throw DomainMismatch("not univariate in " + name + ": " + str());
  std::vector<Gaussian> c(degree_in(name) + 1);
  for (auto& [e, x] : terms_) c[e[0]] = x;
  return Poly1(std::move(c));
}

std::map<MultiPoly::Exps, Poly1> MultiPoly::group_by(const std::string& name, std::vector<std::string>* others) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  long k = (it != vars_.end() && *it == name) ? it - vars_.begin() : -1;
  std::vector<std::string> ov;
  for (long j = 0; j < static_cast<long>(vars_.size()); ++j)
    if (j != k) ov.push_back(vars_[j]);
  std::map<Exps, std::vector<Gaussian>> g;
  for (auto& [e, c] : terms_) {
    Exps oe;
    for (long j = 0; j < static_cast<long>(e.size()); ++j)
      if (j != k) oe.push_back(e[j]);
    int d = k >= 0 ? e[k] : 0;
    auto& v = g[oe];
    if (static_cast<int>(v.size()) <= d) v.resize(d + 1);
    v[d] = c;
  }
  if (others) *others = ov;
  std::map<Exps, Poly1> out;
  for (auto& [oe, v] : g) out[oe] = Poly1(v);
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_by(const Poly1& d, const std::string& name) const {
  std::vector<std::string> ov;
  auto groups = group_by(name, &ov);
  std::vector<std::string> vars = ov;
  vars.push_back(name);
  std::sort(vars.begin(), vars.end());
  size_t kn = std::lower_bound(vars.begin(), vars.end(), name) - vars.begin();
  std::map<Exps, Gaussian> t;
  for (auto& [oe, p] : groups) {
    auto [q, r] = Poly1::divmod(p, d);
    if (!r.is_zero()) return std::nullopt;
    for (int j = 0; j <= q.degree(); ++j) {
      if (q.coeff(j).is_zero()) continue;
      Exps e;
      size_t oi = 0;
      for (size_t v = 0; v < vars.size(); ++v) e.push_back(v == kn ? j : oe[oi++]);
      t[e] = q.coeff(j);
    }
  }
  return MultiPoly(vars, std::move(t));
}

MultiPoly MultiPoly::divide_monomial(const std::map<std::string, int>& ex) const {
  MultiPoly r = *this;
  std::map<Exps, Gaussian> nt;
  for (auto& [e, c] : terms_) {
    Exps ne = e;
    for (size_t k = 0; k < vars_.size(); ++k) {
      auto it = ex.find(vars_[k]);
      if (it != ex.end()) ne[k] -= it->second;
      if (ne[k] < 0) throw DomainMismatch("monomial does not divide");
    }
    nt[ne] = c;
  }
  return MultiPoly(vars_, std::move(nt));
}

bool MultiPoly::is_compound() const {
  if (terms_.size() > 1) return true;
  if (terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    return c.is_compound() && constant;
  }
  return false;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t k = 0; k < vars_.size(); ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string term;
    if (mono.empty()) term = c.str();
    else if (c.is_one()) term = mono;
    else if (c == Gaussian(-1)) term = "-" + mono;
    else if (c.is_compound()) term = "(" + c.str() + ")*" + mono;
    else term = c.str() + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace lsa
