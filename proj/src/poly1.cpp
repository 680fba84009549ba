#include "lsa/poly1.hpp"

#include <algorithm>
#include <map>

#include "lsa/errors.hpp"

namespace lsa {

void Poly1::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly1 Poly1::monomial(const Gaussian& a, int k) {
  std::vector<Gaussian> c(k + 1);
  c[k] = a;
  return Poly1(std::move(c));
}

Poly1 Poly1::monic() const {
  if (is_zero()) return *this;
  Gaussian inv = lead().inverse();
  std::vector<Gaussian> c = c_;
  for (auto& x : c) x *= inv;
  return Poly1(std::move(c));
}

Gaussian Poly1::eval(const Gaussian& x) const {
  Gaussian r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly1 Poly1::derivative() const {
  std::vector<Gaussian> c;
  for (size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * Gaussian(static_cast<long>(k)));
  return Poly1(std::move(c));
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  std::vector<Gaussian> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Poly1(std::move(c));
}
Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }
Poly1 Poly1::operator-() const {
  std::vector<Gaussian> c = c_;
  for (auto& x : c) x = -x;
  return Poly1(std::move(c));
}
Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  std::vector<Gaussian> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly1(std::move(c));
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly1 r = a;
  int db = b.degree();
  if (r.degree() < db) return {Poly1(), r};
  std::vector<Gaussian> q(r.degree() - db + 1);
  Gaussian inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Gaussian f = r.lead() * inv;
    q[k] = f;
    r = r - monomial(f, k) * b;
  }
  return {Poly1(std::move(q)), r};
}

Poly1 Poly1::gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<Poly1, Poly1> Poly1::inverse_mod(const Poly1& a, const Poly1& m) {
  Poly1 r0 = m, r1 = divmod(a, m).second;
  Poly1 s0, s1 = constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly1 s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, Poly1()};
  Gaussian inv = r0.lead().inverse();
  return {r0.monic(), divmod(s0 * constant(inv), m).second};
}

std::string Poly1::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Gaussian& a = c_[k];
    if (a.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coef;
    bool neg = false;
    if (mono.empty()) {
      coef = a.str();
    } else if (a.is_one()) {
      coef = "";
    } else if (a == Gaussian(-1)) {
      neg = true;
    } else if (a.is_compound()) {
      coef = "(" + a.str() + ")*";
    } else {
      coef = a.str() + "*";
    }
    std::string term = neg ? "-" + mono : coef + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

namespace {

// Gaussian integers as pairs of mpz.
struct GInt {
  mpz_class re, im;
};

bool gint_divides(const GInt& d, const GInt& z) {
  // z / d = z * conj(d) / N(d)
  mpz_class n = d.re * d.re + d.im * d.im;
  mpz_class a = z.re * d.re + z.im * d.im;
  mpz_class b = z.im * d.re - z.re * d.im;
  return mpz_divisible_p(a.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(b.get_mpz_t(), n.get_mpz_t());
}

std::vector<mpz_class> int_divisors(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> pf;
  mpz_class p = 2;
  while (p * p <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      int e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
      }
      pf.push_back({p, e});
    }
    p += (p == 2 ? 1 : 2);
  }
  if (n > 1) pf.push_back({n, 1});
  std::vector<mpz_class> ds{1};
  for (auto& [q, e] : pf) {
    size_t m = ds.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pw);
    }
  }
  return ds;
}

// All Gaussian-integer divisors of z up to units (one per associate class).
std::vector<GInt> gint_divisors(const GInt& z) {
  mpz_class n = z.re * z.re + z.im * z.im;
  if (n > mpz_class("1000000000000000")) throw Error("coefficients too large for root search");
  std::vector<GInt> out;
  for (const mpz_class& m : int_divisors(n)) {
    mpz_class x = 0;
    while (x * x <= m) {
      mpz_class y2 = m - x * x;
      if (mpz_perfect_square_p(y2.get_mpz_t())) {
        mpz_class y;
        mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
        // re > 0, im >= 0 picks one member of each associate class
        if (x > 0) {
          GInt d{x, y};
          if (gint_divides(d, z)) out.push_back(d);
        }
      }
      ++x;
    }
  }
  return out;
}

// Coefficients scaled into Z[i].
std::vector<GInt> clear_denominators(const Poly1& p) {
  mpz_class l = 1;
  for (const auto& a : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.im().get_den_mpz_t());
  }
  std::vector<GInt> out;
  for (const auto& a : p.coeffs()) {
    Rational r = a.re() * l, m = a.im() * l;
    out.push_back({r.get_num(), m.get_num()});
  }
  return out;
}

std::optional<Gaussian> find_root(const Poly1& p) {
  if (p.degree() < 1) return std::nullopt;
  if (p.coeff(0).is_zero()) return Gaussian();
  if (p.degree() == 1) return -p.coeff(0) / p.coeff(1);
  auto z = clear_denominators(p);
  auto ps = gint_divisors(z.front());
  auto qs = gint_divisors(z.back());
  const Gaussian units[4] = {Gaussian(1), Gaussian(-1), Gaussian::I(), -Gaussian::I()};
  for (const auto& q : qs) {
    Gaussian qq(Rational(q.re), Rational(q.im));
    for (const auto& pd : ps) {
      Gaussian pp(Rational(pd.re), Rational(pd.im));
      for (const auto& u : units) {
        Gaussian r = u * pp / qq;
        if (p.eval(r).is_zero()) return r;
      }
    }
  }
  return std::nullopt;
}

void add_factor(std::vector<Factor>& fs, const Poly1& f) {
  for (auto& x : fs)
    if (x.factor == f) {
      ++x.multiplicity;
      return;
    }
  fs.push_back({f, 1});
}

// Factors a monic polynomial without roots in Q(i), degree <= 4.
void factor_rootless(const Poly1& p, std::vector<Factor>& fs) {
  if (p.degree() <= 3) {
    add_factor(fs, p);
    return;
  }
  // Quartic: try a split into two quadratics via the resolvent cubic.
  Gaussian a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
  Poly1 res({-(a * a * d - Gaussian(4) * b * d + c * c), a * c - Gaussian(4) * d, -b, Gaussian(1)});
  std::vector<Gaussian> zs;
  Poly1 r = res;
  while (r.degree() >= 1) {
    auto z = find_root(r);
    if (!z) break;
    zs.push_back(*z);
    r = Poly1::divmod(r, Poly1::linear_root(*z)).first;
  }
  for (const auto& z : zs) {
    // beta, delta roots of s^2 - z s + d; alpha, gamma roots of s^2 - a s + (b - z)
    auto s1 = sqrt_exact(z * z - Gaussian(4) * d);
    auto s2 = sqrt_exact(a * a - Gaussian(4) * (b - z));
    if (!s1 || !s2) continue;
    Gaussian half = Gaussian(Rational(1, 2));
    Gaussian beta = (z + *s1) * half, delta = (z - *s1) * half;
    for (int sgn2 : {1, -1}) {
      Gaussian alpha = (a + Gaussian(sgn2) * *s2) * half, gamma = (a - Gaussian(sgn2) * *s2) * half;
      Poly1 f1({beta, alpha, Gaussian(1)}), f2({delta, gamma, Gaussian(1)});
      if (f1 * f2 == p) {
        add_factor(fs, f1);
        add_factor(fs, f2);
        return;
      }
    }
  }
  add_factor(fs, p);
}

}  // namespace

std::vector<std::pair<Gaussian, int>> roots_in_qi(const Poly1& p) {
  std::vector<std::pair<Gaussian, int>> out;
  for (const auto& f : factor_low_degree(p).factors)
    if (f.factor.degree() == 1) out.push_back({-f.factor.coeff(0), f.multiplicity});
  return out;
}

Factorization factor_low_degree(const Poly1& p) {
  if (p.is_zero()) throw DivisionByZero("factor of zero polynomial");
  if (p.degree() > 4) throw DegreeTooHigh("degree " + std::to_string(p.degree()) + " > 4");
  Factorization out{p.lead(), {}};
  Poly1 r = p.monic();
  while (r.degree() >= 1) {
    auto z = find_root(r);
    if (!z) break;
    Poly1 lin = Poly1::linear_root(*z);
    add_factor(out.factors, lin);
    r = Poly1::divmod(r, lin).first;
  }
  if (r.degree() >= 2) {
    if (r.degree() == 2) {
      add_factor(out.factors, r);
    } else {
      factor_rootless(r, out.factors);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& x, const Factor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    return std::lexicographical_compare(x.factor.coeffs().begin(), x.factor.coeffs().end(),
                                        y.factor.coeffs().begin(), y.factor.coeffs().end());
  });
  return out;
}

}  // namespace lsa
