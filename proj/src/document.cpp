#include "lsa/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lsa/errors.hpp"
#include "lsa/parse_scalar.hpp"

namespace lsa {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Splits at depth-0 commas.
std::vector<std::pair<std::string, int>> split_commas(const std::string& s, int offset) {
  std::vector<std::pair<std::string, int>> out;
  int depth = 0;
  size_t st = 0;
  for (size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || (s[k] == ',' && depth == 0)) {
      out.push_back({s.substr(st, k - st), offset + static_cast<int>(st)});
      st = k + 1;
    } else if (s[k] == '(') {
      ++depth;
    } else if (s[k] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace

int parse_basis_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'e') return -1;
  for (size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return -1;
  int v = std::stoi(s.substr(1));
  return v >= 1 ? v - 1 : -1;
}

std::vector<std::vector<RatFunc>> parse_matrix_literal(const std::string& s, int line, int col) {
  std::string t = trim(s);
  if (t == "0") return {};
  size_t p = s.find('[');
  if (p == std::string::npos || t.front() != '[' || t.back() != ']')
    throw SyntaxError("expected matrix literal [[...],...]", line, col);
  std::vector<std::vector<RatFunc>> rows;
  size_t k = p + 1;
  for (;;) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k >= s.size() || s[k] != '[') throw SyntaxError("expected '[' starting a row", line, col + static_cast<int>(k));
    size_t e = s.find(']', k);
    if (e == std::string::npos) throw SyntaxError("unterminated row", line, col + static_cast<int>(k));
    std::vector<RatFunc> row;
    for (auto& [txt, off] : split_commas(s.substr(k + 1, e - k - 1), col + static_cast<int>(k) + 1)) {
      if (trim(txt).empty()) throw SyntaxError("empty matrix entry", line, off);
      row.push_back(parse_scalar(txt, line, off));
    }
    rows.push_back(row);
    k = e + 1;
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k < s.size() && s[k] == ',') {
      ++k;
      continue;
    }
    if (k < s.size() && s[k] == ']') {
      if (!trim(s.substr(k + 1)).empty()) throw SyntaxError("trailing text after matrix", line, col + static_cast<int>(k) + 1);
      return rows;
    }
    throw SyntaxError("expected ',' or ']'", line, col + static_cast<int>(k));
  }
}

Matrix<RatFunc> matrix_from_literal(const std::vector<std::vector<RatFunc>>& rows, int n, int line, int col) {
  if (rows.empty()) return Matrix<RatFunc>(n, n);
  if (static_cast<int>(rows.size()) != n) throw SemanticError("line " + std::to_string(line) + ":" + std::to_string(col) + ": matrix must have " + std::to_string(n) + " rows");
  for (auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw SemanticError("line " + std::to_string(line) + ":" + std::to_string(col) + ": matrix rows must have " + std::to_string(n) + " entries");
  return Matrix<RatFunc>::from_rows(rows, n);
}

Vec<RatFunc> parse_linear_combination(const std::string& s, int n, int line, int col) {
  Vec<RatFunc> v(n, RatFunc());
  std::string t = trim(s);
  if (t.empty()) throw SyntaxError("empty right-hand side", line, col);
  if (t == "0") return v;
  // term boundaries: depth-0 signs not following an operator
  std::vector<std::pair<size_t, size_t>> terms;
  int depth = 0;
  size_t st = 0;
  char prev = 0;
  for (size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if ((c == '+' || c == '-') && depth == 0 && prev && std::string("*/^(+-").find(prev) == std::string::npos) {
      terms.push_back({st, k});
      st = k;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  terms.push_back({st, s.size()});
  for (auto [a, b] : terms) {
    std::string term = s.substr(a, b - a);
    int tcol = col + static_cast<int>(a);
    std::string tt = trim(term);
    // trailing basis vector
    size_t e = tt.size();
    while (e > 0 && std::isdigit(static_cast<unsigned char>(tt[e - 1]))) --e;
    if (e == 0 || e == tt.size() || tt[e - 1] != 'e' ||
        (e >= 2 && (std::isalnum(static_cast<unsigned char>(tt[e - 2])) || tt[e - 2] == '_')))
      throw SyntaxError("term must end with a basis vector e<k>", line, tcol);
    int k = std::stoi(tt.substr(e)) - 1;
    if (k < 0 || k >= n) throw SemanticError("line " + std::to_string(line) + ": basis vector e" + std::to_string(k + 1) + " out of range");
    std::string coef = trim(tt.substr(0, e - 1));
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    RatFunc c;
    if (coef.empty() || coef == "+") c = RatFunc(1);
    else if (coef == "-") c = RatFunc(-1);
    else {
      size_t off = term.find(coef);
      c = parse_scalar(coef, line, tcol + static_cast<int>(off));
    }
    v[k] += c;
  }
  return v;
}

std::string format_linear_combination(const Vec<RatFunc>& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = coefficient_str(v[k]);
    std::string b = "e" + std::to_string(k + 1);
    std::string term = c == "1" ? b : (c == "-1" ? "-" + b : c + " " + b);
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::string format_matrix(const Matrix<RatFunc>& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::string kind_name(DocKind k) {
  switch (k) {
    case DocKind::Algebra: return "algebra";
    case DocKind::Lie: return "lie";
    case DocKind::Representation: return "representation";
    case DocKind::Cocycle: return "cocycle";
    case DocKind::RMatrix: return "rmatrix";
    case DocKind::OOperator: return "ooperator";
    default: return "iso_witness";
  }
}

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::Rational: return "rational";
    case Domain::Gaussian: return "gaussian";
    default: return "ratfunc";
  }
}

namespace {

struct DocParser {
  Document d;
  std::vector<bool> seen_products, seen_brackets, seen_f;
  int line = 0;

  [[noreturn]] void semantic(const std::string& m) { throw SemanticError("line " + std::to_string(line) + ": " + m); }

  void check_scalar(const RatFunc& x) {
    for (auto& v : x.vars()) {
      bool declared = std::any_of(d.params.begin(), d.params.end(), [&](const ParamDecl& p) { return p.name == v; });
      if (!declared) semantic("unbound parameter " + v);
    }
    if (d.domain != Domain::RatFunc && !x.vars().empty()) semantic("parameters not allowed in domain " + domain_name(d.domain));
    if (d.domain == Domain::Rational) {
      auto rational = [](const MultiPoly& p) {
        for (auto& [e, c] : p.terms())
          if (!c.is_rational()) return false;
        return true;
      };
      if (!rational(x.num()) || !rational(x.den())) semantic("imaginary unit not allowed in domain rational");
    }
  }
  void check_vec(const Vec<RatFunc>& v) {
    for (auto& x : v) check_scalar(x);
  }
  Matrix<RatFunc> matrix(const std::string& rhs, int col) {
    Matrix<RatFunc> m = matrix_from_literal(parse_matrix_literal(rhs, line, col), d.dim, line, col);
    for (size_t i = 0; i < m.rows(); ++i) check_vec(m.row(i));
    return m;
  }

  void header(const std::string& l) {
    std::istringstream is(l);
    std::string k1, kind, k2, dim, k3, dom, extra;
    is >> k1 >> kind >> k2 >> dim >> k3 >> dom;
    if (k1 != "kind" || k2 != "dim" || k3 != "domain" || dom.empty() || (is >> extra))
      throw SyntaxError("expected header 'kind <kind> dim <n> domain <domain>'", line, 1);
    const DocKind kinds[] = {DocKind::Algebra, DocKind::Lie, DocKind::Representation, DocKind::Cocycle,
                             DocKind::RMatrix, DocKind::OOperator, DocKind::IsoWitness};
    bool found = false;
    for (auto k : kinds)
      if (kind_name(k) == kind) {
        d.kind = k;
        found = true;
      }
    if (!found) throw SyntaxError("unknown kind '" + kind + "'", line, static_cast<int>(l.find(kind)) + 1);
    if (dim.empty() || !std::all_of(dim.begin(), dim.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SyntaxError("dimension must be an integer", line, static_cast<int>(l.find(dim)) + 1);
    d.dim = std::stoi(dim);
    if (d.dim < 1 || d.dim > 4) semantic("dimension must be between 1 and 4");
    if (dom == "rational") d.domain = Domain::Rational;
    else if (dom == "gaussian") d.domain = Domain::Gaussian;
    else if (dom == "ratfunc") d.domain = Domain::RatFunc;
    else throw SyntaxError("unknown domain '" + dom + "'", line, static_cast<int>(l.find(dom)) + 1);
    int n = d.dim;
    d.algebra = Algebra<RatFunc>(n);
    d.lie = LieAlgebra<RatFunc>(n);
    seen_products.assign(n * n, false);
    seen_brackets.assign(n * n, false);
    seen_f.assign(n, false);
    if (d.kind == DocKind::Representation || d.kind == DocKind::Cocycle || d.kind == DocKind::OOperator)
      d.F.assign(n, Matrix<RatFunc>(n, n));
  }

  void params(const std::string& l) {
    std::string rest = trim(l.substr(6));
    size_t ne = rest.find("!=");
    std::string name = trim(rest.substr(0, ne));
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') || name == "i" ||
        parse_basis_name(name) >= 0 ||
        !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
      throw SyntaxError("bad parameter name '" + name + "'", line, 8);
    if (d.domain != Domain::RatFunc) semantic("params require domain ratfunc");
    ParamDecl p{name, {}};
    if (ne != std::string::npos) {
      int off = static_cast<int>(l.find("!=")) + 3;
      for (auto& [txt, o] : split_commas(rest.substr(ne + 2), off)) {
        RatFunc v = parse_scalar(txt, line, o);
        if (!v.is_constant()) semantic("parameter exclusions must be constants");
        p.excluded.push_back(v);
      }
    }
    d.params.push_back(p);
  }

  void body(const std::string& raw) {
    size_t eq = raw.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected '='", line, static_cast<int>(raw.size()) + 1);
    std::string lhs = trim(raw.substr(0, eq));
    std::string rhs = raw.substr(eq + 1);
    int rcol = static_cast<int>(eq) + 2;
    int n = d.dim;
    auto need = [&](std::initializer_list<DocKind> ks) {
      if (std::find(ks.begin(), ks.end(), d.kind) == ks.end())
        semantic("'" + lhs + "' line not allowed in a " + kind_name(d.kind) + " document");
    };
    if (lhs.size() > 2 && lhs.front() == '[' && lhs.back() == ']') {
      need({DocKind::Lie, DocKind::Representation, DocKind::Cocycle, DocKind::RMatrix, DocKind::OOperator});
      std::string in = lhs.substr(1, lhs.size() - 2);
      size_t c = in.find(',');
      int i = c == std::string::npos ? -1 : parse_basis_name(trim(in.substr(0, c)));
      int j = c == std::string::npos ? -1 : parse_basis_name(trim(in.substr(c + 1)));
      if (i < 0 || j < 0) throw SyntaxError("expected [e<i>,e<j>]", line, 1);
      if (i >= n || j >= n) semantic("basis index out of range");
      if (i == j) semantic("[e_i,e_i] is zero by antisymmetry");
      if (seen_brackets[i * n + j]) semantic("duplicate bracket");
      seen_brackets[i * n + j] = seen_brackets[j * n + i] = true;
      Vec<RatFunc> v = parse_linear_combination(rhs, n, line, rcol);
      check_vec(v);
      d.lie.set(i, j, v);
      return;
    }
    if (lhs.rfind("f(", 0) == 0 && lhs.back() == ')') {
      need({DocKind::Representation, DocKind::Cocycle, DocKind::OOperator});
      int i = parse_basis_name(trim(lhs.substr(2, lhs.size() - 3)));
      if (i < 0) throw SyntaxError("expected f(e<i>)", line, 1);
      if (i >= n) semantic("basis index out of range");
      if (seen_f[i]) semantic("duplicate f line");
      seen_f[i] = true;
      d.F[i] = matrix(rhs, rcol);
      return;
    }
    if (lhs == "C" || lhs == "R" || lhs == "T") {
      if (lhs == "C") need({DocKind::Cocycle});
      if (lhs == "R") need({DocKind::RMatrix});
      if (lhs == "T") need({DocKind::OOperator, DocKind::IsoWitness});
      auto& slot = lhs == "C" ? d.C : (lhs == "R" ? d.R : d.T);
      if (slot) semantic("duplicate " + lhs + " line");
      slot = matrix(rhs, rcol);
      return;
    }
    std::istringstream is(lhs);
    std::string a, b, extra;
    is >> a >> b;
    int i = parse_basis_name(a), j = parse_basis_name(b);
    if (i < 0 || j < 0 || (is >> extra)) throw SyntaxError("unrecognized line", line, 1);
    need({DocKind::Algebra});
    if (i >= n || j >= n) semantic("basis index out of range");
    if (seen_products[i * n + j]) semantic("duplicate product e" + std::to_string(i + 1) + " e" + std::to_string(j + 1));
    seen_products[i * n + j] = true;
    Vec<RatFunc> v = parse_linear_combination(rhs, n, line, rcol);
    check_vec(v);
    d.algebra.set_product(i, j, v);
  }

  Document run(const std::string& text) {
    std::istringstream is(text);
    std::string l;
    bool have_header = false;
    while (std::getline(is, l)) {
      ++line;
      if (!l.empty() && l.back() == '\r') l.pop_back();
      std::string t = trim(l);
      if (t.empty() || t[0] == '#') continue;
      try {
        if (!have_header) {
          header(t);
          have_header = true;
        } else if (t.rfind("params", 0) == 0 && (t.size() == 6 || t[6] == ' ')) {
          params(l.substr(l.find("params")));
        } else if (d.kind == DocKind::IsoWitness && (t.rfind("from ", 0) == 0 || t.rfind("to ", 0) == 0)) {
          std::string ref = trim(t.substr(t.find(' ')));
          (t[0] == 'f' ? d.from : d.to) = ref;
        } else {
          body(l);
        }
      } catch (const DivisionByZero& e) {
        semantic(e.what());
      }
    }
    if (!have_header) throw SyntaxError("missing header line", line + 1, 1);
    if (d.kind == DocKind::Cocycle && !d.C) semantic("cocycle document needs a C line");
    if (d.kind == DocKind::RMatrix && !d.R) semantic("rmatrix document needs an R line");
    if ((d.kind == DocKind::OOperator || d.kind == DocKind::IsoWitness) && !d.T) semantic("document needs a T line");
    if (d.kind == DocKind::IsoWitness && (d.from.empty() || d.to.empty())) semantic("iso_witness needs from and to lines");
    return d;
  }
};

}  // namespace

Document parse_document(const std::string& text) { return DocParser().run(text); }

std::string emit_document(const Document& d) {
  std::ostringstream os;
  int n = d.dim;
  os << "kind " << kind_name(d.kind) << " dim " << n << " domain " << domain_name(d.domain) << "\n";
  for (auto& p : d.params) {
    os << "params " << p.name;
    for (size_t k = 0; k < p.excluded.size(); ++k) os << (k ? ", " : " != ") << p.excluded[k].str();
    os << "\n";
  }
  if (d.kind == DocKind::IsoWitness) {
    os << "from " << d.from << "\nto " << d.to << "\n";
  }
  if (d.kind == DocKind::Algebra) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<RatFunc> v = d.algebra.product(i, j);
        if (!is_zero_vec(v)) os << "e" << i + 1 << " e" << j + 1 << " = " << format_linear_combination(v) << "\n";
      }
  } else if (d.kind != DocKind::IsoWitness) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec<RatFunc> v = d.lie.bracket(i, j);
        if (!is_zero_vec(v)) os << "[e" << i + 1 << ",e" << j + 1 << "] = " << format_linear_combination(v) << "\n";
      }
  }
  for (size_t i = 0; i < d.F.size(); ++i)
    os << "f(e" << i + 1 << ") = " << (d.F[i].is_zero() ? std::string("0") : format_matrix(d.F[i])) << "\n";
  if (d.C) os << "C = " << format_matrix(*d.C) << "\n";
  if (d.R) os << "R = " << format_matrix(*d.R) << "\n";
  if (d.T) os << "T = " << format_matrix(*d.T) << "\n";
  return os.str();
}

Document read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Bindings check_document_bindings(const Document& d, const Bindings& b) {
  Bindings out;
  for (auto& [k, v] : b) {
    bool declared = std::any_of(d.params.begin(), d.params.end(), [&](const ParamDecl& p) { return p.name == k; });
    if (!declared) throw SemanticError("binding for undeclared parameter " + k);
  }
  for (auto& p : d.params) {
    auto it = b.find(p.name);
    if (it == b.end()) throw SemanticError("parameter " + p.name + " needs a value (--param " + p.name + "=...)");
    for (auto& ex : p.excluded)
      if (ex.constant_value() == it->second) throw SemanticError("parameter " + p.name + " may not be " + it->second.str());
    out[p.name] = it->second;
  }
  return out;
}

Document algebra_document(const Algebra<RatFunc>& a, Domain domain) {
  Document d;
  d.kind = DocKind::Algebra;
  d.dim = a.n;
  d.domain = domain;
  d.algebra = a;
  return d;
}

}  // namespace lsa
