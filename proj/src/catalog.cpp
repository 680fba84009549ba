#include "lsa/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lsa/errors.hpp"
#include "lsa/parse_scalar.hpp"
#include "lsa/props.hpp"

#ifndef LSA_DEFAULT_CATALOG_DIR
#define LSA_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace lsa {

const char* const kCatalogEnvVar = "LSA_CATALOG_DIR";

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Gaussian constant(const std::string& txt, int line) {
  RatFunc v = parse_scalar(txt, line, 1);
  if (!v.is_constant()) throw SemanticError("line " + std::to_string(line) + ": expected a constant, got " + txt);
  return v.constant_value();
}

// "p = v, q = w"
Bindings parse_assignments(const std::string& s, int line) {
  Bindings b;
  if (trim(s).empty()) return b;
  for (auto& part : split(s, ',')) {
    size_t eq = part.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected name = value", line, 1);
    b[trim(part.substr(0, eq))] = constant(part.substr(eq + 1), line);
  }
  return b;
}

FlagClaim parse_claim(const std::string& rest, int line) {
  FlagClaim c;
  size_t w = rest.find(" when ");
  c.name = trim(rest.substr(0, w));
  if (w != std::string::npos) c.when = parse_assignments(rest.substr(w + 6), line);
  const auto& names = FlagSet::names();
  if (std::find(names.begin(), names.end(), c.name) == names.end())
    throw SemanticError("line " + std::to_string(line) + ": unknown flag " + c.name);
  return c;
}

bool claim_applies(const FlagClaim& c, const Bindings& b) {
  for (auto& [k, v] : c.when) {
    auto it = b.find(k);
    if (it == b.end() || !(it->second == v)) return false;
  }
  return true;
}

void finalize(Catalog& cat) {
  for (auto& e : cat.entries) {
    if (e.primed.empty()) continue;
    for (auto& t : cat.entries)
      if (t.id == e.primed) e.target_flags = t.flags;
  }
}

}  // namespace

std::vector<std::string> CatalogEntry::free_params() const {
  std::vector<std::string> out;
  for (auto& p : params)
    if (!p.fixed) out.push_back(p.name);
  return out;
}

const CatalogEntry& Catalog::lookup(const std::string& id) const {
  for (auto& e : entries)
    if (e.id == id) return e;
  throw UnknownId("unknown catalog id " + id);
}

std::vector<const CatalogEntry*> Catalog::family(const std::string& fam) const {
  std::vector<const CatalogEntry*> out;
  for (auto& e : entries)
    if (fam.empty() || e.family == fam) out.push_back(&e);
  return out;
}

std::vector<std::string> family_names() { return {"H", "N", "D1", "Dl", "E"}; }

LieTag family_tag(const std::string& f) {
  if (f == "H") return LieTag::Heisenberg;
  if (f == "N") return LieTag::N;
  if (f == "D1" || f == "Dl") return LieTag::Dl;
  if (f == "E") return LieTag::E;
  throw UnknownId("unknown family " + f);
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv(kCatalogEnvVar); env && *env) return env;
  return LSA_DEFAULT_CATALOG_DIR;
}

void parse_catalog_text(Catalog& cat, const std::string& text, const std::string& file) {
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  std::string family;
  CatalogEntry* cur = nullptr;
  std::vector<bool> seen;
  auto where = [&] { return file + ":" + std::to_string(line) + ": "; };
  auto check_vars = [&](const RatFunc& x) {
    for (auto& v : x.vars()) {
      bool ok = std::any_of(cur->params.begin(), cur->params.end(), [&](const ParamSpec& p) { return p.name == v; });
      if (!ok) throw SemanticError(where() + "undeclared parameter " + v + " in " + cur->id);
    }
  };
  auto mat = [&](const std::string& rhs) {
    Matrix<RatFunc> m = matrix_from_literal(parse_matrix_literal(rhs, line, 1), 3, line, 1);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) check_vars(m(i, j));
    return m;
  };
  while (std::getline(is, raw)) {
    ++line;
    std::string l = trim(raw.substr(0, raw.find('#')));
    if (l.empty()) continue;
    try {
      if (starts(l, "catalog ")) {
        std::istringstream hs(l);
        std::string kw, fam, kd, dim, kdom, dom;
        hs >> kw >> fam >> kd >> dim >> kdom >> dom;
        if (kd != "dim" || dim != "3" || kdom != "domain" || dom != "ratfunc")
          throw SyntaxError("expected 'catalog FAM dim 3 domain ratfunc'", line, 1);
        family_tag(fam);
        family = fam;
      } else if (starts(l, "remark ")) {
        Remark r;
        r.line = line;
        r.text = trim(l.substr(7));
        for (auto& link : split(r.text, '~')) {
          RemarkLink rl;
          size_t br = link.find('[');
          rl.id = trim(link.substr(0, br));
          if (br != std::string::npos) {
            if (link.back() != ']') throw SyntaxError("unterminated binding list", line, 1);
            rl.overrides = parse_assignments(link.substr(br + 1, link.size() - br - 2), line);
          }
          r.chain.push_back(rl);
        }
        if (r.chain.size() < 2) throw SyntaxError("remark needs at least two entries", line, 1);
        cat.remarks.push_back(r);
      } else if (starts(l, "entry ")) {
        if (cur) throw SyntaxError("missing 'end' before new entry", line, 1);
        if (family.empty()) throw SyntaxError("entry before catalog header", line, 1);
        cat.entries.emplace_back();
        cur = &cat.entries.back();
        cur->id = trim(l.substr(6));
        cur->family = family;
        cur->file = file;
        cur->line = line;
        seen.assign(9, false);
        for (size_t k = 0; k + 1 < cat.entries.size(); ++k)
          if (cat.entries[k].id == cur->id) throw SemanticError(where() + "duplicate entry " + cur->id);
      } else if (!cur) {
        throw SyntaxError("line outside an entry", line, 1);
      } else if (l == "end") {
        cur = nullptr;
      } else if (starts(l, "param ")) {
        ParamSpec p;
        std::string rest = trim(l.substr(6));
        size_t ne = rest.find("!=");
        std::string head = trim(rest.substr(0, ne));
        if (ne != std::string::npos)
          for (auto& v : split(rest.substr(ne + 2), ',')) p.excluded.push_back(constant(v, line));
        size_t eq = head.find('=');
        if (eq != std::string::npos) {
          p.name = trim(head.substr(0, eq));
          p.fixed = constant(head.substr(eq + 1), line);
        } else {
          std::istringstream ps(head);
          std::string tag;
          ps >> p.name >> tag;
          if (tag == "dl") p.dl = true;
          else if (!tag.empty()) throw SyntaxError("unknown parameter qualifier " + tag, line, 1);
        }
        cur->params.push_back(p);
      } else if (starts(l, "case ")) {
        cur->case_label = trim(l.substr(5));
      } else if (starts(l, "primed ")) {
        cur->primed = trim(l.substr(7));
      } else if (starts(l, "flag ")) {
        cur->flags.push_back(parse_claim(l.substr(5), line));
      } else if (starts(l, "erratum ")) {
        cur->errata.push_back(parse_claim(l.substr(8), line));
      } else if (starts(l, "reconstruct ")) {
        size_t eq = l.find('=');
        if (trim(l.substr(12, eq - 12)) != "T") throw SyntaxError("expected reconstruct T = ...", line, 1);
        cur->reconstruct = mat(l.substr(eq + 1));
      } else if (starts(l, "iso ")) {
        std::istringstream ss(l.substr(4));
        WitnessIso w;
        std::string kw;
        ss >> w.target >> kw;
        if (kw == "T") {
          w.T = mat(l.substr(l.find('=') + 1));
        } else if (kw != "search") {
          throw SyntaxError("expected 'iso ID T = ...' or 'iso ID search'", line, 1);
        }
        cur->isos.push_back(w);
      } else if (starts(l, "f(e")) {
        size_t eq = l.find('=');
        int k = parse_basis_name(trim(l.substr(2, l.find(')') - 2)));
        if (k < 0 || k > 2) throw SyntaxError("expected f(e1..e3)", line, 1);
        if (!cur->F) cur->F = std::vector<Matrix<RatFunc>>(3, Matrix<RatFunc>(3, 3));
        (*cur->F)[k] = mat(l.substr(eq + 1));
      } else if (starts(l, "C ")) {
        cur->C = mat(l.substr(l.find('=') + 1));
      } else {
        size_t eq = l.find('=');
        if (eq == std::string::npos) throw SyntaxError("unrecognized line", line, 1);
        std::istringstream ss(l.substr(0, eq));
        std::string a, b;
        ss >> a >> b;
        int i = parse_basis_name(a), j = parse_basis_name(b);
        if (i < 0 || j < 0 || i > 2 || j > 2) throw SyntaxError("unrecognized line", line, 1);
        if (seen[i * 3 + j]) throw SemanticError(where() + "duplicate product in " + cur->id);
        seen[i * 3 + j] = true;
        Vec<RatFunc> v = parse_linear_combination(l.substr(eq + 1), 3, line, static_cast<int>(eq) + 2);
        for (auto& x : v) check_vars(x);
        cur->table.set_product(i, j, v);
      }
    } catch (const SyntaxError& e) {
      throw Error(file + ":" + e.what());
    }
  }
  if (cur) throw SyntaxError(file + ": entry " + cur->id + " lacks 'end'", line, 1);
  finalize(cat);
}

Catalog load_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("catalog directory not found: " + dir);
  std::vector<fs::path> files;
  for (auto& de : fs::directory_iterator(dir))
    if (de.path().extension() == ".cat") files.push_back(de.path());
  std::sort(files.begin(), files.end());
  // remarks reference entries from every family file
  std::stable_partition(files.begin(), files.end(), [](const fs::path& p) { return p.stem() != "remarks"; });
  Catalog cat;
  for (auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    parse_catalog_text(cat, ss.str(), f.filename().string());
  }
  for (auto& e : cat.entries) {
    if (!e.primed.empty()) cat.lookup(e.primed);
    for (auto& w : e.isos) cat.lookup(w.target);
  }
  for (auto& r : cat.remarks)
    for (auto& link : r.chain) cat.lookup(link.id);
  return cat;
}

void check_param_value(const CatalogEntry& e, const ParamSpec& p, const Gaussian& v) {
  if (p.fixed) {
    if (!(v == *p.fixed)) throw ConstraintViolated(e.id + " requires " + p.name + " = " + p.fixed->str());
    return;
  }
  for (auto& ex : p.excluded)
    if (v == ex) throw ConstraintViolated(e.id + " requires " + p.name + " != " + ex.str());
  if (p.dl) {
    if (v.is_zero() || v.is_one()) throw ConstraintViolated(e.id + " requires " + p.name + " != 0, 1");
    if (!is_canonical_l(v))
      throw ConstraintViolated(e.id + ": " + p.name + " = " + v.str() + " is not canonical (use " +
                               canonical_l(v).str() + ")");
  }
}

Bindings resolve_bindings_with(const CatalogEntry& e, const Bindings& b, const Bindings& overrides) {
  Bindings out;
  for (auto& [k, v] : b)
    if (std::none_of(e.params.begin(), e.params.end(), [&](const ParamSpec& p) { return p.name == k; }))
      throw ConstraintViolated(e.id + " has no parameter " + k);
  for (auto& p : e.params) {
    if (auto o = overrides.find(p.name); o != overrides.end()) {
      out[p.name] = o->second;
      continue;
    }
    auto it = b.find(p.name);
    if (p.fixed) {
      if (it != b.end()) check_param_value(e, p, it->second);
      out[p.name] = *p.fixed;
      continue;
    }
    if (it == b.end()) throw ConstraintViolated(e.id + " needs a value for " + p.name);
    const Gaussian& v = it->second;
    check_param_value(e, p, v);
    out[p.name] = v;
  }
  return out;
}

Bindings resolve_bindings(const CatalogEntry& e, const Bindings& b) { return resolve_bindings_with(e, b, {}); }

Matrix<Gaussian> instantiate_matrix(const Matrix<RatFunc>& m, const Bindings& b) {
  try {
    return m.map([&](const RatFunc& x) { return x.evaluate(b); });
  } catch (const DenominatorVanishes& ex) {
    throw ConstraintViolated(std::string("denominator vanishes: ") + ex.what());
  }
}

Algebra<Gaussian> instantiate(const CatalogEntry& e, const Bindings& resolved) {
  try {
    return e.table.map([&](const RatFunc& x) { return x.evaluate(resolved); });
  } catch (const DenominatorVanishes& ex) {
    throw ConstraintViolated(e.id + ": denominator vanishes: " + ex.what());
  }
}

Algebra<Gaussian> instantiate(const Catalog& cat, const std::string& id, const Bindings& b) {
  const CatalogEntry& e = cat.lookup(id);
  return instantiate(e, resolve_bindings(e, b));
}

LieAlgebra<Gaussian> entry_lie(const CatalogEntry& e, const Bindings& resolved) {
  if (e.family == "Dl") return canonical_lie(LieTag::Dl, resolved.at("l"));
  return canonical_lie(family_tag(e.family), Gaussian(1));
}

std::optional<Cocycle<Gaussian>> entry_cocycle(const CatalogEntry& e, const Bindings& resolved) {
  if (!e.F || !e.C) return std::nullopt;
  Cocycle<Gaussian> c;
  c.rep.g = entry_lie(e, resolved);
  for (auto& f : *e.F) c.rep.F.push_back(instantiate_matrix(f, resolved));
  c.C = instantiate_matrix(*e.C, resolved);
  return c;
}

SamplePlan SamplePlan::defaults() {
  SamplePlan p;
  p.values["lambda"] = {Gaussian(2), Gaussian(-1), Gaussian(Rational(1, 2)), Gaussian(3)};
  p.values["mu"] = {Gaussian(1), Gaussian(2), Gaussian(-1)};
  // 2 is listed on purpose: canonicalization rejects it in favour of 1/2
  p.values["l"] = {Gaussian(Rational(1, 2)), Gaussian(-1), Gaussian(2), Gaussian::I()};
  return p;
}

std::string bindings_str(const Bindings& b) {
  if (b.empty()) return "";
  std::string s = "[";
  bool first = true;
  for (auto& [k, v] : b) {
    s += (first ? "" : ", ") + k + "=" + v.str();
    first = false;
  }
  return s + "]";
}

namespace {

std::vector<Bindings> cartesian(const std::vector<std::pair<std::string, std::vector<Gaussian>>>& axes) {
  std::vector<Bindings> out{Bindings{}};
  for (auto& [name, vals] : axes) {
    std::vector<Bindings> next;
    for (auto& b : out)
      for (auto& v : vals) {
        Bindings c = b;
        c[name] = v;
        next.push_back(c);
      }
    out = next;
  }
  return out;
}

void add_unique(std::vector<Gaussian>& vs, const Gaussian& v) {
  if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
}

}  // namespace

std::vector<Bindings> samples(const CatalogEntry& e, const SamplePlan& plan) {
  std::vector<std::pair<std::string, std::vector<Gaussian>>> axes;
  for (auto& name : e.free_params()) {
    std::vector<Gaussian> vals;
    if (auto it = plan.values.find(name); it != plan.values.end()) vals = it->second;
    else vals = {Gaussian(1), Gaussian(2)};
    if (plan.include_flag_values) {
      for (auto* claims : {&e.flags, &e.errata, &e.target_flags})
        for (auto& c : *claims)
          if (auto w = c.when.find(name); w != c.when.end()) add_unique(vals, w->second);
    }
    axes.push_back({name, vals});
  }
  std::vector<Bindings> out;
  for (auto& b : cartesian(axes)) {
    try {
      Bindings r = resolve_bindings(e, b);
      instantiate(e, r);
      out.push_back(r);
    } catch (const ConstraintViolated&) {
    }
  }
  return out;
}

const std::vector<std::string>& FlagSet::names() {
  static const std::vector<std::string> n = {"associative", "transitive", "novikov", "bisymmetric", "simple", "semisimple"};
  return n;
}

bool FlagSet::get(const std::string& n) const {
  if (n == "associative") return associative;
  if (n == "transitive") return transitive;
  if (n == "novikov") return novikov;
  if (n == "bisymmetric") return bisymmetric;
  if (n == "simple") return simple;
  if (n == "semisimple") return semisimple;
  throw Error("unknown flag " + n);
}

void FlagSet::set(const std::string& n, bool v) {
  if (n == "associative") associative = v;
  else if (n == "transitive") transitive = v;
  else if (n == "novikov") novikov = v;
  else if (n == "bisymmetric") bisymmetric = v;
  else if (n == "simple") simple = v;
  else if (n == "semisimple") semisimple = v;
  else throw Error("unknown flag " + n);
}

std::string FlagSet::str() const {
  std::string s = "{";
  for (auto& n : names())
    if (get(n)) s += (s.size() > 1 ? ", " : "") + n;
  return s + "}";
}

FlagSet computed_flags(const Algebra<Gaussian>& a) {
  FlagSet f;
  f.associative = is_associative(a);
  f.transitive = is_transitive(a);
  f.novikov = is_novikov(a);
  f.bisymmetric = is_bisymmetric(a);
  f.simple = is_simple(a);
  f.semisimple = f.simple || is_semisimple(a).semisimple;
  return f;
}

FlagSet expected_flags(const Catalog&, const CatalogEntry& e, const Bindings& b, bool with_errata) {
  FlagSet f;
  const auto& claims = e.canonical() ? e.flags : e.target_flags;
  for (auto& c : claims)
    if (claim_applies(c, b)) f.set(c.name, true);
  if (with_errata)
    for (auto& c : e.errata)
      if (claim_applies(c, b)) f.set(c.name, true);
  return f;
}

std::string EntryReport::str() const {
  auto yn = [](bool v) { return v ? "ok" : "FAIL"; };
  std::ostringstream os;
  os << id << bindings_str(bindings) << ": left_symmetric " << yn(left_symmetric) << ", lie_class "
     << yn(lie_class_ok) << ", reconstruction " << (has_cocycle ? yn(reconstruction_ok) : "n/a") << ", flags "
     << yn(flags_ok) << ", witness_isos " << yn(witness_isos_ok);
  for (auto& p : problems) os << "\n    " << p;
  return os.str();
}

EntryReport verify_entry(const Catalog& cat, const CatalogEntry& e, const Bindings& b) {
  EntryReport r;
  r.id = e.id;
  Bindings rb = resolve_bindings(e, b);
  r.bindings = rb;
  Algebra<Gaussian> a = instantiate(e, rb);

  auto ls = check_left_symmetric(a);
  r.left_symmetric = ls.ok;
  if (!ls.ok) r.problems.push_back("left-symmetry: " + ls.str());

  LieClass got = classify3(commutator_lie(a));
  LieClass want;
  want.tag = family_tag(e.family);
  if (e.family == "D1") want.param = Gaussian(1);
  if (e.family == "Dl") want.param = canonical_l(rb.at("l"));
  r.lie_class_ok = got.tag == want.tag && (!want.param || (got.param && *got.param == *want.param));
  if (!r.lie_class_ok) r.problems.push_back("lie class: got " + got.str() + ", expected " + tag_name(want.tag) + (want.param ? "(" + want.param->str() + ")" : ""));

  auto c = entry_cocycle(e, rb);
  r.has_cocycle = c.has_value();
  r.reconstruction_ok = true;
  if (c) {
    auto rep = check_representation(c->rep);
    auto coc = rep.ok ? check_cocycle(*c) : Certificate<Gaussian>{};
    if (!rep.ok) {
      r.reconstruction_ok = false;
      r.problems.push_back("representation: " + rep.str());
    } else if (!coc.ok) {
      r.reconstruction_ok = false;
      r.problems.push_back("cocycle: " + coc.str());
    } else if (!is_bijective(*c)) {
      r.reconstruction_ok = false;
      r.problems.push_back("cocycle is not bijective");
    } else {
      Algebra<Gaussian> p = phi(*c);
      if (e.reconstruct) {
        Matrix<Gaussian> T = instantiate_matrix(*e.reconstruct, rb);
        bool ok = false;
        try {
          ok = verify_lsa_iso(p, a, T);
        } catch (const SingularWitness&) {
        }
        r.reconstruction_ok = ok;
        if (!ok) r.problems.push_back("reconstruction witness does not map phi output onto the table");
      } else if (!(p == a)) {
        r.reconstruction_ok = false;
        r.problems.push_back("phi output differs from the table");
      }
    }
  }

  r.computed = computed_flags(a);
  FlagSet published = expected_flags(cat, e, rb, false);
  r.expected = expected_flags(cat, e, rb, true);
  r.flags_ok = r.computed == r.expected;
  for (auto& n : FlagSet::names())
    if (r.expected.get(n) && !published.get(n)) r.errata_used.push_back(n);
  if (!r.flags_ok) r.problems.push_back("flags: computed " + r.computed.str() + ", expected " + r.expected.str());

  r.witness_isos_ok = true;
  for (auto& w : e.isos) {
    const CatalogEntry& t = cat.lookup(w.target);
    Bindings tb;
    for (auto& p : t.free_params())
      if (rb.count(p)) tb[p] = rb.at(p);
    Algebra<Gaussian> ta = instantiate(t, resolve_bindings(t, tb));
    bool ok = false;
    if (w.T) {
      try {
        ok = verify_lsa_iso(a, ta, instantiate_matrix(*w.T, rb));
      } catch (const SingularWitness&) {
      }
      if (!ok) r.problems.push_back("stored witness to " + w.target + " fails");
    } else {
      IsoVerdict v = search_lsa_iso(a, ta);
      ok = v.status == IsoStatus::Isomorphic;
      if (!ok) r.problems.push_back("search to " + w.target + ": " + v.str());
    }
    r.witness_isos_ok = r.witness_isos_ok && ok;
  }
  return r;
}

EntryReport verify_entry(const Catalog& cat, const std::string& id, const Bindings& b) {
  return verify_entry(cat, cat.lookup(id), b);
}

std::string VerifySummary::str() const {
  std::ostringstream os;
  os << entries_ok << "/" << entries << " classes verified (" << samples << " samples, " << failures
     << " failing)\n";
  for (auto& n : notes) os << "note: " << n << "\n";
  for (auto& f : failed) os << "FAIL " << f.str() << "\n";
  return os.str();
}

VerifySummary verify_all(const Catalog& cat, const std::string& family, const Bindings& pinned, const SamplePlan& plan) {
  VerifySummary s;
  SamplePlan p = plan;
  for (auto& [k, v] : pinned) p.values[k] = {v};
  if (!pinned.empty()) p.include_flag_values = false;
  for (auto* e : cat.family(family)) {
    // pinned values that this entry cannot take exclude it from the run
    std::string why;
    for (auto& [k, v] : pinned)
      for (auto& prm : e->params)
        if (prm.name == k && why.empty()) {
          try {
            check_param_value(*e, prm, v);
          } catch (const ConstraintViolated& ex) {
            why = ex.what();
          }
        }
    if (!why.empty()) {
      ++s.skipped;
      s.notes.push_back("skipped " + why);
      continue;
    }
    auto ss = samples(*e, p);
    bool ok = true;
    if (ss.empty()) {
      ok = false;
      s.notes.push_back(e->id + ": no admissible sample");
    }
    for (auto& b : ss) {
      EntryReport r = verify_entry(cat, *e, b);
      ++s.samples;
      for (auto& n : r.errata_used) s.notes.push_back(e->id + bindings_str(r.bindings) + ": " + n + " holds (erratum: absent from the published list)");
      if (!r.ok()) {
        ok = false;
        ++s.failures;
        s.failed.push_back(r);
      }
    }
    if (e->canonical()) {
      ++s.entries;
      if (ok) ++s.entries_ok;
    } else if (!ok) {
      s.notes.push_back(e->id + " (primed display of " + e->primed + ") failed");
    }
  }
  return s;
}

std::string PropertyTableReport::str() const {
  std::ostringstream os;
  os << "property tables: " << checked << " entry samples, " << discrepancies.size() << " discrepancies\n";
  for (auto& [fam, props] : sets)
    for (auto& n : FlagSet::names()) {
      os << "  " << fam << " " << n << ": {";
      auto it = props.find(n);
      if (it != props.end())
        for (size_t k = 0; k < it->second.size(); ++k) os << (k ? ", " : "") << it->second[k];
      os << "}\n";
    }
  for (auto& d : discrepancies) os << "  discrepancy: " << d << "\n";
  return os.str();
}

PropertyTableReport verify_property_tables(const Catalog& cat, const SamplePlan& plan) {
  PropertyTableReport r;
  for (auto& fam : family_names()) r.sets[fam];
  for (auto& e : cat.entries) {
    if (!e.canonical()) continue;
    auto ss = samples(e, plan);
    std::map<std::string, std::vector<std::string>> hits;
    for (auto& b : ss) {
      ++r.checked;
      Algebra<Gaussian> a = instantiate(e, b);
      FlagSet got = computed_flags(a), want = expected_flags(cat, e, b, false);
      for (auto& n : FlagSet::names()) {
        if (got.get(n)) hits[n].push_back(e.id + bindings_str(b));
        if (got.get(n) != want.get(n))
          r.discrepancies.push_back(e.id + bindings_str(b) + ": " + n + " computed " + (got.get(n) ? "true" : "false") +
                                    ", published " + (want.get(n) ? "true" : "false"));
      }
    }
    for (auto& [n, list] : hits) {
      auto& dst = r.sets[e.family][n];
      if (list.size() == ss.size()) dst.push_back(e.id);
      else dst.insert(dst.end(), list.begin(), list.end());
    }
  }
  return r;
}

std::string RemarkReport::str() const {
  std::ostringstream os;
  os << "remark coincidences: " << confirmed << " confirmed, " << unconfirmed << " unconfirmed, " << refuted
     << " refuted\n";
  for (auto& c : checks)
    if (c.verdict.status != IsoStatus::Isomorphic)
      os << "  " << c.a << bindings_str(c.ba) << " ~ " << c.b << bindings_str(c.bb) << ": " << c.verdict.str() << "\n";
  return os.str();
}

RemarkReport verify_remark_isos(const Catalog& cat, const SamplePlan& plan) {
  RemarkReport rep;
  for (auto& rm : cat.remarks) {
    std::vector<const CatalogEntry*> es;
    std::vector<std::pair<std::string, std::vector<Gaussian>>> axes;
    for (auto& link : rm.chain) {
      es.push_back(&cat.lookup(link.id));
      for (auto& name : es.back()->free_params()) {
        if (link.overrides.count(name)) continue;
        if (std::any_of(axes.begin(), axes.end(), [&](auto& ax) { return ax.first == name; })) continue;
        auto it = plan.values.find(name);
        axes.push_back({name, it != plan.values.end() ? it->second : std::vector<Gaussian>{1, 2}});
      }
    }
    for (auto& shared : cartesian(axes)) {
      std::vector<Bindings> bs;
      std::vector<Algebra<Gaussian>> as;
      try {
        for (size_t k = 0; k < es.size(); ++k) {
          Bindings mine;
          for (auto& name : es[k]->free_params())
            if (shared.count(name) && !rm.chain[k].overrides.count(name)) mine[name] = shared.at(name);
          bs.push_back(resolve_bindings_with(*es[k], mine, rm.chain[k].overrides));
          as.push_back(instantiate(*es[k], bs.back()));
        }
      } catch (const ConstraintViolated&) {
        continue;
      }
      for (size_t k = 1; k < es.size(); ++k) {
        RemarkCheck c{es[0]->id, es[k]->id, bs[0], bs[k], search_lsa_iso(as[0], as[k])};
        if (c.verdict.status == IsoStatus::Isomorphic) ++rep.confirmed;
        else if (c.verdict.status == IsoStatus::Unknown) ++rep.unconfirmed;
        else ++rep.refuted;
        rep.checks.push_back(c);
      }
    }
  }
  return rep;
}

}  // namespace lsa
