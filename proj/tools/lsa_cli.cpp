// lsa: command-line front end for the library.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "lsa/catalog.hpp"
#include "lsa/constructions.hpp"
#include "lsa/document.hpp"
#include "lsa/errors.hpp"
#include "lsa/iso.hpp"
#include "lsa/parse_scalar.hpp"
#include "lsa/props.hpp"

using namespace lsa;

namespace {

constexpr int kOk = 0, kFail = 1, kInput = 2;

struct InputError : Error {
  using Error::Error;
};

Bindings parse_params(const std::vector<std::string>& items) {
  Bindings b;
  for (auto& it : items) {
    size_t eq = it.find('=');
    if (eq == std::string::npos) throw InputError("--param expects name=value, got " + it);
    RatFunc v = parse_scalar(it.substr(eq + 1));
    if (!v.is_constant()) throw InputError("--param value must be a constant: " + it);
    b[it.substr(0, eq)] = v.constant_value();
  }
  return b;
}

template <class T>
auto to_gaussian(const T& x, const Bindings& b) {
  return x.map([&](const RatFunc& r) { return r.evaluate(b); });
}

struct Resolved {
  Algebra<Gaussian> a{3};
  std::string label;
  std::string note;
};

// A reference is either a document path or a catalog id with optional [name=value, ...].
Resolved resolve_ref(const std::string& ref, const Bindings& params, const Catalog* cat) {
  Resolved r;
  r.label = ref;
  if (std::filesystem::is_regular_file(ref)) {
    Document d = read_document_file(ref);
    if (d.kind != DocKind::Algebra) throw InputError(ref + ": expected an algebra document");
    r.a = to_gaussian(d.algebra, check_document_bindings(d, params));
    return r;
  }
  if (!cat) throw InputError("no such file: " + ref);
  size_t br = ref.find('[');
  std::string id = ref.substr(0, br);
  Bindings b = params;
  if (br != std::string::npos) {
    if (ref.back() != ']') throw InputError("bad reference " + ref);
    std::string inner = ref.substr(br + 1, ref.size() - br - 2);
    std::vector<std::string> items;
    std::stringstream ss(inner);
    for (std::string it; std::getline(ss, it, ',');) items.push_back(it);
    for (auto& [k, v] : parse_params(items)) b[k] = v;
  }
  const CatalogEntry& e = cat->lookup(id);
  Bindings own;
  for (auto& p : e.params)
    if (b.count(p.name)) own[p.name] = b.at(p.name);
  Bindings rb;
  try {
    rb = resolve_bindings(e, own);
  } catch (const ConstraintViolated& ex) {
    // parameter-range extensions as used by the remarks
    rb = resolve_bindings_with(e, {}, own);
    if (rb.size() != e.params.size()) throw;
    r.note = "outside the entry constraints (" + std::string(ex.what()) + ")";
  }
  r.a = instantiate(e, rb);
  r.label = id + bindings_str(rb);
  return r;
}

Catalog load_cat() { return load_catalog(default_catalog_dir()); }

std::string yesno(bool v) { return v ? "yes" : "no"; }

int cmd_check(const std::string& file, const Bindings& params) {
  Document d = read_document_file(file);
  Bindings b = check_document_bindings(d, params);
  std::ostringstream os;
  bool ok = true;
  switch (d.kind) {
    case DocKind::Algebra: {
      Algebra<Gaussian> a = to_gaussian(d.algebra, b);
      auto ls = check_left_symmetric(a);
      ok = ls.ok;
      os << "left_symmetric: " << (ls.ok ? "yes" : "no (" + ls.str() + ")") << "\n";
      if (a.n == 3) os << "lie: " << classify3(commutator_lie(a)).str() << "\n";
      if (ls.ok) {
        std::vector<std::string> flags{"left_symmetric"};
        if (is_associative(a)) flags.push_back("associative");
        if (is_transitive(a)) flags.push_back("transitive");
        if (is_novikov(a)) flags.push_back("novikov");
        if (is_bisymmetric(a)) flags.push_back("bisymmetric");
        if (!a.is_zero()) {
          if (is_simple(a)) flags.push_back("simple");
          if (is_semisimple(a).semisimple) flags.push_back("semisimple");
        }
        os << "flags: {";
        for (size_t k = 0; k < flags.size(); ++k) os << (k ? ", " : "") << flags[k];
        os << "}\n";
      }
      break;
    }
    case DocKind::Lie: {
      auto g = to_gaussian(d.lie, b);
      auto j = check_jacobi(g);
      ok = j.ok;
      os << "jacobi: " << (j.ok ? "yes" : "no (" + j.str() + ")") << "\n";
      if (ok && g.n == 3) os << "lie: " << classify3(g).str() << "\n";
      break;
    }
    case DocKind::Representation:
    case DocKind::Cocycle: {
      Representation<Gaussian> rep{to_gaussian(d.lie, b), {}};
      for (auto& f : d.F) rep.F.push_back(to_gaussian(f, b));
      auto rc = check_representation(rep);
      ok = rc.ok;
      os << "representation: " << (rc.ok ? "yes" : "no (" + rc.str() + ")") << "\n";
      if (ok && d.kind == DocKind::Cocycle) {
        Cocycle<Gaussian> c{rep, to_gaussian(*d.C, b)};
        auto cc = check_cocycle(c);
        bool bij = is_bijective(c);
        ok = cc.ok && bij;
        os << "cocycle: " << (cc.ok ? "yes" : "no (" + cc.str() + ")") << "\n";
        os << "bijective: " << yesno(bij) << "\n";
      }
      break;
    }
    case DocKind::RMatrix: {
      auto g = to_gaussian(d.lie, b);
      auto cy = check_cybe(g, to_gaussian(*d.R, b));
      ok = cy.ok;
      os << "cybe: " << (cy.ok ? "yes" : "no (" + cy.str() + ")") << "\n";
      if (ok) os << "left_symmetric product: " << yesno(check_left_symmetric(lsa_from_rmatrix(g, to_gaussian(*d.R, b))).ok) << "\n";
      break;
    }
    case DocKind::OOperator: {
      OOperatorInput<Gaussian> in{{to_gaussian(d.lie, b), {}}, to_gaussian(*d.T, b)};
      for (auto& f : d.F) in.rho.F.push_back(to_gaussian(f, b));
      auto oc = check_o_operator(in);
      ok = oc.ok;
      os << "o_operator: " << (oc.ok ? "yes" : "no (" + oc.str() + ")") << "\n";
      break;
    }
    case DocKind::IsoWitness:
      throw InputError("use 'lsa iso --verify' for iso_witness documents");
  }
  std::cout << os.str();
  return ok ? kOk : kFail;
}

int cmd_cocycle_build(const std::string& file, const Bindings& params) {
  Document d = read_document_file(file);
  if (d.kind != DocKind::Cocycle) throw InputError(file + ": expected a cocycle document");
  Bindings b = check_document_bindings(d, params);
  Representation<Gaussian> rep{to_gaussian(d.lie, b), {}};
  for (auto& f : d.F) rep.F.push_back(to_gaussian(f, b));
  Cocycle<Gaussian> c{rep, to_gaussian(*d.C, b)};
  Algebra<Gaussian> a;
  try {
    a = phi(c);
  } catch (const Error& e) {
    std::cout << "not a bijective cocycle: " << e.what() << "\n";
    return kFail;
  }
  Domain dom = d.domain == Domain::Rational ? Domain::Rational : Domain::Gaussian;
  bool rational = true;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) rational = rational && a.at(i, j, k).is_rational();
  if (!rational) dom = Domain::Gaussian;
  std::cout << emit_document(algebra_document(a.map([](const Gaussian& x) { return RatFunc(x); }), dom));
  return kOk;
}

int cmd_catalog_verify(const std::string& family, const std::string& entry, const Bindings& params, bool tables,
                       bool remarks) {
  Catalog cat = load_cat();
  bool ok = true;
  if (!family.empty()) {
    auto fams = family_names();
    if (std::find(fams.begin(), fams.end(), family) == fams.end()) throw InputError("unknown family " + family);
  }
  if (!entry.empty()) {
    const CatalogEntry& e = cat.lookup(entry);
    SamplePlan plan = SamplePlan::defaults();
    std::vector<Bindings> bs;
    if (!params.empty()) bs.push_back(resolve_bindings(e, params));
    else bs = samples(e, plan);
    for (auto& b : bs) {
      EntryReport r = verify_entry(cat, e, b);
      std::cout << r.str() << "\n";
      for (auto& n : r.errata_used) std::cout << "  note: " << n << " holds (erratum: absent from the published list)\n";
      ok = ok && r.ok();
    }
    return ok ? kOk : kFail;
  }
  VerifySummary s = verify_all(cat, family, params);
  std::cout << s.str();
  if (s.entries == 0 && s.skipped > 0) throw InputError("no entry admits the pinned parameter values");
  ok = s.failures == 0 && s.entries_ok == s.entries;
  if (tables) {
    PropertyTableReport p = verify_property_tables(cat);
    std::cout << p.str();
    ok = ok && p.ok();
  }
  if (remarks) {
    RemarkReport r = verify_remark_isos(cat);
    std::cout << r.str();
    ok = ok && r.refuted == 0;
  }
  return ok ? kOk : kFail;
}

int cmd_iso_verify(const std::string& file, const Bindings& params) {
  Document d = read_document_file(file);
  if (d.kind != DocKind::IsoWitness) throw InputError(file + ": expected an iso_witness document");
  Catalog cat = load_cat();
  Resolved a = resolve_ref(d.from, params, &cat), b = resolve_ref(d.to, params, &cat);
  Bindings db = check_document_bindings(d, params);
  Matrix<Gaussian> T = to_gaussian(*d.T, db);
  bool ok = false;
  try {
    ok = verify_lsa_iso(a.a, b.a, T);
  } catch (const SingularWitness&) {
    std::cout << "witness is singular\n";
  }
  std::cout << a.label << " -> " << b.label << ": " << (ok ? "isomorphism verified" : "not an isomorphism") << "\n";
  return ok ? kOk : kFail;
}

int cmd_iso_search(const std::string& ra, const std::string& rb, const Bindings& params, bool strict) {
  Catalog cat = load_cat();
  Resolved a = resolve_ref(ra, params, &cat), b = resolve_ref(rb, params, &cat);
  for (auto* r : {&a, &b})
    if (!r->note.empty()) std::cout << "note: " << r->label << " " << r->note << "\n";
  IsoVerdict v = search_lsa_iso(a.a, b.a);
  std::cout << a.label << " vs " << b.label << ": " << v.str() << "\n";
  return v.status == IsoStatus::Unknown && strict ? kFail : kOk;
}

int cmd_fingerprint(const std::string& ref, const Bindings& params) {
  Catalog cat;
  bool is_file = std::filesystem::is_regular_file(ref);
  if (!is_file) cat = load_cat();
  Resolved r = resolve_ref(ref, params, is_file ? nullptr : &cat);
  std::cout << r.label << "\n" << fingerprint(r.a).str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tools for left-symmetric algebras"};
  app.require_subcommand(1);
  std::vector<std::string> param_items;

  std::string file;
  auto* check = app.add_subcommand("check", "Check a document (left-symmetry, Lie class, flags)");
  check->add_option("file", file, "document")->required();
  check->add_option("--param", param_items, "parameter binding name=value");

  auto* build = app.add_subcommand("cocycle-build", "Emit the algebra obtained from a bijective cocycle");
  build->add_option("file", file, "cocycle document")->required();
  build->add_option("--param", param_items, "parameter binding name=value");

  std::string family, entry;
  bool all = false, tables = false, remarks = false;
  auto* cv = app.add_subcommand("catalog-verify", "Verify catalog entries");
  cv->add_option("--family", family, "H, N, D1, Dl or E");
  cv->add_option("--entry", entry, "single entry id");
  cv->add_option("--param", param_items, "pin a parameter name=value");
  cv->add_flag("--all", all, "every family, plus property tables and remark coincidences");
  cv->add_flag("--tables", tables, "compare property tables with the published lists");
  cv->add_flag("--remarks", remarks, "check remark coincidences");

  std::string verify_file;
  std::vector<std::string> search;
  bool strict = false;
  auto* iso = app.add_subcommand("iso", "Verify a witness or search for an isomorphism");
  auto* vopt = iso->add_option("--verify", verify_file, "iso_witness document");
  auto* sopt = iso->add_option("--search", search, "two references (file or catalog id[name=value,...])")->expected(2);
  vopt->excludes(sopt);
  iso->add_option("--param", param_items, "parameter binding name=value");
  iso->add_flag("--strict", strict, "exit 1 on an Unknown verdict");

  std::string ref;
  auto* fp = app.add_subcommand("fingerprint", "Print the isomorphism invariants of an algebra");
  fp->add_option("ref", ref, "document or catalog id")->required();
  fp->add_option("--param", param_items, "parameter binding name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    Bindings params = parse_params(param_items);
    if (*check) return cmd_check(file, params);
    if (*build) return cmd_cocycle_build(file, params);
    if (*cv) {
      if (all) {
        if (!family.empty() || !entry.empty()) throw InputError("--all excludes --family and --entry");
        tables = remarks = true;
      }
      return cmd_catalog_verify(family, entry, params, tables, remarks);
    }
    if (*iso) {
      if (!verify_file.empty()) return cmd_iso_verify(verify_file, params);
      if (search.size() == 2) return cmd_iso_search(search[0], search[1], params, strict);
      throw InputError("iso needs --verify FILE or --search A B");
    }
    if (*fp) return cmd_fingerprint(ref, params);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
