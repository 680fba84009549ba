#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsa/cocycle.hpp"
#include "lsa/document.hpp"
#include "lsa/iso.hpp"
#include "lsa/lie.hpp"

namespace lsa {

struct ParamSpec {
  std::string name;
  bool dl = false;                 // D_l parameter: canonical, l != 0, 1
  std::optional<Gaussian> fixed;   // "param l = 1/2"
  std::vector<Gaussian> excluded;
};

// "flag NAME [when p = v, ...]"; an empty condition means always.
struct FlagClaim {
  std::string name;
  Bindings when;
};

struct WitnessIso {
  std::string target;
  std::optional<Matrix<RatFunc>> T;  // rows = images of e_i; empty means search
};

struct CatalogEntry {
  std::string id;
  std::string family;  // H, N, D1, Dl, E
  std::vector<ParamSpec> params;
  std::string case_label;
  std::optional<std::vector<Matrix<RatFunc>>> F;
  std::optional<Matrix<RatFunc>> C;
  std::optional<Matrix<RatFunc>> reconstruct;  // phi output -> stored table
  Algebra<RatFunc> table{3};
  std::vector<FlagClaim> flags;
  std::vector<FlagClaim> errata;  // computed facts missing from the published lists
  std::vector<FlagClaim> target_flags;  // primed entries: claims of the canonical target
  std::string primed;             // canonical target for primed displays
  std::vector<WitnessIso> isos;
  std::string file;
  int line = 0;

  bool canonical() const { return primed.empty(); }
  std::vector<std::string> free_params() const;
};

struct RemarkLink {
  std::string id;
  Bindings overrides;
};

struct Remark {
  std::vector<RemarkLink> chain;
  std::string text;
  int line = 0;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<Remark> remarks;
  const CatalogEntry& lookup(const std::string& id) const;  // UnknownId
  std::vector<const CatalogEntry*> family(const std::string& fam) const;
};

extern const char* const kCatalogEnvVar;
std::string default_catalog_dir();
Catalog load_catalog(const std::string& dir = default_catalog_dir());
// Appends one .cat (or remarks) text to the catalog; used by the loader and by fixtures.
void parse_catalog_text(Catalog& cat, const std::string& text, const std::string& file);

LieTag family_tag(const std::string& family);
std::vector<std::string> family_names();

// Throws ConstraintViolated when v is not an admissible value of p.
void check_param_value(const CatalogEntry& e, const ParamSpec& p, const Gaussian& v);
// Fully constrained binding set; throws ConstraintViolated.
Bindings resolve_bindings(const CatalogEntry& e, const Bindings& b);
// Like resolve_bindings, but the override names skip all constraint checks.
Bindings resolve_bindings_with(const CatalogEntry& e, const Bindings& b, const Bindings& overrides);
Algebra<Gaussian> instantiate(const CatalogEntry& e, const Bindings& resolved);
Algebra<Gaussian> instantiate(const Catalog& cat, const std::string& id, const Bindings& b);
LieAlgebra<Gaussian> entry_lie(const CatalogEntry& e, const Bindings& resolved);
std::optional<Cocycle<Gaussian>> entry_cocycle(const CatalogEntry& e, const Bindings& resolved);
Matrix<Gaussian> instantiate_matrix(const Matrix<RatFunc>& m, const Bindings& b);

// Sample plan: default values per parameter name plus flag-condition values.
struct SamplePlan {
  std::map<std::string, std::vector<Gaussian>> values;
  bool include_flag_values = true;
  static SamplePlan defaults();
};
std::vector<Bindings> samples(const CatalogEntry& e, const SamplePlan& plan = SamplePlan::defaults());
std::string bindings_str(const Bindings& b);

struct FlagSet {
  bool associative = false, transitive = false, novikov = false, bisymmetric = false, simple = false,
       semisimple = false;
  static const std::vector<std::string>& names();
  bool get(const std::string& name) const;
  void set(const std::string& name, bool v);
  std::string str() const;
  bool operator==(const FlagSet&) const = default;
};
FlagSet computed_flags(const Algebra<Gaussian>& a);
// Published expectation at a sample; primed entries inherit their target's claims.
FlagSet expected_flags(const Catalog& cat, const CatalogEntry& e, const Bindings& b, bool with_errata);

struct EntryReport {
  std::string id;
  Bindings bindings;
  bool left_symmetric = false, lie_class_ok = false, reconstruction_ok = false, flags_ok = false,
       witness_isos_ok = false;
  bool has_cocycle = false;
  FlagSet expected, computed;
  std::vector<std::string> errata_used;
  std::vector<std::string> problems;
  bool ok() const {
    return left_symmetric && lie_class_ok && reconstruction_ok && flags_ok && witness_isos_ok;
  }
  std::string str() const;
};
EntryReport verify_entry(const Catalog& cat, const CatalogEntry& e, const Bindings& b);
EntryReport verify_entry(const Catalog& cat, const std::string& id, const Bindings& b);

struct VerifySummary {
  int entries = 0, entries_ok = 0, samples = 0, failures = 0, skipped = 0;
  std::vector<EntryReport> failed;
  std::vector<std::string> notes;  // errata hits and similar
  std::string str() const;
};
// Empty family means every family; pinned bindings replace sampling for those names.
VerifySummary verify_all(const Catalog& cat, const std::string& family = "", const Bindings& pinned = {},
                         const SamplePlan& plan = SamplePlan::defaults());

struct PropertyTableReport {
  int checked = 0;
  std::vector<std::string> discrepancies;
  // family -> property -> members ("N-18" at every sample, "N-18[lambda=-1]" otherwise)
  std::map<std::string, std::map<std::string, std::vector<std::string>>> sets;
  bool ok() const { return discrepancies.empty(); }
  std::string str() const;
};
// Compares against the published lists only (errata lines are not consulted).
PropertyTableReport verify_property_tables(const Catalog& cat, const SamplePlan& plan = SamplePlan::defaults());

struct RemarkCheck {
  std::string a, b;
  Bindings ba, bb;
  IsoVerdict verdict;
};
struct RemarkReport {
  std::vector<RemarkCheck> checks;
  int confirmed = 0, unconfirmed = 0, refuted = 0;
  bool all_confirmed() const { return unconfirmed == 0 && refuted == 0; }
  std::string str() const;
};
RemarkReport verify_remark_isos(const Catalog& cat, const SamplePlan& plan = SamplePlan::defaults());

}  // namespace lsa
