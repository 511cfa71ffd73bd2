#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fano64/bundles.hpp"
#include "fano64/ledger.hpp"
#include "fano64/rational.hpp"
#include "fano64/surfaces.hpp"

namespace fano64::elim {

/// Which family of cases a record belongs to.
enum class CaseGroup {
  P1BundleOverSurface,   // W = P(E) over P2 / F_n, degree fixed
  QuadricBundleDegree,   // quadric bundle over P^1 with -K_W = 2G
  SurfaceBaseChern,      // twisted Chern data over P2 / F_n, chi in a window
};

enum class VerdictKind { ArithmeticContradiction, Survives, PaperArgument };

enum class Predicate { IsInteger, Equals, LessThan, LessEqual, GreaterThan, GreaterEqual };

struct NamedValue {
  std::string name;
  Rational value;
  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

/// A machine-checkable claim: `predicate(value(quantity), bound)` evaluates
/// to `holds`. A check with holds == false is a contradiction witness.
struct Check {
  std::string quantity;
  Predicate predicate = Predicate::Equals;
  Rational bound;
  bool holds = true;
  friend bool operator==(const Check&, const Check&) = default;
};

struct CaseRecord {
  CaseGroup group = CaseGroup::P1BundleOverSurface;
  std::string label;  // unique within its group for a given set of inputs
  std::string base;   // "P2", "F0", ...; empty when not over a surface
  std::string c1;     // representative class, when relevant
  std::vector<NamedValue> inputs;
  std::vector<NamedValue> values;
  std::vector<Check> checks;
  VerdictKind verdict = VerdictKind::PaperArgument;
  std::string detail;    // reason, construction name, or the excluded step
  std::string citation;  // the argument the verdict rests on

  const Rational* value(const std::string& name) const;
  const Rational* input(const std::string& name) const;
  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

std::string to_string(CaseGroup g);
std::string to_string(VerdictKind v);
std::string to_string(Predicate p);
/// Inverses of to_string. Throw UsageError on unknown names.
CaseGroup case_group_from_string(const std::string& s);
VerdictKind verdict_from_string(const std::string& s);
Predicate predicate_from_string(const std::string& s);

bool evaluate(Predicate p, const Rational& value, const Rational& bound);

/// One row of the parity table: the c1 representative assumed in each
/// parity class of a base surface.
struct ParityCase {
  enum class Strategy { SolveC2, TautologicalPlane, Cone, SectionArgument, Cited };

  std::string label;
  BaseSurface base;
  std::optional<SurfaceClass> representative;
  Strategy strategy;
  std::string construction;  // for Cone cases
  std::string citation;
};

/// The parity/representative table for P^1-bundles of the given degree.
const std::vector<ParityCase>& p1_bundle_parity_table();

/// One record per table row. Throws UsageError for odd target degree.
std::vector<CaseRecord> eliminate_p1_bundles(const Integer& target_degree = 64);

/// Degrees d with dim|-K_W| = d/2 + 2 >= min_dim up to the degree bound 72,
/// each with its K_G^2 integrality verdict.
std::vector<CaseRecord> run_section7_filter(const Integer& min_dim = 34);

/// Chern data of E over `base` (P2, F0, F2, F3 or F4) for every chi in
/// `chi_values` and every c1 within the nefness/domination bounds, twisted to
/// the normalized window. Throws UsageError for other bases.
std::vector<CaseRecord> run_section8_elimination(const std::set<Integer>& chi_values, const BaseSurface& base);

/// chi window {32, ..., 36} = dim|H_W| + 1 for dim|H_W| in {31, ..., 35}.
std::set<Integer> default_chi_window();

/// Bases handled by run_section8_elimination, in report order.
std::vector<BaseSurface> surface_bases();

/// Recomputes a record from its group, label and inputs.
/// Throws UsageError when the record cannot be matched to a known case.
CaseRecord recompute_record(const CaseRecord& record);

struct Verification {
  bool ok = true;
  std::string message;
};

/// Recomputes the record, compares every stored value, re-evaluates every
/// check, and confirms the verdict is consistent with the checks.
Verification verify_record(const CaseRecord& record);

struct ClassificationItem {
  int number = 0;
  std::string description;
  Integer degree;
  std::optional<ledger::LedgerChain> chain;  // absent for constructions of degree 64 directly
  std::vector<NamedValue> evidence;
};

/// The seven degree-64 constructions, each recomputed at call time.
std::vector<ClassificationItem> classification_summary();

struct Reproduction {
  std::vector<CaseRecord> records;
  std::vector<ClassificationItem> classification;
  std::vector<ledger::LedgerChain> chains;
  std::vector<std::string> mismatches;  // empty on success

  bool ok() const { return mismatches.empty(); }
};

/// Runs every case family and chain, verifying witnesses, the set of
/// surviving constructions, and that every projection chain lands on 64.
/// Case families are computed concurrently; output order is fixed.
Reproduction reproduce();

}  // namespace fano64::elim
