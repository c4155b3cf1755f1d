#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tschirn/qpoly/rational.hpp"

namespace tschirn::ledger {

using qpoly::Rat;
using RuleId = std::size_t;

// Dimensions never exceed this; a lower bound beyond it is a contradiction.
// Guarantees termination when upper bounds are unknown.
inline constexpr std::int64_t kDimensionCap = std::int64_t{1} << 20;

struct Interval {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;  // nullopt: unbounded

  static Interval point(std::int64_t v) { return {v, v}; }
  bool is_point() const { return hi && *hi == lo; }
  bool contains(std::int64_t v) const { return v >= lo && (!hi || v <= *hi); }
  bool within(const Interval& outer) const {
    return lo >= outer.lo && (!outer.hi || (hi && *hi <= *outer.hi));
  }
  std::string to_string() const;  // "4", "[0, 2]", "[1, inf)"

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ChernNumbers {
  int rank = 1;
  Rat c1_squared;
  Rat c1_dot_canonical;
  Rat c2;
  Rat chi_structure_sheaf;
};

// H^degree of a declared sheaf.
struct GroupRef {
  std::string sheaf;
  int degree = 0;
  std::string to_string() const;  // "h1(T_S)"
  friend bool operator==(const GroupRef&, const GroupRef&) = default;
};

struct AxiomRule {
  GroupRef group;
  Interval value;
};
// 0 -> sub -> middle -> quotient -> 0 with its 9-term cohomology sequence.
struct SesRule {
  std::string name, sub, middle, quotient;
};
// h^i(sheaf) = h^{2-i}(dual).
struct SerreRule {
  std::string sheaf, dual;
};
struct DirectSumRule {
  std::string total;
  std::vector<std::string> parts;
};
// The map out of `source` in the long exact sequence of `sequence` has rank `rank`.
struct MapRankRule {
  std::string sequence;
  GroupRef source;
  std::int64_t rank = 0;
};
struct ChiRule {
  std::string sheaf;
  Rat value;
};

using RuleBody = std::variant<AxiomRule, SesRule, SerreRule, DirectSumRule, MapRankRule, ChiRule>;

struct Rule {
  RuleBody body;
  std::string provenance;  // mandatory
  std::string origin;      // where the rule was stated, e.g. "file.ledger:12"
};

struct PropagationOptions {
  // Add the alternating-sum (chi additivity) equation of every short exact
  // sequence on top of the per-group rank equations.
  bool chi_additivity = true;
  // Close the equality system under exact Gaussian elimination first.
  bool linear_closure = true;
  // Visit constraints in a shuffled order (results must not depend on it).
  std::optional<std::uint64_t> shuffle_seed;
};

struct SheafState {
  std::string name;
  std::array<Interval, 3> h;
  std::optional<Rat> chi;
  std::array<std::vector<RuleId>, 3> support;  // rules behind each bound
};

struct SequenceState {
  std::string name;
  std::array<Interval, 8> map_ranks;  // rank of the map out of group 1..8
};

struct Conflict {
  std::string where;           // variable whose interval emptied
  std::vector<RuleId> rules;   // minimal: dropping any one restores consistency
};

struct LedgerReport {
  std::vector<SheafState> sheaves;
  std::vector<SequenceState> sequences;
  std::optional<Conflict> conflict;

  const SheafState& sheaf(std::string_view name) const;  // throws UndeclaredSymbol
  bool contradiction() const { return conflict.has_value(); }
};

class Ledger {
 public:
  // Declaring Chern data adds a chi fact computed by Riemann-Roch.
  void declare_sheaf(const std::string& name, std::optional<ChernNumbers> chern = std::nullopt,
                     const std::string& origin = {});
  bool has_sheaf(std::string_view name) const;
  const std::vector<std::string>& sheaves() const { return sheaves_; }

  // Validates symbols (UndeclaredSymbol), degrees and the provenance string
  // (ParseError when empty).
  RuleId add_rule(Rule rule);
  const std::vector<Rule>& rules() const { return rules_; }
  std::string describe(RuleId id) const;

  LedgerReport propagate(const PropagationOptions& options = {}) const;

 private:
  std::vector<std::string> sheaves_;
  std::vector<Rule> rules_;
};

struct Claim {
  GroupRef group;
  std::int64_t value = 0;
  std::string origin;
};

enum class ClaimStatus { Forced, NotForced, Contradicted };

std::string_view to_string(ClaimStatus s);

struct ClaimOutcome {
  Claim claim;
  ClaimStatus status = ClaimStatus::NotForced;
  Interval derived;
  // Forced: rules behind the derived value. Contradicted: a minimal set of
  // rules that together with the claim is inconsistent.
  std::vector<RuleId> trace;
};

struct ConsistencyReport {
  bool pass = false;
  LedgerReport report;
  std::vector<ClaimOutcome> claims;
  std::optional<std::size_t> first_failure;  // index into claims
};

// Propagates, then checks that each claimed value is exactly forced.
ConsistencyReport check_consistency(const Ledger& ledger, const std::vector<Claim>& claims,
                                    const PropagationOptions& options = {});

struct LedgerScript {
  Ledger ledger;
  std::vector<Claim> claims;
};

// Line format (comments start with '#', provenance is a double-quoted string):
//   sheaf NAME [rank=R c1sq=A c1K=B c2=C chiO=X] ["provenance"]
//   axiom NAME h<i> V|LO..HI|LO.. "provenance"
//   axiom NAME h V0 V1 V2 "provenance"
//   ses SEQ SUB MIDDLE QUOTIENT "provenance"
//   serre NAME DUAL "provenance"
//   sum TOTAL PART... "provenance"
//   maprank SEQ h<i>(NAME) RANK "provenance"
//   chi NAME VALUE "provenance"
//   claim NAME h<i> V   |   claim NAME h V0 V1 V2
// Throws ParseError (with line number) or UndeclaredSymbol.
LedgerScript parse_ledger_script(std::string_view text, std::string_view source = "<script>");
LedgerScript load_ledger_script(const std::filesystem::path& path);

}  // namespace tschirn::ledger
