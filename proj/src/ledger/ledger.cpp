#include "tschirn/ledger/ledger.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tschirn/chern/chern.hpp"
#include "tschirn/error.hpp"

namespace tschirn::ledger {

using qpoly::Int;

std::string Interval::to_string() const {
  if (is_point()) return std::to_string(lo);
  return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) + "]" : std::string("inf)"));
}

std::string GroupRef::to_string() const { return "h" + std::to_string(degree) + "(" + sheaf + ")"; }

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Forced:
      return "forced";
    case ClaimStatus::NotForced:
      return "not forced";
    case ClaimStatus::Contradicted:
      return "contradicted";
  }
  return "?";
}

const SheafState& LedgerReport::sheaf(std::string_view name) const {
  for (const auto& s : sheaves)
    if (s.name == name) return s;
  throw UndeclaredSymbol("no sheaf named '" + std::string(name) + "' in the report");
}

namespace {

using Reasons = std::vector<RuleId>;  // sorted, unique

Reasons merge(const Reasons& a, const Reasons& b) {
  Reasons out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Variable {
  std::string name;
  Int lo = 0;
  std::optional<Int> hi;
  Reasons lo_why, hi_why;
};

Variable make_variable(std::string name) {
  Variable v;
  v.name = std::move(name);
  return v;
}

struct Constraint {
  std::vector<std::pair<std::size_t, Rat>> terms;
  Rat rhs;
  Reasons why;
};

Int ceil_of(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int floor_of(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t to_i64(const Int& z) { return z.get_si(); }

struct RawConflict {
  std::string where;
  Reasons why;
};

// One propagation run over a subset of the rules.
class Propagator {
 public:
  Propagator(const Ledger& ledger, const std::vector<bool>& active, const PropagationOptions& options)
      : ledger_(ledger), active_(active), options_(options) {
    const auto& names = ledger.sheaves();
    for (std::size_t k = 0; k < names.size(); ++k) {
      sheaf_index_[names[k]] = k;
      for (int i = 0; i < 3; ++i) vars_.push_back(make_variable(GroupRef{names[k], i}.to_string()));
    }
    for (RuleId id = 0; id < ledger.rules().size(); ++id)
      if (const auto* ses = std::get_if<SesRule>(&ledger.rules()[id].body)) {
        ses_base_[ses->name] = vars_.size();
        ses_rule_[ses->name] = id;
        for (int j = 1; j <= 8; ++j) vars_.push_back(make_variable("rank" + std::to_string(j) + "(" + ses->name + ")"));
      }
  }

  void run() {
    for (RuleId id = 0; id < ledger_.rules().size() && !conflict_; ++id)
      if (active_[id]) encode(id, ledger_.rules()[id]);
    if (conflict_) return;
    if (options_.linear_closure) close_linearly();
    if (conflict_) return;

    std::vector<std::size_t> order(constraints_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (options_.shuffle_seed) {
      std::mt19937_64 rng(*options_.shuffle_seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    bool changed = true;
    while (changed && !conflict_) {
      changed = false;
      for (std::size_t idx : order) {
        changed |= narrow(constraints_[idx]);
        if (conflict_) return;
      }
    }
  }

  const std::optional<RawConflict>& conflict() const { return conflict_; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t sheaf_var(const std::string& sheaf, int degree) const {
    return sheaf_index_.at(sheaf) * 3 + static_cast<std::size_t>(degree);
  }
  const std::map<std::string, std::size_t>& sequences() const { return ses_base_; }

 private:
  void encode(RuleId id, const Rule& rule) {
    Reasons why{id};
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, AxiomRule>) {
            std::size_t v = sheaf_var(r.group.sheaf, r.group.degree);
            tighten_lo(v, Int(r.value.lo), why);
            if (r.value.hi) tighten_hi(v, Int(*r.value.hi), why);
          } else if constexpr (std::is_same_v<T, ChiRule>) {
            if (!qpoly::is_integer(r.value)) {
              conflict_ = RawConflict{"chi(" + r.sheaf + ") = " + qpoly::to_string(r.value) + " is not an integer", why};
              return;
            }
            add({{sheaf_var(r.sheaf, 0), 1}, {sheaf_var(r.sheaf, 1), -1}, {sheaf_var(r.sheaf, 2), 1}}, r.value, why);
          } else if constexpr (std::is_same_v<T, SerreRule>) {
            for (int i = 0; i < 3; ++i) add({{sheaf_var(r.sheaf, i), 1}, {sheaf_var(r.dual, 2 - i), -1}}, 0, why);
          } else if constexpr (std::is_same_v<T, DirectSumRule>) {
            for (int i = 0; i < 3; ++i) {
              std::vector<std::pair<std::size_t, Rat>> terms{{sheaf_var(r.total, i), 1}};
              for (const auto& p : r.parts) terms.push_back({sheaf_var(p, i), -1});
              add(std::move(terms), 0, why);
            }
          } else if constexpr (std::is_same_v<T, SesRule>) {
            std::size_t base = ses_base_.at(r.name);
            std::array<std::size_t, 9> groups{};
            const std::array<const std::string*, 3> members{&r.sub, &r.middle, &r.quotient};
            for (int i = 0; i < 3; ++i)
              for (int k = 0; k < 3; ++k) groups[3 * i + k] = sheaf_var(*members[k], i);
            // dim V_j = rank(V_{j-1} -> V_j) + rank(V_j -> V_{j+1}).
            for (int j = 1; j <= 9; ++j) {
              std::vector<std::pair<std::size_t, Rat>> terms{{groups[j - 1], 1}};
              if (j >= 2) terms.push_back({base + j - 2, -1});
              if (j <= 8) terms.push_back({base + j - 1, -1});
              add(std::move(terms), 0, why);
            }
            if (options_.chi_additivity) {
              std::vector<std::pair<std::size_t, Rat>> terms;
              for (int j = 0; j < 9; ++j) terms.push_back({groups[j], j % 2 == 0 ? 1 : -1});
              add(std::move(terms), 0, why);
            }
          } else if constexpr (std::is_same_v<T, MapRankRule>) {
            std::size_t v = ses_base_.at(r.sequence) + static_cast<std::size_t>(source_position(r) - 1);
            tighten_lo(v, Int(r.rank), why);
            tighten_hi(v, Int(r.rank), why);
          }
        },
        rule.body);
  }

  int source_position(const MapRankRule& r) const {
    const auto& ses = std::get<SesRule>(ledger_.rules()[ses_rule_.at(r.sequence)].body);
    const std::array<const std::string*, 3> members{&ses.sub, &ses.middle, &ses.quotient};
    for (int k = 0; k < 3; ++k)
      if (*members[k] == r.source.sheaf) return 3 * r.source.degree + k + 1;
    return 0;  // rejected by Ledger::add_rule
  }

  void add(std::vector<std::pair<std::size_t, Rat>> terms, const Rat& rhs, const Reasons& why) {
    // Merge repeated variables (e.g. a sheaf appearing twice in one rule).
    std::map<std::size_t, Rat> merged;
    for (auto& [v, c] : terms) merged[v] += c;
    Constraint c{{}, rhs, why};
    for (auto& [v, coef] : merged)
      if (coef != 0) c.terms.push_back({v, coef});
    if (c.terms.empty()) {
      if (rhs != 0) conflict_ = RawConflict{"0 = " + qpoly::to_string(rhs), why};
      return;
    }
    constraints_.push_back(std::move(c));
  }

  // Reduced row echelon form of the equality system, tracking which rules
  // each row combines. An inconsistent row is a conflict; the remaining rows
  // become extra constraints.
  void close_linearly() {
    std::vector<Constraint> rows = constraints_;
    std::vector<std::map<std::size_t, Rat>> dense;
    for (const auto& c : rows) {
      std::map<std::size_t, Rat> m;
      for (const auto& [v, coef] : c.terms) m[v] = coef;
      dense.push_back(std::move(m));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < vars_.size() && rank < rows.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && !dense[pivot].count(col)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(dense[rank], dense[pivot]);
      std::swap(rows[rank], rows[pivot]);
      Rat inv = 1 / dense[rank][col];
      for (auto& [v, coef] : dense[rank]) coef *= inv;
      rows[rank].rhs *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank) continue;
        auto it = dense[i].find(col);
        if (it == dense[i].end()) continue;
        Rat f = it->second;
        for (const auto& [v, coef] : dense[rank]) {
          Rat& target = dense[i][v];
          target -= f * coef;
          if (target == 0) dense[i].erase(v);
        }
        rows[i].rhs -= f * rows[rank].rhs;
        rows[i].why = merge(rows[i].why, rows[rank].why);
      }
      ++rank;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (dense[i].empty()) {
        if (rows[i].rhs != 0) {
          conflict_ = RawConflict{"linear combination gives 0 = " + qpoly::to_string(rows[i].rhs), rows[i].why};
          return;
        }
        continue;
      }
      Constraint c{{}, rows[i].rhs, rows[i].why};
      for (const auto& [v, coef] : dense[i]) c.terms.push_back({v, coef});
      constraints_.push_back(std::move(c));
    }
  }

  bool narrow(const Constraint& c) {
    bool changed = false;
    for (std::size_t j = 0; j < c.terms.size(); ++j) {
      // c_j v_j = rhs - rest, rest ranges over [rest_min, rest_max].
      Rat rest_min = 0, rest_max = 0;
      bool min_finite = true, max_finite = true;
      Reasons min_why, max_why;
      for (std::size_t i = 0; i < c.terms.size(); ++i) {
        if (i == j) continue;
        const auto& [v, coef] = c.terms[i];
        const Variable& x = vars_[v];
        if (coef > 0) {
          rest_min += coef * Rat(x.lo);
          min_why = merge(min_why, x.lo_why);
          if (x.hi) {
            rest_max += coef * Rat(*x.hi);
            max_why = merge(max_why, x.hi_why);
          } else {
            max_finite = false;
          }
        } else {
          rest_max += coef * Rat(x.lo);
          max_why = merge(max_why, x.lo_why);
          if (x.hi) {
            rest_min += coef * Rat(*x.hi);
            min_why = merge(min_why, x.hi_why);
          } else {
            min_finite = false;
          }
        }
      }
      const auto& [v, coef] = c.terms[j];
      bool positive = coef > 0;
      // Lower bound uses rest_max when coef > 0 and rest_min otherwise.
      bool lo_finite = positive ? max_finite : min_finite;
      bool hi_finite = positive ? min_finite : max_finite;
      if (lo_finite) {
        const Rat& rest = positive ? rest_max : rest_min;
        const Reasons& used = positive ? max_why : min_why;
        changed |= tighten_lo(v, ceil_of((c.rhs - rest) / coef), merge(c.why, used));
        if (conflict_) return changed;
      }
      if (hi_finite) {
        const Rat& rest = positive ? rest_min : rest_max;
        const Reasons& used = positive ? min_why : max_why;
        changed |= tighten_hi(v, floor_of((c.rhs - rest) / coef), merge(c.why, used));
        if (conflict_) return changed;
      }
    }
    return changed;
  }

  bool tighten_lo(std::size_t v, const Int& value, const Reasons& why) {
    Variable& x = vars_[v];
    if (value <= x.lo) return false;
    x.lo = value;
    x.lo_why = why;
    check(v);
    return true;
  }

  bool tighten_hi(std::size_t v, const Int& value, const Reasons& why) {
    Variable& x = vars_[v];
    if (x.hi && value >= *x.hi) return false;
    x.hi = value;
    x.hi_why = why;
    check(v);
    return true;
  }

  void check(std::size_t v) {
    const Variable& x = vars_[v];
    if (x.hi && x.lo > *x.hi)
      conflict_ = RawConflict{x.name + " has empty range [" + x.lo.get_str() + ", " + x.hi->get_str() + "]",
                              merge(x.lo_why, x.hi_why)};
    else if (x.hi && *x.hi < 0)
      conflict_ = RawConflict{x.name + " bounded above by " + x.hi->get_str() + " < 0", x.hi_why};
    else if (x.lo > kDimensionCap)
      conflict_ = RawConflict{x.name + " exceeds the dimension cap", x.lo_why};
  }

  const Ledger& ledger_;
  const std::vector<bool>& active_;
  PropagationOptions options_;
  std::map<std::string, std::size_t> sheaf_index_;
  std::map<std::string, std::size_t> ses_base_;
  std::map<std::string, RuleId> ses_rule_;
  std::vector<Variable> vars_;
  std::vector<Constraint> constraints_;
  std::optional<RawConflict> conflict_;
};

Interval interval_of(const Variable& x) {
  Interval out;
  out.lo = to_i64(x.lo);
  if (x.hi && x.hi->fits_slong_p()) out.hi = to_i64(*x.hi);
  return out;
}

bool inconsistent(const Ledger& ledger, const std::vector<bool>& active, const PropagationOptions& options) {
  Propagator p(ledger, active, options);
  p.run();
  return p.conflict().has_value();
}

// Deletion filter: drops rules one at a time while the rest stays inconsistent.
Reasons minimize(const Ledger& ledger, Reasons candidate, const std::vector<bool>& all_active,
                 const PropagationOptions& options) {
  auto mask_of = [&](const Reasons& rs) {
    std::vector<bool> m(ledger.rules().size(), false);
    for (RuleId r : rs) m[r] = true;
    return m;
  };
  // A map-rank fact is meaningless without its sequence.
  auto usable = [&](const Reasons& rs) {
    for (RuleId r : rs)
      if (const auto* mr = std::get_if<MapRankRule>(&ledger.rules()[r].body)) {
        bool found = false;
        for (RuleId q : rs)
          if (const auto* ses = std::get_if<SesRule>(&ledger.rules()[q].body); ses && ses->name == mr->sequence)
            found = true;
        if (!found) return false;
      }
    return true;
  };
  if (!usable(candidate) || !inconsistent(ledger, mask_of(candidate), options)) {
    candidate.clear();
    for (RuleId r = 0; r < all_active.size(); ++r)
      if (all_active[r]) candidate.push_back(r);
  }
  for (std::size_t i = 0; i < candidate.size();) {
    Reasons without = candidate;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (usable(without) && inconsistent(ledger, mask_of(without), options))
      candidate = std::move(without);
    else
      ++i;
  }
  return candidate;
}

}  // namespace

void Ledger::declare_sheaf(const std::string& name, std::optional<ChernNumbers> chern, const std::string& origin) {
  if (name.empty() || name.find_first_of(" \t()\"#") != std::string::npos)
    throw ParseError("invalid sheaf name '" + name + "'");
  if (has_sheaf(name)) throw ParseError("sheaf '" + name + "' declared twice");
  sheaves_.push_back(name);
  if (chern) {
    Rat chi = chern::riemann_roch(chern->rank, chern->c1_squared, chern->c1_dot_canonical, chern->c2,
                                  chern->chi_structure_sheaf);
    add_rule(Rule{ChiRule{name, chi}, "Riemann-Roch on the declared Chern data", origin});
  }
}

bool Ledger::has_sheaf(std::string_view name) const {
  return std::find(sheaves_.begin(), sheaves_.end(), name) != sheaves_.end();
}

RuleId Ledger::add_rule(Rule rule) {
  if (rule.provenance.empty()) throw ParseError("rule without provenance" + (rule.origin.empty() ? "" : " at " + rule.origin));
  auto need = [&](const std::string& s) {
    if (!has_sheaf(s)) throw UndeclaredSymbol("undeclared sheaf '" + s + "'" + (rule.origin.empty() ? "" : " at " + rule.origin));
  };
  auto need_degree = [&](int d) {
    if (d < 0 || d > 2) throw ParseError("cohomological degree " + std::to_string(d) + " outside 0..2");
  };
  auto find_ses = [&](const std::string& name) -> const SesRule* {
    for (const auto& r : rules_)
      if (const auto* s = std::get_if<SesRule>(&r.body); s && s->name == name) return s;
    return nullptr;
  };
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, AxiomRule>) {
          need(r.group.sheaf);
          need_degree(r.group.degree);
          if (r.value.lo < 0) throw ParseError("negative dimension in axiom");
        } else if constexpr (std::is_same_v<T, ChiRule>) {
          need(r.sheaf);
        } else if constexpr (std::is_same_v<T, SerreRule>) {
          need(r.sheaf);
          need(r.dual);
        } else if constexpr (std::is_same_v<T, DirectSumRule>) {
          need(r.total);
          if (r.parts.empty()) throw ParseError("direct sum without summands");
          for (const auto& p : r.parts) need(p);
        } else if constexpr (std::is_same_v<T, SesRule>) {
          need(r.sub);
          need(r.middle);
          need(r.quotient);
          if (r.name.empty() || find_ses(r.name)) throw ParseError("sequence name '" + r.name + "' is empty or reused");
        } else if constexpr (std::is_same_v<T, MapRankRule>) {
          const SesRule* ses = find_ses(r.sequence);
          if (!ses) throw UndeclaredSymbol("undeclared sequence '" + r.sequence + "'");
          need(r.source.sheaf);
          need_degree(r.source.degree);
          int k = r.source.sheaf == ses->sub ? 0 : r.source.sheaf == ses->middle ? 1 : r.source.sheaf == ses->quotient ? 2 : -1;
          if (k < 0) throw UndeclaredSymbol(r.source.sheaf + " does not occur in sequence " + r.sequence);
          if (3 * r.source.degree + k == 8) throw ParseError("the last group of a long exact sequence maps to zero");
          if (r.rank < 0) throw ParseError("negative map rank");
        }
      },
      rule.body);
  rules_.push_back(std::move(rule));
  return rules_.size() - 1;
}

std::string Ledger::describe(RuleId id) const {
  const Rule& rule = rules_.at(id);
  std::string text = std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, AxiomRule>)
          return "axiom " + r.group.to_string() + " = " + r.value.to_string();
        else if constexpr (std::is_same_v<T, ChiRule>)
          return "chi(" + r.sheaf + ") = " + qpoly::to_string(r.value);
        else if constexpr (std::is_same_v<T, SerreRule>)
          return "Serre duality " + r.sheaf + " <-> " + r.dual;
        else if constexpr (std::is_same_v<T, DirectSumRule>) {
          std::string s = r.total + " = ";
          for (std::size_t i = 0; i < r.parts.size(); ++i) s += (i ? " + " : "") + r.parts[i];
          return "direct sum " + s;
        } else if constexpr (std::is_same_v<T, SesRule>)
          return "exact sequence " + r.name + ": 0 -> " + r.sub + " -> " + r.middle + " -> " + r.quotient + " -> 0";
        else
          return "rank of the map out of " + r.source.to_string() + " in " + r.sequence + " = " +
                 std::to_string(r.rank);
      },
      rule.body);
  text += " [" + rule.provenance + "]";
  if (!rule.origin.empty()) text += " (" + rule.origin + ")";
  return text;
}

LedgerReport Ledger::propagate(const PropagationOptions& options) const {
  std::vector<bool> active(rules_.size(), true);
  Propagator p(*this, active, options);
  p.run();

  LedgerReport report;
  for (const auto& name : sheaves_) {
    SheafState s;
    s.name = name;
    for (int i = 0; i < 3; ++i) {
      const Variable& x = p.variables()[p.sheaf_var(name, i)];
      s.h[i] = interval_of(x);
      s.support[i] = merge(x.lo_why, x.hi_why);
    }
    if (s.h[0].is_point() && s.h[1].is_point() && s.h[2].is_point())
      s.chi = Rat(s.h[0].lo - s.h[1].lo + s.h[2].lo);
    else
      for (const auto& r : rules_)
        if (const auto* c = std::get_if<ChiRule>(&r.body); c && c->sheaf == name) {
          s.chi = c->value;
          break;
        }
    report.sheaves.push_back(std::move(s));
  }
  for (const auto& r : rules_)
    if (const auto* ses = std::get_if<SesRule>(&r.body)) {
      SequenceState st;
      st.name = ses->name;
      std::size_t base = p.sequences().at(ses->name);
      for (int j = 0; j < 8; ++j) st.map_ranks[j] = interval_of(p.variables()[base + j]);
      report.sequences.push_back(std::move(st));
    }
  if (p.conflict())
    report.conflict = Conflict{p.conflict()->where, minimize(*this, p.conflict()->why, active, options)};
  return report;
}

ConsistencyReport check_consistency(const Ledger& ledger, const std::vector<Claim>& claims,
                                    const PropagationOptions& options) {
  ConsistencyReport out;
  out.report = ledger.propagate(options);
  out.pass = !out.report.contradiction();
  for (const auto& claim : claims) {
    ClaimOutcome oc;
    oc.claim = claim;
    const SheafState& s = out.report.sheaf(claim.group.sheaf);
    if (claim.group.degree < 0 || claim.group.degree > 2) throw ParseError("claim degree outside 0..2");
    oc.derived = s.h[claim.group.degree];
    if (out.report.contradiction()) {
      oc.status = ClaimStatus::Contradicted;
      oc.trace = out.report.conflict->rules;
    } else if (!oc.derived.contains(claim.value)) {
      oc.status = ClaimStatus::Contradicted;
      Ledger with_claim = ledger;
      RuleId cid = with_claim.add_rule(
          Rule{AxiomRule{claim.group, Interval::point(claim.value)}, "claim under test", claim.origin});
      LedgerReport r = with_claim.propagate(options);
      if (r.conflict)
        for (RuleId id : r.conflict->rules)
          if (id != cid) oc.trace.push_back(id);
    } else if (oc.derived.is_point()) {
      oc.status = ClaimStatus::Forced;
      oc.trace = s.support[claim.group.degree];
    } else {
      oc.status = ClaimStatus::NotForced;
    }
    if (oc.status != ClaimStatus::Forced) {
      out.pass = false;
      if (!out.first_failure) out.first_failure = out.claims.size();
    }
    out.claims.push_back(std::move(oc));
  }
  return out;
}

}  // namespace tschirn::ledger
