#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <utility>

#include "tschirn/error.hpp"
#include "tschirn/qpoly/ideal.hpp"

namespace tschirn::qpoly {

namespace {

// Working representation for Buchberger: terms sorted ascending in the
// active order, so the leading term is back().
struct Term {
  Exponents e;
  Rat c;
};
using Terms = std::vector<Term>;

class OrderedArithmetic {
 public:
  explicit OrderedArithmetic(TermOrder order) : order_(order) {}

  bool less(const Exponents& a, const Exponents& b) const { return term_greater(order_, b, a); }

  Terms from(const MultiPoly& p) const {
    Terms t;
    t.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) t.push_back({e, c});
    std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) { return less(a.e, b.e); });
    return t;
  }

  MultiPoly to_poly(const Ring& ring, const Terms& t) const {
    MultiPoly p(ring);
    for (const auto& term : t) p.add_term(term.e, term.c);
    return p;
  }

  // p - scale * x^shift * g
  Terms sub_mul(const Terms& p, const Rat& scale, const Exponents& shift, const Terms& g) const {
    Terms out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    Exponents shifted(shift.size());
    auto shifted_at = [&](std::size_t k) -> const Exponents& {
      for (std::size_t v = 0; v < shift.size(); ++v) shifted[v] = g[k].e[v] + shift[v];
      return shifted;
    };
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      const Exponents& ge = shifted_at(j);
      if (i == p.size() || less(ge, p[i].e)) {
        out.push_back({ge, -scale * g[j].c});
        ++j;
      } else if (less(p[i].e, ge)) {
        out.push_back(p[i++]);
      } else {
        Rat c = p[i].c - scale * g[j].c;
        if (c != 0) out.push_back({p[i].e, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void make_monic(Terms& t) const {
    if (t.empty()) return;
    Rat inv = 1 / t.back().c;
    for (auto& term : t) term.c *= inv;
  }

  // Full reduction of f by basis; counts steps against the budget.
  Terms reduce(Terms f, const std::vector<const Terms*>& basis, std::size_t& steps,
               std::size_t budget) const {
    Terms remainder;  // collected in descending order
    while (!f.empty()) {
      const Term lead = f.back();
      const Terms* divisor = nullptr;
      for (const Terms* g : basis)
        if (divides(g->back().e, lead.e)) {
          divisor = g;
          break;
        }
      if (divisor == nullptr) {
        remainder.push_back(lead);
        f.pop_back();
        continue;
      }
      if (++steps > budget)
        throw BudgetExceeded("Groebner reduction budget of " + std::to_string(budget) + " steps exhausted");
      f = sub_mul(f, lead.c / divisor->back().c, quotient(lead.e, divisor->back().e), *divisor);
    }
    std::reverse(remainder.begin(), remainder.end());
    return remainder;
  }

  Terms spoly(const Terms& f, const Terms& g) const {
    Exponents l = lcm(f.back().e, g.back().e);
    Terms zero;
    Terms a = sub_mul(zero, Rat(-1) / f.back().c, quotient(l, f.back().e), f);
    return sub_mul(a, Rat(1) / g.back().c, quotient(l, g.back().e), g);
  }

 private:
  TermOrder order_;
};

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

std::size_t groebner_budget_from_env() {
  const char* raw = std::getenv("TSCHIRN_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultGroebnerBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultGroebnerBudget;
  return static_cast<std::size_t>(v);
}

Ideal groebner(const Ideal& ideal, TermOrder order, std::size_t budget, GroebnerStats* stats) {
  const Ring& ring = ideal.ring();
  OrderedArithmetic ar(order);
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;

  std::vector<Terms> basis;
  for (const auto& g : ideal.generators()) {
    if (g.is_constant()) return Ideal(ring, {MultiPoly(ring, Rat(1))});
    Terms t = ar.from(g);
    ar.make_monic(t);
    basis.push_back(std::move(t));
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const Pair& p) { return lcm(basis[p.first].back().e, basis[p.second].back().e); };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first, ties broken by pair indices.
    auto chosen = pending.begin();
    Exponents best = pair_lcm(*chosen);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponents l = pair_lcm(*it);
      if (ar.less(l, best)) {
        best = std::move(l);
        chosen = it;
      }
    }
    Pair p = *chosen;
    pending.erase(chosen);
    ++st.pairs_considered;

    const Exponents& li = basis[p.first].back().e;
    const Exponents& lj = basis[p.second].back().e;
    if (coprime(li, lj)) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.first || k == p.second) continue;
      chain = divides(basis[k].back().e, best) && !is_pending(p.first, k) && !is_pending(p.second, k);
    }
    if (chain) {
      ++st.pairs_skipped_chain;
      continue;
    }

    std::vector<const Terms*> view;
    for (const auto& g : basis) view.push_back(&g);
    Terms r = ar.reduce(ar.spoly(basis[p.first], basis[p.second]), view, st.reduction_steps, budget);
    if (r.empty()) continue;
    if (total_degree(r.back().e) == 0) return Ideal(ring, {MultiPoly(ring, Rat(1))});
    ar.make_monic(r);
    basis.push_back(std::move(r));
    std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
  }

  // Minimalise: drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Exponents& a = basis[j].back().e;
      const Exponents& b = basis[i].back().e;
      if (divides(a, b) && (a != b || j < i)) keep[i] = false;
    }
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Interreduce tails.
  std::vector<Terms> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Terms*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    Terms r = ar.reduce(minimal[i], others, st.reduction_steps, budget);
    ar.make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Terms& a, const Terms& b) { return ar.less(b.back().e, a.back().e); });

  std::vector<MultiPoly> out;
  for (const auto& t : reduced) out.push_back(ar.to_poly(ring, t));
  return Ideal(ring, std::move(out));
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, TermOrder order) {
  OrderedArithmetic ar(order);
  std::vector<Terms> owned;
  owned.reserve(basis.size());
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), f.ring())) throw ShapeError("variable context mismatch");
    if (!g.is_zero()) owned.push_back(ar.from(g));
  }
  std::vector<const Terms*> view;
  for (const auto& g : owned) view.push_back(&g);
  std::size_t steps = 0;
  return ar.to_poly(f.ring(), ar.reduce(ar.from(f), view, steps, static_cast<std::size_t>(-1)));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, TermOrder order) {
  OrderedArithmetic ar(order);
  return ar.to_poly(f.ring(), ar.spoly(ar.from(f), ar.from(g)));
}

bool contains(const Ideal& groebner_basis, const MultiPoly& f, TermOrder order) {
  return normal_form(f, groebner_basis.generators(), order).is_zero();
}

std::vector<Exponents> initial_monomials(const Ideal& groebner_basis, TermOrder order) {
  std::vector<Exponents> out;
  for (const auto& g : groebner_basis.generators()) out.push_back(g.leading_term(order).first);
  return out;
}

}  // namespace tschirn::qpoly
