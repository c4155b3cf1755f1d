#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tschirn/qpoly/polynomial.hpp"

namespace tschirn::qpoly {

// Zero generators are dropped on construction, so an ideal with no
// generators is the zero ideal of its ring.
class Ideal {
 public:
  explicit Ideal(Ring ring, std::vector<MultiPoly> generators = {});

  const Ring& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_homogeneous() const;

  friend bool operator==(const Ideal&, const Ideal&);

 private:
  Ring ring_;
  std::vector<MultiPoly> generators_;
};

inline constexpr std::size_t kDefaultGroebnerBudget = 200000;

// Reduction-step budget: TSCHIRN_BUDGET if set and valid, else the default.
std::size_t groebner_budget_from_env();

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t reduction_steps = 0;
};

// Reduced Groebner basis (monic, sorted by descending leading term).
// Throws BudgetExceeded when more than `budget` reduction steps are needed.
Ideal groebner(const Ideal& ideal, TermOrder order = TermOrder::Grevlex,
               std::size_t budget = kDefaultGroebnerBudget, GroebnerStats* stats = nullptr);

// Fully reduced remainder of f modulo `basis` (any generating set).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      TermOrder order = TermOrder::Grevlex);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, TermOrder order = TermOrder::Grevlex);

// Membership test against a Groebner basis computed with the same order.
bool contains(const Ideal& groebner_basis, const MultiPoly& f, TermOrder order = TermOrder::Grevlex);

// Numerator / (1 - T)^ambient_vars. Stored with the pole order already
// cancelled, so numerator(1) != 0 unless the quotient ring is zero.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;  // coefficient of T^k at index k
  int ambient_vars = 0;

  // Coefficients of the power-series expansion for degrees 0..max_degree.
  std::vector<std::int64_t> expand(int max_degree) const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

// Hilbert series of a monomial ideal given by exponent vectors.
HilbertSeries hilbert_series_of_monomials(const std::vector<Exponents>& generators, std::size_t nvars);

// Hilbert series of R/I from the grevlex initial ideal. Throws HomogeneityError.
HilbertSeries hilbert_series(const Ideal& ideal, std::size_t budget = kDefaultGroebnerBudget);

// Pole order at T = 1 (affine cone dimension); -1 for the unit ideal.
int krull_dimension(const Ideal& ideal, std::size_t budget = kDefaultGroebnerBudget);
int krull_dimension(const HilbertSeries& series);

// I together with every codim x codim minor of the Jacobian of its
// generators. Throws ShapeError unless 1 <= codim <= min(#generators, #vars).
Ideal jacobian_ideal(const Ideal& ideal, std::size_t codim);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

// Leading monomials of a Groebner basis, in basis order.
std::vector<Exponents> initial_monomials(const Ideal& groebner_basis, TermOrder order = TermOrder::Grevlex);

}  // namespace tschirn::qpoly
