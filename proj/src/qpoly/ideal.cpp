#include "tschirn/qpoly/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "tschirn/error.hpp"
#include "tschirn/qpoly/elimination.hpp"

namespace tschirn::qpoly {

Ideal::Ideal(Ring ring, std::vector<MultiPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw ShapeError("ideal generators must share the ideal's ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const MultiPoly& g) { return g.is_homogeneous(); });
}

bool operator==(const Ideal& a, const Ideal& b) {
  return same_ring(a.ring_, b.ring_) && a.generators_ == b.generators_;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw ShapeError("variable context mismatch");
  std::vector<MultiPoly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series subtract_shifted(Series a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
  trim(a);
  return a;
}

Series multiply(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Exponents& h) { return divides(h, g); }))
      out.push_back(g);
  return out;
}

bool pairwise_coprime(const std::vector<Exponents>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t v = 0; v < gens[i].size(); ++v)
        if (gens[i][v] > 0 && gens[j][v] > 0) return false;
  return true;
}

// K(I) with HS(R/I) = K / (1 - T)^n, via K(I) = K(I') - T^deg(m) K(I' : m).
Series numerator_of(std::vector<Exponents> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (pairwise_coprime(gens)) {
    Series r{1};
    for (const auto& g : gens) {
      Series factor(total_degree(g) + 1, 0);
      factor[0] = 1;
      factor.back() -= 1;
      r = multiply(r, factor);
    }
    return r;
  }
  Exponents pivot = gens.back();
  gens.pop_back();
  std::vector<Exponents> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(quotient(g, qpoly::gcd(g, pivot)));
  return subtract_shifted(numerator_of(gens), numerator_of(std::move(colon)), total_degree(pivot));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<std::int64_t> HilbertSeries::expand(int max_degree) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree + 1), 0);
  for (int d = 0; d <= max_degree; ++d)
    for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= d; ++k) {
      std::int64_t ways = ambient_vars == 0 ? (static_cast<int>(k) == d ? 1 : 0)
                                            : binomial(d - static_cast<int>(k) + ambient_vars - 1,
                                                       ambient_vars - 1);
      out[d] += numerator[k] * ways;
    }
  return out;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    std::int64_t c = numerator[k];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "T";
    if (k >= 2) out << "^" << k;
  }
  if (first) out << "0";
  out << ")/(1 - T)";
  if (ambient_vars != 1) out << "^" << ambient_vars;
  return out.str();
}

HilbertSeries hilbert_series_of_monomials(const std::vector<Exponents>& generators, std::size_t nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw ShapeError("monomial exponent length mismatch");
  HilbertSeries hs;
  hs.numerator = numerator_of(generators);
  hs.ambient_vars = static_cast<int>(nvars);
  // Cancel (1 - T) factors while the numerator vanishes at T = 1.
  while (hs.ambient_vars > 0 && !hs.numerator.empty() &&
         std::accumulate(hs.numerator.begin(), hs.numerator.end(), std::int64_t{0}) == 0) {
    Series q(hs.numerator.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      carry += hs.numerator[k];
      q[k] = carry;
    }
    trim(q);
    hs.numerator = std::move(q);
    --hs.ambient_vars;
  }
  return hs;
}

HilbertSeries hilbert_series(const Ideal& ideal, std::size_t budget) {
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw HomogeneityError("non-homogeneous generator: " + g.to_string());
  Ideal gb = groebner(ideal, TermOrder::Grevlex, budget);
  return hilbert_series_of_monomials(initial_monomials(gb), ideal.ring()->size());
}

int krull_dimension(const HilbertSeries& series) {
  return series.numerator.empty() ? -1 : series.ambient_vars;
}

int krull_dimension(const Ideal& ideal, std::size_t budget) {
  return krull_dimension(hilbert_series(ideal, budget));
}

Ideal jacobian_ideal(const Ideal& ideal, std::size_t codim) {
  const auto& gens = ideal.generators();
  std::size_t nvars = ideal.ring()->size();
  if (codim < 1 || codim > nvars)
    throw ShapeError("jacobian_ideal: codim must lie in [1, number of variables]");
  if (codim > gens.size())
    throw ShapeError("jacobian_ideal: codim " + std::to_string(codim) + " exceeds the generator count " +
                     std::to_string(gens.size()));

  std::vector<std::vector<MultiPoly>> jac;
  for (const auto& g : gens) {
    std::vector<MultiPoly> row;
    for (std::size_t v = 0; v < nvars; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }

  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };

  std::vector<MultiPoly> out = gens;
  for (const auto& rows : subsets(gens.size(), codim))
    for (const auto& cols : subsets(nvars, codim)) {
      PolyMatrix m;
      for (std::size_t r : rows) {
        std::vector<MultiPoly> row;
        for (std::size_t c : cols) row.push_back(jac[r][c]);
        m.push_back(std::move(row));
      }
      out.push_back(determinant(m));
    }
  return Ideal(ideal.ring(), std::move(out));
}

}  // namespace tschirn::qpoly
