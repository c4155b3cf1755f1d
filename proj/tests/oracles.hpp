#pragma once

// Test-only reference computations. Nothing here calls into the Groebner or
// Hilbert-series code paths it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tschirn/qpoly/ideal.hpp"
#include "tschirn/qpoly/polynomial.hpp"

namespace oracle {

using tschirn::qpoly::Exponents;
using tschirn::qpoly::Ideal;
using tschirn::qpoly::MultiPoly;
using tschirn::qpoly::Rat;

inline std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == nvars) {
      cur[v] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[v] = k;
      rec(v + 1, left - k);
    }
  };
  if (nvars == 0) return degree == 0 ? std::vector<Exponents>{Exponents{}} : std::vector<Exponents>{};
  rec(0, degree);
  return out;
}

// Rank of a dense rational matrix by exact Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rat>> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// dim_Q (R/I)_d computed as #monomials(d) - rank(span{ m * g : deg m + deg g = d }).
inline std::int64_t hilbert_function(const Ideal& ideal, int degree) {
  std::size_t n = ideal.ring()->size();
  auto basis = monomials_of_degree(n, degree);
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : ideal.generators()) {
    int dg = g.total_degree();
    if (dg > degree) continue;
    for (const auto& m : monomials_of_degree(n, degree - dg)) {
      MultiPoly p = MultiPoly::monomial(ideal.ring(), m, 1) * g;
      std::vector<Rat> row(basis.size(), 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        auto it = p.terms().find(basis[k]);
        if (it != p.terms().end()) row[k] = it->second;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(basis.size()) - static_cast<std::int64_t>(rank(std::move(rows)));
}

// Univariate polynomials over Q as coefficient vectors (index = degree).
using UPoly = std::vector<Rat>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    trim(a);
  }
  return a;
}

inline UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

inline bool has_repeated_factor(const UPoly& p) { return gcd(p, derivative(p)).size() > 1; }

inline Rat random_rat(std::mt19937& rng, int bound, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 4);
  for (;;) {
    Rat r(num(rng), den(rng));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

// Random polynomial with small integer coefficients and per-variable degree caps.
inline MultiPoly random_poly(std::mt19937& rng, const tschirn::qpoly::Ring& ring,
                             const std::vector<int>& max_degree, int terms) {
  MultiPoly p(ring);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Exponents e(ring->size());
    for (std::size_t v = 0; v < e.size(); ++v) {
      std::uniform_int_distribution<int> d(0, max_degree[v]);
      e[v] = d(rng);
    }
    p.add_term(e, coeff(rng));
  }
  return p;
}

}  // namespace oracle
