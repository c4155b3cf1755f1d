#include "tschirn/qpoly/elimination.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "tschirn/error.hpp"

namespace tschirn::qpoly {

namespace {

class LaplaceDeterminant {
 public:
  explicit LaplaceDeterminant(const PolyMatrix& m) : m_(m), n_(m.size()) {}

  MultiPoly compute() {
    std::uint32_t all = n_ == 32 ? ~0u : ((1u << n_) - 1u);
    return minor(all);
  }

 private:
  // Determinant of rows [n - popcount(cols), n) restricted to `cols`.
  MultiPoly minor(std::uint32_t cols) {
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    std::size_t row = n_ - static_cast<std::size_t>(std::popcount(cols));
    MultiPoly sum(m_[0][0].ring());
    if (cols == 0) {
      sum = MultiPoly(m_[0][0].ring(), Rat(1));
    } else {
      int position = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!(cols & (1u << j))) continue;
        const MultiPoly& entry = m_[row][j];
        if (!entry.is_zero()) {
          MultiPoly term = entry * minor(cols & ~(1u << j));
          if (position % 2 == 0)
            sum += term;
          else
            sum -= term;
        }
        ++position;
      }
    }
    memo_.emplace(cols, sum);
    return sum;
  }

  const PolyMatrix& m_;
  std::size_t n_;
  std::unordered_map<std::uint32_t, MultiPoly> memo_;
};

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  if (m.empty()) throw ShapeError("determinant of an empty matrix");
  if (m.size() > 24) throw ShapeError("determinant: matrix too large for Laplace expansion");
  for (const auto& row : m)
    if (row.size() != m.size()) throw ShapeError("determinant of a non-square matrix");
  return LaplaceDeterminant(m).compute();
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  if (!same_ring(f.ring(), g.ring())) throw ShapeError("variable context mismatch");
  const Ring& ring = f.ring();
  std::size_t v = ring->require(var);
  if (f.is_zero() || g.is_zero()) {
    if (f.degree_in(v) <= 0 && g.degree_in(v) <= 0)
      throw DegenerateInput("resultant: both inputs constant in " + std::string(var));
    return MultiPoly(ring);
  }
  int m = f.degree_in(v), n = g.degree_in(v);
  if (m == 0 && n == 0)
    throw DegenerateInput("resultant: both inputs constant in " + std::string(var));

  std::size_t size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, std::vector<MultiPoly>(size, MultiPoly(ring)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = f.coefficient_in(v, m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = g.coefficient_in(v, n - k);
  return determinant(s);
}

MultiPoly discriminant(const MultiPoly& f, std::string_view var) {
  std::size_t v = f.ring()->require(var);
  int n = f.degree_in(v);
  if (n != 2 && n != 3)
    throw UnsupportedDegree("discriminant supports degree 2 or 3 in " + std::string(var) + ", got " +
                            std::to_string(n));
  MultiPoly res = resultant(f, f.derivative(v), var);
  auto q = divide_exact(res, f.coefficient_in(v, n));
  if (!q) throw DegenerateInput("discriminant: leading coefficient does not divide the resultant");
  // (-1)^(n(n-1)/2): -1 for cubics, -1 for quadratics.
  return -*q;
}

std::variant<SquareRoot, NotASquare> poly_square_root(const MultiPoly& f) {
  const Ring& ring = f.ring();
  if (f.is_zero()) return SquareRoot{MultiPoly(ring), Rat(1)};
  Rat constant = f.leading_coefficient();
  MultiPoly target = f * Rat(1 / constant);

  Exponents lead = target.leading_term().first;
  Exponents half(lead.size());
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (lead[i] % 2 != 0) return NotASquare{};
    half[i] = lead[i] / 2;
  }
  MultiPoly root = MultiPoly::monomial(ring, half, 1);
  Exponents last = half;
  for (;;) {
    MultiPoly rest = target - root * root;
    if (rest.is_zero()) return SquareRoot{root, constant};
    auto [e, c] = rest.leading_term();
    if (!divides(half, e)) return NotASquare{};
    Exponents next = quotient(e, half);
    // Terms of the root appear in strictly decreasing order.
    if (!term_greater(TermOrder::Grevlex, last, next)) return NotASquare{};
    root += MultiPoly::monomial(ring, next, c / 2);
    last = next;
  }
}

}  // namespace tschirn::qpoly
