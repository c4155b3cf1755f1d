#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "tschirn/qpoly/polynomial.hpp"

namespace tschirn::qpoly {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Division-free determinant (Laplace expansion memoised over column subsets).
// Intended for the small matrices arising here; rows must be equal length.
MultiPoly determinant(const PolyMatrix& m);

// Sylvester resultant with respect to `var`. If exactly one input is
// constant in var the result is that constant raised to the other's degree.
// Throws DegenerateInput when both are constant in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var);

// Classical discriminant for degree 2 and 3 in `var`, normalised so that
// disc(z^3 + p z + q) = -4p^3 - 27q^2 and disc(a z^2 + b z + c) = b^2 - 4ac.
// Throws UnsupportedDegree otherwise.
MultiPoly discriminant(const MultiPoly& f, std::string_view var);

struct NotASquare {};

// f == constant * root^2 with root monic in grevlex.
struct SquareRoot {
  MultiPoly root;
  Rat constant;
};

std::variant<SquareRoot, NotASquare> poly_square_root(const MultiPoly& f);

}  // namespace tschirn::qpoly
