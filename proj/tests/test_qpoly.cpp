#include <doctest/doctest.h>

#include <random>
#include <variant>

#include "oracles.hpp"
#include "tschirn/error.hpp"
#include "tschirn/qpoly/elimination.hpp"
#include "tschirn/qpoly/ideal.hpp"
#include "tschirn/qpoly/polynomial.hpp"
#include "tschirn/qpoly/rational.hpp"

using namespace tschirn;
using namespace tschirn::qpoly;

namespace {

MultiPoly P(const Ring& r, const char* text) { return parse_poly(text, r); }

Ideal twisted_cubic_cone(const Ring& r) {
  return Ideal(r, {P(r, "x*z - y^2"), P(r, "x*w - y*z"), P(r, "y*w - z^2")});
}

void check_against_enumeration(const Ideal& ideal, int max_degree = 8) {
  HilbertSeries hs = hilbert_series(ideal);
  auto expanded = hs.expand(max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    CAPTURE(d);
    CHECK(expanded[d] == oracle::hilbert_function(ideal, d));
  }
}

}  // namespace

TEST_CASE("rationals are reduced with a positive denominator") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK(to_string(parse_rat(" 0/7 ")) == "0");
  Rat a = parse_rat("1/3"), b = parse_rat("1/6");
  CHECK(to_string(a + b) == "1/2");
  CHECK(parse_rat("123456789012345678901234567890/3") == Rat(Int("41152263004115226300411522630")));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK(as_long(parse_rat("-12")) == -12);
  CHECK_THROWS_AS(as_integer(parse_rat("1/2")), NonIntegral);
}

TEST_CASE("polynomial parsing and canonical printing") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(P(r, "4 + 3x^2y - 1/2 z").to_string() == "3*x^2*y - 1/2*z + 4");
  CHECK(P(r, "(x+y)^2 - x^2 - 2x*y").to_string() == "y^2");
  CHECK(P(r, "x - x").to_string() == "0");
  CHECK(P(r, "-(x - 1)").to_string() == "-x + 1");
  CHECK_THROWS_AS(P(r, "x + q"), ParseError);
  CHECK_THROWS_AS(P(r, "x + "), ParseError);
  CHECK_THROWS_AS(P(r, "x^-1"), ParseError);

  SUBCASE("round trip through the printer") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
      MultiPoly f = oracle::random_poly(rng, r, {3, 3, 3}, 6) * parse_rat("5/7");
      CHECK(P(r, f.to_string().c_str()) == f);
    }
  }
}

TEST_CASE("ring mismatches are shape errors") {
  auto r1 = make_ring({"x", "y"});
  auto r2 = make_ring({"x", "z"});
  CHECK_THROWS_AS(P(r1, "x") + P(r2, "x"), ShapeError);
  CHECK_THROWS_AS(Ideal(r1, {P(r2, "x")}), ShapeError);
  // Rings with identical variable lists are interchangeable.
  CHECK(P(r1, "x") + P(make_ring({"x", "y"}), "y") == P(r1, "x + y"));
  CHECK_THROWS_AS(make_ring({"x", "x"}), ParseError);
}

TEST_CASE("substitution, evaluation and exact division") {
  auto r = make_ring({"x", "y"});
  MultiPoly f = P(r, "x^2 - y^2");
  CHECK(f.substitute("x", P(r, "y + 1")) == P(r, "2y + 1"));
  std::vector<Rat> pt{3, 2};
  CHECK(f.evaluate(pt) == 5);
  auto q = divide_exact(f, P(r, "x - y"));
  REQUIRE(q.has_value());
  CHECK(*q == P(r, "x + y"));
  CHECK_FALSE(divide_exact(f, P(r, "x - 2y")).has_value());
  CHECK(P(r, "6x^2 + 4/3 y").content() == Rat(2, 3));
  CHECK(P(r, "-6x^2 + 4/3 y").primitive() == P(r, "9x^2 - 2y"));
}

TEST_CASE("resultant examples") {
  auto r = make_ring({"x", "a", "b", "u", "v"});
  CHECK(resultant(P(r, "x - a"), P(r, "x - b"), "x") == P(r, "a - b"));
  CHECK(resultant(P(r, "x^2 - u"), P(r, "x - v"), "x") == P(r, "v^2 - u"));
  CHECK(resultant(P(r, "x^2 - 1"), P(r, "x^2 - 1"), "x").is_zero());
  CHECK(resultant(P(r, "a"), P(r, "x^2 + 1"), "x") == P(r, "a^2"));
  CHECK_THROWS_AS(resultant(P(r, "a"), P(r, "b"), "x"), DegenerateInput);
}

TEST_CASE("resultant is multiplicative in its first argument") {
  auto r = make_ring({"x", "y"});
  std::mt19937 rng(20240601);
  int checked = 0;
  while (checked < 100) {
    MultiPoly f = oracle::random_poly(rng, r, {2, 1}, 3);
    MultiPoly g = oracle::random_poly(rng, r, {2, 1}, 3);
    MultiPoly h = oracle::random_poly(rng, r, {2, 1}, 3);
    if (f.degree_in("x") < 1 || g.degree_in("x") < 1 || h.degree_in("x") < 1) continue;
    CHECK(resultant(f * g, h, "x") == resultant(f, h, "x") * resultant(g, h, "x"));
    ++checked;
  }
}

TEST_CASE("discriminant examples") {
  auto r = make_ring({"z", "p", "q", "u"});
  CHECK(discriminant(P(r, "z^3 + p*z + q"), "z") == P(r, "-4p^3 - 27q^2"));
  CHECK(discriminant(P(r, "z^2 - u"), "z") == P(r, "4u"));
  CHECK(discriminant(P(r, "(z-1)^2*(z+2)"), "z").is_zero());
  CHECK(discriminant(P(r, "p*z^2 + q*z + u"), "z") == P(r, "q^2 - 4p*u"));
  CHECK_THROWS_AS(discriminant(P(r, "z^4 + 1"), "z"), UnsupportedDegree);
  CHECK_THROWS_AS(discriminant(P(r, "z + 1"), "z"), UnsupportedDegree);
}

TEST_CASE("discriminant vanishes exactly on cubics with a repeated factor") {
  auto r = make_ring({"z"});
  std::mt19937 rng(99);
  MultiPoly z = MultiPoly::variable(r, "z");
  int repeated = 0;
  for (int i = 0; i < 100; ++i) {
    Rat lead = oracle::random_rat(rng, 5, true);
    Rat a = oracle::random_rat(rng, 5), b = oracle::random_rat(rng, 5), c = oracle::random_rat(rng, 5);
    // Half the instances get a planted double root.
    if (i % 2 == 0) b = a;
    MultiPoly f = (z - MultiPoly(r, a)) * (z - MultiPoly(r, b)) * (z - MultiPoly(r, c)) * lead;
    oracle::UPoly coeffs(4, 0);
    for (const auto& [e, coef] : f.terms()) coeffs[e[0]] = coef;
    bool oracle_repeated = oracle::has_repeated_factor(coeffs);
    repeated += oracle_repeated ? 1 : 0;
    CHECK(discriminant(f, "z").is_zero() == oracle_repeated);
  }
  CHECK(repeated >= 50);
}

TEST_CASE("groebner examples") {
  auto r = make_ring({"x", "y", "z", "w"});
  Ideal single(r, {P(r, "x")});
  CHECK(groebner(single) == single);

  Ideal cone = twisted_cubic_cone(r);
  Ideal gb = groebner(cone);
  CHECK(contains(gb, P(r, "y^2 - x*z")));
  CHECK(contains(gb, P(r, "x*w - y*z")));
  CHECK_FALSE(contains(gb, P(r, "x*w + y*z")));
  CHECK_FALSE(contains(gb, P(r, "x")));
  CHECK(groebner(gb) == gb);

  Ideal unit(r, {P(r, "x"), P(r, "x + 1")});
  CHECK(groebner(unit) == Ideal(r, {MultiPoly(r, 1)}));
}

TEST_CASE("groebner output is a reduced basis of the same ideal") {
  auto r = make_ring({"x", "y", "z", "w"});
  std::mt19937 rng(4242);
  std::vector<Ideal> inputs{twisted_cubic_cone(r),
                            Ideal(r, {P(r, "x^2 + y*z - w"), P(r, "x*y - z^2"), P(r, "y^3 - x*w")}),
                            Ideal(r, {P(r, "x*y - z*w"), P(r, "x^2 - y^2 + z*w")})};
  for (int i = 0; i < 10; ++i)
    inputs.emplace_back(r, std::vector<MultiPoly>{oracle::random_poly(rng, r, {2, 2, 1, 1}, 3),
                                                  oracle::random_poly(rng, r, {1, 2, 2, 1}, 3),
                                                  oracle::random_poly(rng, r, {1, 1, 1, 2}, 3)});
  for (TermOrder order : {TermOrder::Grevlex, TermOrder::Lex}) {
    for (const auto& ideal : inputs) {
      Ideal gb = groebner(ideal, order);
      const auto& g = gb.generators();
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
          CHECK(normal_form(s_polynomial(g[i], g[j], order), g, order).is_zero());
      for (const auto& f : ideal.generators()) CHECK(contains(gb, f, order));
      Ideal original_gb = gb;
      // Every basis element lies in the ideal spanned by the inputs: the
      // basis of the inputs plus one basis element is unchanged.
      for (const auto& f : g) {
        auto gens = ideal.generators();
        gens.push_back(f);
        CHECK(groebner(Ideal(r, gens), order) == original_gb);
      }
      for (const auto& f : g) CHECK(f.leading_coefficient(order) == 1);
    }
  }
}

TEST_CASE("groebner budget is enforced") {
  auto r = make_ring({"x", "y", "z", "w"});
  Ideal ideal(r, {P(r, "x^2 + y*z - w"), P(r, "x*y - z^2"), P(r, "y^3 - x*w")});
  CHECK_THROWS_AS(groebner(ideal, TermOrder::Grevlex, 1), BudgetExceeded);
  CHECK_NOTHROW(groebner(ideal, TermOrder::Grevlex, kDefaultGroebnerBudget));
  GroebnerStats stats;
  groebner(twisted_cubic_cone(r), TermOrder::Grevlex, kDefaultGroebnerBudget, &stats);
  CHECK(stats.pairs_considered >= 3);
}

TEST_CASE("hilbert series examples") {
  auto r = make_ring({"x", "y", "z", "w"});
  HilbertSeries full = hilbert_series(Ideal(r));
  CHECK(full.numerator == std::vector<std::int64_t>{1});
  CHECK(full.ambient_vars == 4);

  HilbertSeries ci = hilbert_series(Ideal(r, {P(r, "x*w - y*z"), P(r, "x^2 + y^2 + z^2 + w^2")}));
  CHECK(ci.numerator == std::vector<std::int64_t>{1, 2, 1});
  CHECK(ci.ambient_vars == 2);

  HilbertSeries cone = hilbert_series(twisted_cubic_cone(r));
  CHECK(cone.numerator == std::vector<std::int64_t>{1, 2});
  CHECK(cone.ambient_vars == 2);
  CHECK(cone.to_string() == "(1 + 2T)/(1 - T)^2");
  auto counts = cone.expand(8);
  for (int n = 0; n <= 8; ++n) CHECK(counts[n] == 3 * n + 1);

  CHECK_THROWS_AS(hilbert_series(Ideal(r, {P(r, "x^2 - y")})), HomogeneityError);
}

TEST_CASE("hilbert series agrees with enumeration through degree 8") {
  auto r = make_ring({"x", "y", "z", "w"});
  check_against_enumeration(Ideal(r));
  check_against_enumeration(twisted_cubic_cone(r));
  check_against_enumeration(Ideal(r, {P(r, "x*w - y*z"), P(r, "x^2 + y^2 + z^2 + w^2")}));
  check_against_enumeration(Ideal(r, {P(r, "x*y"), P(r, "y*z"), P(r, "z*w^2")}));
  check_against_enumeration(Ideal(r, {P(r, "x"), P(r, "y"), P(r, "z"), P(r, "w")}));
  check_against_enumeration(Ideal(r, {P(r, "x^2"), P(r, "x*y - z^2"), P(r, "y^3 - w^3")}));

  auto r3 = make_ring({"x", "y", "z"});
  std::mt19937 rng(31337);
  for (int i = 0; i < 8; ++i) {
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 2; ++k) {
      int degree = 2 + (i + k) % 2;
      MultiPoly g(r3);
      for (const auto& m : oracle::monomials_of_degree(3, degree))
        if (rng() % 2) g.add_term(m, static_cast<long>(rng() % 5) - 2);
      gens.push_back(g);
    }
    check_against_enumeration(Ideal(r3, gens));
  }
}

TEST_CASE("krull dimension") {
  auto r = make_ring({"x", "y", "z", "w"});
  CHECK(krull_dimension(Ideal(r)) == 4);
  CHECK(krull_dimension(twisted_cubic_cone(r)) == 2);
  CHECK(krull_dimension(Ideal(r, {P(r, "x"), P(r, "y"), P(r, "z"), P(r, "w")})) == 0);
  CHECK(krull_dimension(Ideal(r, {MultiPoly(r, 1)})) == -1);
}

TEST_CASE("jacobian ideal") {
  auto r2 = make_ring({"x", "y"});
  Ideal node = jacobian_ideal(Ideal(r2, {P(r2, "x*y")}), 1);
  Ideal gb = groebner(node);
  CHECK(contains(gb, P(r2, "x")));
  CHECK(contains(gb, P(r2, "y")));
  CHECK(krull_dimension(node) == 0);

  auto r = make_ring({"x", "y", "z", "w"});
  CHECK(krull_dimension(jacobian_ideal(Ideal(r, {P(r, "x^2 + y^2 + z^2 + w^2")}), 1)) == 0);
  // The cone over a twisted cubic is singular only at its vertex.
  CHECK(krull_dimension(jacobian_ideal(twisted_cubic_cone(r), 2)) == 0);
  CHECK_THROWS_AS(jacobian_ideal(Ideal(r, {P(r, "x")}), 2), ShapeError);
  CHECK_THROWS_AS(jacobian_ideal(Ideal(r, {P(r, "x")}), 0), ShapeError);
}

TEST_CASE("polynomial square roots") {
  auto r = make_ring({"x", "y"});
  auto root = poly_square_root(P(r, "(x^2 + y^2)^2"));
  REQUIRE(std::holds_alternative<SquareRoot>(root));
  CHECK(std::get<SquareRoot>(root).root == P(r, "x^2 + y^2"));
  CHECK(std::get<SquareRoot>(root).constant == 1);

  auto scaled = poly_square_root(P(r, "-4(x^2 + y^2)^2"));
  REQUIRE(std::holds_alternative<SquareRoot>(scaled));
  CHECK(std::get<SquareRoot>(scaled).root == P(r, "x^2 + y^2"));
  CHECK(std::get<SquareRoot>(scaled).constant == -4);

  CHECK(std::holds_alternative<NotASquare>(poly_square_root(P(r, "x^2 + y^2"))));
  CHECK(std::holds_alternative<NotASquare>(poly_square_root(P(r, "x^4 + x^2*y^2 + y^4"))));

  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    MultiPoly g = oracle::random_poly(rng, r, {3, 3}, 4);
    if (g.is_zero()) continue;
    Rat c = oracle::random_rat(rng, 6, true);
    auto res = poly_square_root(g * g * c);
    REQUIRE(std::holds_alternative<SquareRoot>(res));
    const auto& sq = std::get<SquareRoot>(res);
    CHECK(sq.root * sq.root * sq.constant == g * g * c);
  }
}

TEST_CASE("operations are deterministic") {
  auto r = make_ring({"x", "y", "z", "w"});
  Ideal ideal(r, {P(r, "x^2 + y*z - w^2"), P(r, "x*y - z^2"), P(r, "y^2 - x*w")});
  Ideal a = groebner(ideal), b = groebner(ideal);
  REQUIRE(a.generators().size() == b.generators().size());
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    CHECK(a.generators()[i].to_string() == b.generators()[i].to_string());
  CHECK(hilbert_series(ideal) == hilbert_series(ideal));
  auto s = make_ring({"x", "y"});
  CHECK(resultant(P(s, "x^3 + y x + 1"), P(s, "x^2 - y"), "x").to_string() ==
        resultant(P(s, "x^3 + y x + 1"), P(s, "x^2 - y"), "x").to_string());
}
