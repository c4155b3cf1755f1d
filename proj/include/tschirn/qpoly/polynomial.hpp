#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tschirn/qpoly/rational.hpp"

namespace tschirn::qpoly {

using Exponents = std::vector<int>;

enum class TermOrder { Grevlex, Lex };

int total_degree(const Exponents& e);

// Strict "a comes before b" in descending order, i.e. a > b.
bool term_greater(TermOrder order, const Exponents& a, const Exponents& b);

struct GrevlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return term_greater(TermOrder::Grevlex, a, b);
  }
};

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents gcd(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& b, const Exponents& a);  // b / a, requires divides(a, b)

// Ordered list of variable names; shared by every polynomial built over it.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VarContext&, const VarContext&) = default;

 private:
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const VarContext>;

Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& a, const Ring& b);

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GrevlexDescending>;

  explicit MultiPoly(Ring ring);
  MultiPoly(Ring ring, const Rat& constant);

  static MultiPoly variable(Ring ring, std::string_view name);
  static MultiPoly monomial(Ring ring, Exponents exponents, const Rat& coefficient = 1);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  int degree_in(std::string_view var) const { return degree_in(ring_->require(var)); }
  bool is_homogeneous() const;

  std::pair<Exponents, Rat> leading_term(TermOrder order = TermOrder::Grevlex) const;
  Rat leading_coefficient(TermOrder order = TermOrder::Grevlex) const {
    return leading_term(order).second;
  }

  // Coefficient of var^k, viewed as a polynomial in the remaining variables.
  MultiPoly coefficient_in(std::size_t var, int k) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const {
    return substitute(ring_->require(var), value);
  }
  MultiPoly substitute(std::string_view var, const Rat& value) const {
    return substitute(ring_->require(var), MultiPoly(ring_, value));
  }

  // Ring homomorphism sending variable i to images[i].
  MultiPoly map_to(const Ring& target, std::span<const MultiPoly> images) const;

  Rat evaluate(std::span<const Rat> point) const;

  MultiPoly pow(unsigned exponent) const;

  // Positive rational c with this / c having coprime integer coefficients.
  Rat content() const;
  // this / content, sign fixed so the grevlex leading coefficient is positive.
  MultiPoly primitive() const;
  MultiPoly monic(TermOrder order = TermOrder::Grevlex) const;

  void add_term(const Exponents& exponents, const Rat& coefficient);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rat& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& s) { return a *= s; }
  friend MultiPoly operator*(const Rat& s, MultiPoly a) { return a *= s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& other) const;

  Ring ring_;
  TermMap terms_;
};

// q with f == q * g, or nullopt when g does not divide f.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

// lambda with f == lambda * g, or nullopt when no nonzero lambda exists.
std::optional<Rat> proportionality(const MultiPoly& f, const MultiPoly& g);

// Grammar: sums of products of factors; factors are rationals (p or p/q),
// identifiers from the ring, or parenthesised expressions, each optionally
// raised to a nonnegative integer power with '^'. '*' may be omitted.
MultiPoly parse_poly(std::string_view text, const Ring& ring);

}  // namespace tschirn::qpoly
