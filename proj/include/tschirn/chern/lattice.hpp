#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tschirn/qpoly/rational.hpp"

namespace tschirn::chern {

using qpoly::Int;
using qpoly::Rat;

class Lattice;
using LatticeRef = std::shared_ptr<const Lattice>;

// Element of a lattice tensored with Q.
class NumClass {
 public:
  NumClass(LatticeRef lattice, std::vector<Rat> coefficients);

  const LatticeRef& lattice() const { return lattice_; }
  const std::vector<Rat>& coefficients() const { return coefficients_; }
  const Rat& operator[](std::size_t i) const { return coefficients_.at(i); }

  bool is_zero() const;
  bool is_integral() const;

  NumClass operator-() const;
  NumClass& operator+=(const NumClass& other);
  NumClass& operator-=(const NumClass& other);
  NumClass& operator*=(const Rat& scalar);

  friend NumClass operator+(NumClass a, const NumClass& b) { return a += b; }
  friend NumClass operator-(NumClass a, const NumClass& b) { return a -= b; }
  friend NumClass operator*(NumClass a, const Rat& s) { return a *= s; }
  friend NumClass operator*(const Rat& s, NumClass a) { return a *= s; }
  friend bool operator==(const NumClass& a, const NumClass& b);

  // "2*L - Lambda1 + 1/2*Lambda2", "0" for the zero class.
  std::string to_string() const;

 private:
  void check_lattice(const NumClass& other) const;

  LatticeRef lattice_;
  std::vector<Rat> coefficients_;
};

// Named basis with a symmetric integral Gram matrix.
class Lattice : public std::enable_shared_from_this<Lattice> {
 public:
  // Throws ShapeError on a non-square or asymmetric Gram matrix or repeated
  // names, NonIntegral on a non-integral entry.
  static LatticeRef make(std::vector<std::string> names, std::vector<std::vector<Rat>> gram);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<Rat>>& gram() const { return gram_; }
  std::size_t index_of(std::string_view name) const;  // throws UndeclaredSymbol

  NumClass zero() const;
  NumClass basis(std::string_view name) const;
  NumClass element(std::vector<Rat> coefficients) const;

 private:
  Lattice(std::vector<std::string> names, std::vector<std::vector<Rat>> gram);

  std::vector<std::string> names_;
  std::vector<std::vector<Rat>> gram_;
};

// Throws LatticeMismatch unless both classes live on the same lattice.
Rat pair(const NumClass& a, const NumClass& b);

inline Rat self_intersection(const NumClass& a) { return pair(a, a); }

// Orthogonal extension of `base` by classes prefix1..prefixN of square -1,
// with the pull-back map for classes on the base.
struct ExtendedLattice {
  LatticeRef lattice;
  std::vector<NumClass> exceptional;
  NumClass pull_back(const NumClass& c) const;
};

ExtendedLattice add_exceptional_classes(const LatticeRef& base, int count, std::string_view prefix = "Lambda");

}  // namespace tschirn::chern
