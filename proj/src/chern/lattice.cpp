#include "tschirn/chern/lattice.hpp"

#include <set>
#include <sstream>

#include "tschirn/error.hpp"

namespace tschirn::chern {

NumClass::NumClass(LatticeRef lattice, std::vector<Rat> coefficients)
    : lattice_(std::move(lattice)), coefficients_(std::move(coefficients)) {
  if (!lattice_) throw ShapeError("class without a lattice");
  if (coefficients_.size() != lattice_->rank())
    throw ShapeError("class has " + std::to_string(coefficients_.size()) + " coefficients on a rank " +
                     std::to_string(lattice_->rank()) + " lattice");
}

void NumClass::check_lattice(const NumClass& other) const {
  if (lattice_ != other.lattice_) throw LatticeMismatch("classes live on different lattices");
}

bool NumClass::is_zero() const {
  for (const auto& c : coefficients_)
    if (c != 0) return false;
  return true;
}

bool NumClass::is_integral() const {
  for (const auto& c : coefficients_)
    if (!qpoly::is_integer(c)) return false;
  return true;
}

NumClass NumClass::operator-() const {
  NumClass r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

NumClass& NumClass::operator+=(const NumClass& other) {
  check_lattice(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

NumClass& NumClass::operator-=(const NumClass& other) {
  check_lattice(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

NumClass& NumClass::operator*=(const Rat& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

bool operator==(const NumClass& a, const NumClass& b) {
  return a.lattice_ == b.lattice_ && a.coefficients_ == b.coefficients_;
}

std::string NumClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rat& c = coefficients_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) out << qpoly::to_string(mag) << "*";
    out << lattice_->names()[i];
  }
  return first ? "0" : out.str();
}

Lattice::Lattice(std::vector<std::string> names, std::vector<std::vector<Rat>> gram)
    : names_(std::move(names)), gram_(std::move(gram)) {}

LatticeRef Lattice::make(std::vector<std::string> names, std::vector<std::vector<Rat>> gram) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ShapeError("empty basis name");
    if (!seen.insert(n).second) throw ShapeError("duplicate basis name '" + n + "'");
  }
  if (gram.size() != names.size()) throw ShapeError("Gram matrix size does not match the basis");
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != names.size()) throw ShapeError("Gram matrix is not square");
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (!qpoly::is_integer(gram[i][j]))
        throw NonIntegral("Gram entry (" + names[i] + ", " + names[j] + ") is not an integer");
    }
  }
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw ShapeError("Gram matrix is not symmetric");
  return LatticeRef(new Lattice(std::move(names), std::move(gram)));
}

std::size_t Lattice::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw UndeclaredSymbol("no basis class named '" + std::string(name) + "'");
}

NumClass Lattice::zero() const { return NumClass(shared_from_this(), std::vector<Rat>(rank(), 0)); }

NumClass Lattice::basis(std::string_view name) const {
  std::vector<Rat> c(rank(), 0);
  c[index_of(name)] = 1;
  return NumClass(shared_from_this(), std::move(c));
}

NumClass Lattice::element(std::vector<Rat> coefficients) const {
  return NumClass(shared_from_this(), std::move(coefficients));
}

Rat pair(const NumClass& a, const NumClass& b) {
  if (a.lattice() != b.lattice()) throw LatticeMismatch("pairing classes from different lattices");
  const auto& g = a.lattice()->gram();
  Rat sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (b[j] != 0 && g[i][j] != 0) sum += a[i] * g[i][j] * b[j];
  }
  return sum;
}

NumClass ExtendedLattice::pull_back(const NumClass& c) const {
  std::vector<Rat> coeffs = c.coefficients();
  if (coeffs.size() + exceptional.size() != lattice->rank())
    throw LatticeMismatch("class is not on the base of this extension");
  coeffs.resize(lattice->rank(), 0);
  return lattice->element(std::move(coeffs));
}

ExtendedLattice add_exceptional_classes(const LatticeRef& base, int count, std::string_view prefix) {
  if (count < 0) throw ShapeError("negative number of exceptional classes");
  std::vector<std::string> names = base->names();
  std::size_t n = names.size() + static_cast<std::size_t>(count);
  std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < base->rank(); ++i)
    for (std::size_t j = 0; j < base->rank(); ++j) gram[i][j] = base->gram()[i][j];
  for (int k = 1; k <= count; ++k) {
    names.push_back(std::string(prefix) + std::to_string(k));
    std::size_t idx = names.size() - 1;
    gram[idx][idx] = -1;
  }
  ExtendedLattice ext{Lattice::make(std::move(names), std::move(gram)), {}};
  for (int k = 1; k <= count; ++k) ext.exceptional.push_back(ext.lattice->basis(std::string(prefix) + std::to_string(k)));
  return ext;
}

}  // namespace tschirn::chern
