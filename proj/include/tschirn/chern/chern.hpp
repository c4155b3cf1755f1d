#pragma once

#include <array>
#include <cstdint>

#include "tschirn/chern/lattice.hpp"

namespace tschirn::chern {

// Canonical class, topological Euler number and holomorphic Euler
// characteristic of a smooth projective surface. Noether's formula
// chi = (K^2 + e) / 12 is enforced on construction.
class SurfaceGeom {
 public:
  SurfaceGeom(NumClass canonical, Int euler_number, Rat chi_structure_sheaf);

  const NumClass& canonical() const { return canonical_; }
  const LatticeRef& lattice() const { return canonical_.lattice(); }
  const Int& euler_number() const { return euler_; }
  const Rat& chi() const { return chi_; }
  Rat canonical_square() const { return self_intersection(canonical_); }

 private:
  NumClass canonical_;
  Int euler_;
  Rat chi_;
};

// Abelian surface with Neron-Severi lattice `lattice`: K = 0, e = 0, chi = 0.
SurfaceGeom abelian_surface(const LatticeRef& lattice);

// Rank-1 lattice spanned by a principal-type polarization class `name` with
// self-intersection `square`.
LatticeRef polarization_lattice(std::string_view name = "L", Int square = 4);

class BundleChern {
 public:
  // Throws ShapeError for rank < 1 and InconsistentData for a line bundle
  // with nonzero c2.
  BundleChern(int rank, NumClass c1, Rat c2);

  static BundleChern line_bundle(NumClass c1) { return BundleChern(1, std::move(c1), 0); }
  static BundleChern trivial(const LatticeRef& lattice, int rank = 1) {
    return BundleChern(rank, lattice->zero(), 0);
  }

  int rank() const { return rank_; }
  const NumClass& c1() const { return c1_; }
  const Rat& c2() const { return c2_; }
  // Degree-2 part of the Chern character, c1^2 / 2 - c2.
  Rat ch2() const;

  friend bool operator==(const BundleChern&, const BundleChern&) = default;

 private:
  int rank_;
  NumClass c1_;
  Rat c2_;
};

BundleChern dual(const BundleChern& b);
BundleChern twist(const BundleChern& b, const NumClass& m);
BundleChern tensor(const BundleChern& a, const BundleChern& b);
BundleChern direct_sum(const BundleChern& a, const BundleChern& b);
// Symmetric power S^k and exterior square; rank <= 3 only (UnsupportedRank).
BundleChern symmetric_power(const BundleChern& b, int k);
BundleChern wedge2(const BundleChern& b);
BundleChern determinant(const BundleChern& b);

// chi = r chi(O) + c1 (c1 - K) / 2 - c2.
Rat riemann_roch(const BundleChern& b, const SurfaceGeom& y);

// Same formula from intersection numbers alone.
Rat riemann_roch(int rank, const Rat& c1_squared, const Rat& c1_dot_canonical, const Rat& c2,
                 const Rat& chi_structure_sheaf);

// c2 forced by a prescribed chi, inverting riemann_roch.
Rat c2_from_chi(int rank, const NumClass& c1, const Rat& chi, const SurfaceGeom& y);

using CohomologyTriple = std::array<std::int64_t, 3>;

struct CoverInvariants {
  std::int64_t geometric_genus;  // p_g = h^2(O_X)
  std::int64_t irregularity;     // q = h^1(O_X)
  Rat canonical_square;          // K_X^2
  std::int64_t chi;              // chi(O_X)
  CohomologyTriple structure_sheaf;

  friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

// Invariants of a smooth triple cover X -> Y with Tschirnhausen bundle E:
// h^i(O_X) = h^i(O_Y) + h^i(E) and
// K_X^2 = 3 K_Y^2 - 4 c1(E).K_Y + 2 c1(E)^2 - 3 c2(E).
// Throws UnsupportedRank unless rank E = 2, InconsistentData when hY or hE
// disagree with chi(O_Y) or with Riemann-Roch for E.
CoverInvariants triple_cover_invariants(const SurfaceGeom& y, const CohomologyTriple& h_base,
                                        const BundleChern& e, const CohomologyTriple& h_bundle);

struct BlownUpSurface {
  SurfaceGeom geometry;
  ExtendedLattice lattice;
};

// Blow-up at n points: K' = K + sum of exceptional classes.
BlownUpSurface blow_up(const SurfaceGeom& y, int points, std::string_view prefix = "Lambda");

// 1 + (D^2 + D.K) / 2; throws NonIntegral when that is not an integer.
Int adjunction_genus(const NumClass& d, const SurfaceGeom& y);

}  // namespace tschirn::chern
