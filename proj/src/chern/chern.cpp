#include "tschirn/chern/chern.hpp"

#include <functional>

#include "tschirn/error.hpp"

namespace tschirn::chern {

namespace {

Rat chi_of(const CohomologyTriple& h) { return Rat(h[0] - h[1] + h[2]); }

std::string triple_string(const CohomologyTriple& h) {
  return "(" + std::to_string(h[0]) + ", " + std::to_string(h[1]) + ", " + std::to_string(h[2]) + ")";
}

// Chern data of the bundle whose formal roots are sum_i m_i * alpha_i for
// each exponent vector m in `weights`, where alpha_i are the roots of b.
BundleChern from_root_weights(const BundleChern& b, const std::vector<std::vector<int>>& weights) {
  // sum_m (m.alpha) = A1 * e1 and sum_m (m.alpha)^2 = A2 * p2 + B * (p1^2 - p2)
  // by symmetry in the roots, reading A1, A2, B off the first two slots.
  Rat a1 = 0, a2 = 0, mixed = 0;
  for (const auto& m : weights) {
    a1 += m[0];
    a2 += m[0] * m[0];
    if (m.size() > 1) mixed += m[0] * m[1];
  }
  Rat p1_sq = self_intersection(b.c1());
  Rat p2 = p1_sq - 2 * b.c2();
  NumClass c1 = b.c1() * a1;
  Rat ch2 = (a2 * p2 + mixed * (p1_sq - p2)) / 2;
  return BundleChern(static_cast<int>(weights.size()), c1, self_intersection(c1) / 2 - ch2);
}

void require_small_rank(const BundleChern& b, const char* op) {
  if (b.rank() > 3)
    throw UnsupportedRank(std::string(op) + " is implemented for rank <= 3, got rank " + std::to_string(b.rank()));
}

}  // namespace

SurfaceGeom::SurfaceGeom(NumClass canonical, Int euler_number, Rat chi_structure_sheaf)
    : canonical_(std::move(canonical)), euler_(std::move(euler_number)), chi_(std::move(chi_structure_sheaf)) {
  Rat noether = (self_intersection(canonical_) + Rat(euler_)) / 12;
  if (noether != chi_)
    throw InconsistentData("Noether's formula fails: (K^2 + e)/12 = " + qpoly::to_string(noether) +
                           " but chi(O) = " + qpoly::to_string(chi_));
}

SurfaceGeom abelian_surface(const LatticeRef& lattice) { return SurfaceGeom(lattice->zero(), 0, 0); }

LatticeRef polarization_lattice(std::string_view name, Int square) {
  return Lattice::make({std::string(name)}, {{Rat(square)}});
}

BundleChern::BundleChern(int rank, NumClass c1, Rat c2) : rank_(rank), c1_(std::move(c1)), c2_(std::move(c2)) {
  if (rank_ < 1) throw ShapeError("bundle rank must be positive");
  if (rank_ == 1 && c2_ != 0) throw InconsistentData("a line bundle has c2 = 0");
}

Rat BundleChern::ch2() const { return self_intersection(c1_) / 2 - c2_; }

BundleChern dual(const BundleChern& b) {
  // c_i(E^v) = (-1)^i c_i(E).
  return BundleChern(b.rank(), -b.c1(), b.c2());
}

BundleChern twist(const BundleChern& b, const NumClass& m) {
  int r = b.rank();
  Rat c2 = b.c2() + Rat(r - 1) * pair(b.c1(), m) + Rat(r * (r - 1) / 2) * self_intersection(m);
  return BundleChern(r, b.c1() + m * Rat(r), c2);
}

BundleChern tensor(const BundleChern& a, const BundleChern& b) {
  NumClass c1 = a.c1() * Rat(b.rank()) + b.c1() * Rat(a.rank());
  Rat ch2 = Rat(b.rank()) * a.ch2() + Rat(a.rank()) * b.ch2() + pair(a.c1(), b.c1());
  return BundleChern(a.rank() * b.rank(), c1, self_intersection(c1) / 2 - ch2);
}

BundleChern direct_sum(const BundleChern& a, const BundleChern& b) {
  return BundleChern(a.rank() + b.rank(), a.c1() + b.c1(), a.c2() + b.c2() + pair(a.c1(), b.c1()));
}

BundleChern symmetric_power(const BundleChern& b, int k) {
  require_small_rank(b, "symmetric power");
  if (k < 0) throw ShapeError("negative symmetric power");
  if (k == 0) return BundleChern::trivial(b.c1().lattice());
  std::vector<std::vector<int>> weights;
  std::vector<int> cur(static_cast<std::size_t>(b.rank()), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == cur.size()) {
      cur[i] = left;
      weights.push_back(cur);
      return;
    }
    for (int m = left; m >= 0; --m) {
      cur[i] = m;
      rec(i + 1, left - m);
    }
  };
  rec(0, k);
  return from_root_weights(b, weights);
}

BundleChern wedge2(const BundleChern& b) {
  require_small_rank(b, "exterior square");
  if (b.rank() < 2) throw UnsupportedRank("exterior square of a line bundle is zero");
  std::vector<std::vector<int>> weights;
  for (int i = 0; i < b.rank(); ++i)
    for (int j = i + 1; j < b.rank(); ++j) {
      std::vector<int> m(static_cast<std::size_t>(b.rank()), 0);
      m[i] = m[j] = 1;
      weights.push_back(std::move(m));
    }
  return from_root_weights(b, weights);
}

BundleChern determinant(const BundleChern& b) { return BundleChern::line_bundle(b.c1()); }

Rat riemann_roch(int rank, const Rat& c1_squared, const Rat& c1_dot_canonical, const Rat& c2,
                 const Rat& chi_structure_sheaf) {
  return Rat(rank) * chi_structure_sheaf + (c1_squared - c1_dot_canonical) / 2 - c2;
}

Rat riemann_roch(const BundleChern& b, const SurfaceGeom& y) {
  return riemann_roch(b.rank(), self_intersection(b.c1()), pair(b.c1(), y.canonical()), b.c2(), y.chi());
}

Rat c2_from_chi(int rank, const NumClass& c1, const Rat& chi, const SurfaceGeom& y) {
  return Rat(rank) * y.chi() + pair(c1, c1 - y.canonical()) / 2 - chi;
}

CoverInvariants triple_cover_invariants(const SurfaceGeom& y, const CohomologyTriple& h_base,
                                        const BundleChern& e, const CohomologyTriple& h_bundle) {
  if (e.rank() != 2)
    throw UnsupportedRank("a triple cover's Tschirnhausen bundle has rank 2, got " + std::to_string(e.rank()));
  for (auto v : h_base)
    if (v < 0) throw InconsistentData("negative cohomology dimension " + triple_string(h_base));
  for (auto v : h_bundle)
    if (v < 0) throw InconsistentData("negative cohomology dimension " + triple_string(h_bundle));
  if (chi_of(h_base) != y.chi())
    throw InconsistentData("h(O_Y) = " + triple_string(h_base) + " disagrees with chi(O_Y) = " +
                           qpoly::to_string(y.chi()));
  Rat chi_e = riemann_roch(e, y);
  if (chi_of(h_bundle) != chi_e)
    throw InconsistentData("h(E) = " + triple_string(h_bundle) + " disagrees with chi(E) = " +
                           qpoly::to_string(chi_e) + " from Riemann-Roch");

  CoverInvariants out{};
  for (std::size_t i = 0; i < 3; ++i) out.structure_sheaf[i] = h_base[i] + h_bundle[i];
  out.irregularity = out.structure_sheaf[1];
  out.geometric_genus = out.structure_sheaf[2];
  out.chi = out.structure_sheaf[0] - out.structure_sheaf[1] + out.structure_sheaf[2];
  out.canonical_square = 3 * y.canonical_square() - 4 * pair(e.c1(), y.canonical()) +
                         2 * self_intersection(e.c1()) - 3 * e.c2();
  return out;
}

BlownUpSurface blow_up(const SurfaceGeom& y, int points, std::string_view prefix) {
  if (points < 1) throw ShapeError("blow-up needs at least one point");
  ExtendedLattice ext = add_exceptional_classes(y.lattice(), points, prefix);
  NumClass k = ext.pull_back(y.canonical());
  for (const auto& e : ext.exceptional) k += e;
  SurfaceGeom g(k, y.euler_number() + points, y.chi());
  return BlownUpSurface{std::move(g), std::move(ext)};
}

Int adjunction_genus(const NumClass& d, const SurfaceGeom& y) {
  Rat g = 1 + (self_intersection(d) + pair(d, y.canonical())) / 2;
  if (!qpoly::is_integer(g))
    throw NonIntegral("arithmetic genus " + qpoly::to_string(g) + " of " + d.to_string() + " is not an integer");
  return g.get_num();
}

}  // namespace tschirn::chern
