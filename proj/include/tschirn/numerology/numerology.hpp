#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tschirn/chern/chern.hpp"

namespace tschirn::numerology {

enum class Polarization { General, Special, Product };

std::string to_string(Polarization p);         // "general", "special", "product"
Polarization parse_polarization(std::string_view text);  // throws ParseError

// A fibration over a curve: total Euler number, Euler numbers of base and
// general fibre, and the Euler-number jump contributed by each singular fibre.
struct FibrationData {
  std::int64_t c2_total = 0;
  std::int64_t base_euler = 2;
  std::int64_t fiber_euler = 0;
  std::int64_t nodal_delta = 1;
};

// Pencil of genus-g curves on `surface` with base P^1.
FibrationData pencil_fibration(const chern::SurfaceGeom& surface, int fiber_genus);

// Singular fibres from c2 = e(B) e(F) + delta * count. InconsistentData unless
// the count is a nonnegative integer; ShapeError for delta <= 0.
std::int64_t zeuthen_segre_count(const FibrationData& f);

struct HorikawaCount {
  std::int64_t torsion_degree = 0;      // K^2 - 3 chi + 10
  std::int64_t reducible = 0;           // members of Horikawa number 1 that are reducible
  std::int64_t smooth_hyperelliptic = 0;
};

// Genus-3 fibrations: deg T = K^2 - 3 chi + 10, each hyperelliptic member
// contributing 1. `reducible` of those are reducible curves rather than
// smooth hyperelliptic ones. InconsistentData when deg T < 0 or reducible is
// out of [0, deg T].
HorikawaCount horikawa_count(std::int64_t canonical_square, std::int64_t chi, std::int64_t reducible = 0);

// A cyclic-type action of a group of order n on P^1 with quotient P^1.
// One entry in `branch_fiber_sizes` is a uniform fibre size and the number of
// branch points is solved from Riemann-Hurwitz; several entries list every
// branch point and must satisfy it exactly.
struct OrbitData {
  std::int64_t group_order = 1;
  std::vector<std::int64_t> branch_fiber_sizes;
};

struct OrbitCount {
  std::int64_t branch_points = 0;
  std::int64_t stabilized_elements = 0;  // points with nontrivial stabilizer
};

OrbitCount orbit_count(const OrbitData& o);

// The 16 two-division points of an abelian surface, indexed by their
// coordinates in (Z/2)^4 read as 4-bit integers, under translation by the
// subgroup of order 4 spanned by the two low bits.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // sorted; orbit of 0 first
  std::vector<int> stabilizer_sizes;     // indexed by point
  std::size_t base_orbit = 0;            // orbit made of the base points
  std::size_t orbits_of_size(std::size_t n) const;
};

OrbitPartition two_division_orbits();

struct ModuliInputs {
  std::int64_t polarization_family_dim = 3;  // moduli of the polarized abelian surfaces
  std::int64_t pencil_sections = 2;          // h^0 of the bundle whose projectivization is the fibre
  std::optional<std::int64_t> tangent_h1;    // h^1(T_S), from a cohomology chase
  std::optional<std::int64_t> embedded_family_dim;  // h^0 of the normal bundle
};

struct ModuliCheck {
  std::string name;
  std::int64_t expected = 0, actual = 0;
  bool pass = false;
};

struct ModuliDimension {
  std::int64_t base = 0, fibre = 0, total = 0;
  std::vector<ModuliCheck> checks;
  bool pass() const;
};

// total = family + (sections - 1). The optional cross-checks compare it with
// h^1(T_S) and the embedded family with the polarization family; they are
// recorded, and InconsistentData is thrown when one fails.
ModuliDimension moduli_dimension(const ModuliInputs& in);

// Stabilized pencil members (from the orbit count) against the fibres of
// Horikawa number 1: general polarizations need nu = 0, special ones
// nu >= 1, product ones have no genus-3 pencil count.
struct PencilConsistency {
  OrbitCount orbits;
  HorikawaCount horikawa;
  bool pass = false;
  std::string note;
};

PencilConsistency pencil_consistency(Polarization p, std::int64_t nu);

}  // namespace tschirn::numerology
