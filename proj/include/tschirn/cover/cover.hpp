#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tschirn/qpoly/elimination.hpp"
#include "tschirn/qpoly/ideal.hpp"

namespace tschirn::cover {

using qpoly::Ideal;
using qpoly::MultiPoly;
using qpoly::Rat;
using qpoly::Ring;

// Coefficients of a triple cover in Miranda's normal form, all over one ring
// that contains x and y and neither z nor w.
struct MirandaData {
  MultiPoly a, b, c, d;
};

// (a, b, c, d) = (s x, t y, -t x, -s y) over {x, y}.
MirandaData chen_hacon_data(const Rat& s, const Rat& t);
// Same with s, t kept as variables of the ring {x, y, s, t}.
MirandaData chen_hacon_data_symbolic();

struct CoverModel {
  MirandaData data;  // lifted into `ring`
  Ring ring;         // data ring followed by z, w
  // [[z + a, w - 2d, c], [b, z - 2a, w + d]]
  std::array<std::array<MultiPoly, 3>, 2> matrix;
  // Minors on column pairs (1,2), (1,3), (2,3), in that order.
  Ideal minors;
  bool homogeneous = false;
};

// Throws ShapeError when the data polynomials do not share a ring, lack x or
// y, or already use z or w.
CoverModel build_model(const MirandaData& data);

// The defining cubic, made monic in z. Computed once over the generic ring
// {a, b, c, d, z, w} as the resultant in w of the first two minors and then
// specialized, so it stays valid where b vanishes.
MultiPoly eliminate_cubic(const CoverModel& model);

// Resultant in w of minors i and j of the specialized model, divided by its
// leading coefficient in z. Throws DegenerateInput when that is not a monic
// cubic in z (zero resultant, lost degree or a non-dividing leading term).
MultiPoly eliminate_cubic_from_minors(const CoverModel& model, std::size_t i, std::size_t j);

// disc_z of the cubic with the extraneous factor b^2 removed (it comes from
// projecting along z, not from the cover), divided by its positive content.
// The result lives in the data ring. Throws DegenerateInput when it vanishes
// identically.
MultiPoly branch_discriminant(const CoverModel& model);

// (t^2 - s^2)^2 x^2 y^2 - 4 (s^2 x^2 + s t y^2)(s^2 y^2 + s t x^2), with s, t
// given as polynomials of `ring` (constants or variables).
MultiPoly chen_hacon_branch_locus(const Ring& ring, const MultiPoly& s, const MultiPoly& t);

enum class Degeneration { General, TotallyRamified, NonNormal };
enum class DegenerationLocus { None, SZero, SEqualsT, SEqualsMinusT, TZero, TEquals3S, TEqualsMinus3S };

struct DegenerationClass {
  Degeneration kind = Degeneration::General;
  DegenerationLocus locus = DegenerationLocus::None;
  std::string to_string() const;  // "General", "TotallyRamified(s=t)", "NonNormal(t=3s)"
  friend bool operator==(const DegenerationClass&, const DegenerationClass&) = default;
};

// Throws DegenerateInput at (0, 0).
DegenerationClass classify_parameters(const Rat& s, const Rat& t);

// Discriminant of the symbolic branch quartic as a binary form in (x, y),
// a polynomial in {s, t} normalized to coprime integer coefficients.
// It vanishes exactly where the cover degenerates.
MultiPoly governing_discriminant();

enum class LocalSingularity { OneThird11, OneHalf11, OneThird12, ThreePlanes, Smooth };

std::string to_string(LocalSingularity s);  // "1/3(1,1)", ...

struct ResolutionData {
  std::vector<int> exceptional_self_intersections;  // minimal resolution
  bool isolated = true;
  bool negligible = true;  // changes neither K^2 nor chi
  int delta_canonical_square = 0;
  int delta_chi = 0;
};

// Cyclic quotient resolutions: 1/3(1,1) one (-3)-curve, A1 one (-2)-curve,
// A2 two (-2)-curves. ThreePlanes is not isolated and has no such data.
ResolutionData resolution_of(LocalSingularity s);

// One irreducible component z = z_value(x, y), w = w_value(x, y). Over a
// quadratic field the ring is {x, y, z, w, r} and r stands for its square
// root; otherwise it is {x, y, z, w}.
struct PlaneComponent {
  MultiPoly z_value, w_value;  // linear forms in x, y
  Ideal ideal;                 // (z - z_value, w - w_value)
};

struct ThreePlaneCertificate {
  std::vector<PlaneComponent> components;
  // Krull dimension of the pairwise intersections, pairs (0,1), (0,2), (1,2).
  std::array<int, 3> pair_dimensions{};
  int intersection_lines = 0;  // distinct lines among the pairwise intersections
  // Squarefree d when the planes need Q(sqrt(d)); nullopt when rational.
  std::optional<Rat> field_square;
};

// Splits the cubic into linear factors z - l(x, y) over Q or a quadratic
// field (adjoined on demand), solves each minor for w on the plane z = l and
// collects the distinct planes.
// Checks that every minor vanishes on every plane, that the minor ideal has
// degree 3 and dimension 2 (so the planes exhaust it), and the 3-plane,
// 2-line combinatorics. Throws DecompositionError naming the failing step.
ThreePlaneCertificate decompose_three_planes(const CoverModel& model);

// The combinatorial part on its own: exactly three distinct planes meeting
// in exactly two lines. `field_square` is the d of r^2 = d if the planes use r.
ThreePlaneCertificate certify_three_planes(std::vector<PlaneComponent> planes,
                                           std::optional<Rat> field_square = std::nullopt);

struct BasePointAnalysis {
  DegenerationClass degeneration;
  std::optional<LocalSingularity> singularity;  // nullopt when uncertified
  std::optional<qpoly::HilbertSeries> hilbert;
  std::optional<int> singular_locus_dimension;  // of the affine cone
  std::optional<ThreePlaneCertificate> planes;
  std::string note;  // why certification failed, if it did

  bool certified() const { return singularity.has_value(); }
};

// Germ over the base point for specialized data over {x, y}. Isolated
// classes are certified as the cone over a twisted cubic by the Hilbert
// series (1 + 2T)/(1 - T)^2 and a 0-dimensional singular locus; non-normal
// ones by decompose_three_planes. Certification failures are reported, not
// thrown.
BasePointAnalysis analyze_base_point(const CoverModel& model, const Rat& s, const Rat& t);

// A singular point of the branch locus and the ramification over it.
struct BranchPoint {
  int multiplicity = 4;         // of the branch divisor: 2 node, 4 quadruple point
  bool reduced = true;          // branch divisor reduced near the point
  bool totally_ramified = true;
  bool at_origin = true;        // the point where every branch curve passes
};

struct BranchPointSingularities {
  BranchPoint point;
  std::vector<LocalSingularity> over_point;  // includes smooth points
  // Curves over the point on the canonical resolution, when it is known to
  // differ from the minimal one (node with partial ramification).
  std::optional<std::vector<int>> canonical_resolution;
};

struct CoverSingularityReport {
  std::vector<BranchPointSingularities> points;
  std::vector<LocalSingularity> singularities;  // singular points only
  char configuration = '?';                     // 'a'..'d'
  bool canonical_ample = false;
};

// Throws DecompositionError for points or configurations outside the
// classified list.
CoverSingularityReport branch_singularity_table(std::span<const BranchPoint> config);

struct CanonicalDecomposition {
  Rat canonical_square;
  qpoly::Int genus_phi, genus_xi;
  bool pass = false;
};

// K = Xi + Phi with Xi^2 = -3, Xi.Phi = 4, Phi^2 = 0 on a surface with
// chi(O) = 1: K^2 must be 5 and Phi must have genus 3.
CanonicalDecomposition canonical_decomposition_check();

}  // namespace tschirn::cover
