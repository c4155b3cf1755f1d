#include "tschirn/numerology/numerology.hpp"

#include <algorithm>
#include <numeric>

#include "tschirn/error.hpp"

namespace tschirn::numerology {

namespace {

std::int64_t to_int64(const chern::Rat& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw InconsistentData(std::string(what) + " is not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

}  // namespace

std::string to_string(Polarization p) {
  switch (p) {
    case Polarization::General: return "general";
    case Polarization::Special: return "special";
    case Polarization::Product: return "product";
  }
  return "";
}

Polarization parse_polarization(std::string_view text) {
  if (text == "general") return Polarization::General;
  if (text == "special") return Polarization::Special;
  if (text == "product") return Polarization::Product;
  throw ParseError("unknown polarization '" + std::string(text) + "' (expected general, special or product)");
}

FibrationData pencil_fibration(const chern::SurfaceGeom& surface, int fiber_genus) {
  if (!surface.euler_number().fits_slong_p()) throw InconsistentData("Euler number out of range");
  return {surface.euler_number().get_si(), 2, 2 - 2 * static_cast<std::int64_t>(fiber_genus), 1};
}

std::int64_t zeuthen_segre_count(const FibrationData& f) {
  if (f.nodal_delta <= 0) throw ShapeError("Euler-number jump per singular fibre must be positive");
  std::int64_t excess = f.c2_total - f.base_euler * f.fiber_euler;
  if (excess < 0 || excess % f.nodal_delta != 0)
    throw InconsistentData("c2 - e(B) e(F) = " + std::to_string(excess) + " is not a nonnegative multiple of " +
                           std::to_string(f.nodal_delta));
  return excess / f.nodal_delta;
}

HorikawaCount horikawa_count(std::int64_t canonical_square, std::int64_t chi, std::int64_t reducible) {
  HorikawaCount out;
  out.torsion_degree = canonical_square - 3 * chi + 10;
  if (out.torsion_degree < 0)
    throw InconsistentData("K^2 - 3 chi + 10 = " + std::to_string(out.torsion_degree) + " is negative");
  if (reducible < 0 || reducible > out.torsion_degree)
    throw InconsistentData("reducible member count " + std::to_string(reducible) + " outside [0, " +
                           std::to_string(out.torsion_degree) + "]");
  out.reducible = reducible;
  out.smooth_hyperelliptic = out.torsion_degree - reducible;
  return out;
}

OrbitCount orbit_count(const OrbitData& o) {
  const std::int64_t n = o.group_order;
  if (n < 2) throw InconsistentData("a nontrivial action needs group order >= 2");
  if (o.branch_fiber_sizes.empty()) throw InconsistentData("no branch fibre sizes given");
  for (auto f : o.branch_fiber_sizes)
    if (f < 1 || f >= n || n % f != 0)
      throw InconsistentData("branch fibre size " + std::to_string(f) + " is not a proper divisor of " +
                             std::to_string(n));
  // Riemann-Hurwitz for P^1 -> P^1: 2 = 2n - sum over branch points (n - f).
  const std::int64_t ramification = 2 * n - 2;
  OrbitCount out;
  if (o.branch_fiber_sizes.size() == 1) {
    std::int64_t f = o.branch_fiber_sizes.front();
    if (ramification % (n - f) != 0)
      throw InconsistentData("no integral number of branch points with fibre size " + std::to_string(f));
    out.branch_points = ramification / (n - f);
    out.stabilized_elements = out.branch_points * f;
    return out;
  }
  std::int64_t total = 0;
  for (auto f : o.branch_fiber_sizes) total += n - f;
  if (total != ramification)
    throw InconsistentData("Riemann-Hurwitz fails: ramification " + std::to_string(total) + " != " +
                           std::to_string(ramification));
  out.branch_points = static_cast<std::int64_t>(o.branch_fiber_sizes.size());
  out.stabilized_elements =
      std::accumulate(o.branch_fiber_sizes.begin(), o.branch_fiber_sizes.end(), std::int64_t{0});
  return out;
}

std::size_t OrbitPartition::orbits_of_size(std::size_t n) const {
  return static_cast<std::size_t>(
      std::count_if(orbits.begin(), orbits.end(), [n](const auto& o) { return o.size() == n; }));
}

OrbitPartition two_division_orbits() {
  constexpr int kPoints = 16;
  const std::vector<int> translations{0b0000, 0b0001, 0b0010, 0b0011};
  OrbitPartition out;
  out.stabilizer_sizes.assign(kPoints, 0);
  std::vector<bool> seen(kPoints, false);
  for (int p = 0; p < kPoints; ++p) {
    for (int g : translations) out.stabilizer_sizes[p] += (p ^ g) == p;
    if (seen[p]) continue;
    std::vector<int> orbit;
    for (int g : translations) orbit.push_back(p ^ g);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int q : orbit) seen[q] = true;
    out.orbits.push_back(std::move(orbit));
  }
  // The base points of the pencil are the translation subgroup itself.
  auto base = std::find(out.orbits.begin(), out.orbits.end(), translations);
  out.base_orbit = static_cast<std::size_t>(base - out.orbits.begin());
  return out;
}

bool ModuliDimension::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ModuliCheck& c) { return c.pass; });
}

ModuliDimension moduli_dimension(const ModuliInputs& in) {
  if (in.pencil_sections < 1) throw InconsistentData("a pencil needs at least one section");
  ModuliDimension out;
  out.base = in.polarization_family_dim;
  out.fibre = in.pencil_sections - 1;
  out.total = out.base + out.fibre;
  if (in.tangent_h1) out.checks.push_back({"h1(T_S)", out.total, *in.tangent_h1, *in.tangent_h1 == out.total});
  if (in.embedded_family_dim)
    out.checks.push_back({"h0(N)", out.base, *in.embedded_family_dim, *in.embedded_family_dim == out.base});
  for (const auto& c : out.checks)
    if (!c.pass)
      throw InconsistentData("moduli dimension " + std::to_string(out.total) + " disagrees with " + c.name + ": expected " +
                             std::to_string(c.expected) + ", got " + std::to_string(c.actual));
  return out;
}

PencilConsistency pencil_consistency(Polarization p, std::int64_t nu) {
  if (p == Polarization::Product)
    throw InconsistentData("product polarizations have no genus-3 pencil count");
  if (p == Polarization::General && nu != 0) throw InconsistentData("general polarizations have no reducible members");
  if (p == Polarization::Special && nu < 1) throw InconsistentData("special polarizations need nu >= 1");
  PencilConsistency out;
  // The pencil of a (1,2) polarization on the abelian surface blown up in its
  // four base points, acted on by the order-4 translation group.
  auto blown = chern::blow_up(chern::abelian_surface(chern::polarization_lattice("L", 4)), 4);
  out.horikawa = horikawa_count(to_int64(blown.geometry.canonical_square(), "K^2"),
                                to_int64(blown.geometry.chi(), "chi"), nu);
  out.orbits = orbit_count({4, {2}});
  out.pass = out.orbits.stabilized_elements == out.horikawa.smooth_hyperelliptic + out.horikawa.reducible;
  if (nu > 2) out.note = "more than two reducible members is only possible for special product-isomorphic surfaces";
  return out;
}

}  // namespace tschirn::numerology
