#include <doctest/doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tschirn/error.hpp"
#include "tschirn/numerology/numerology.hpp"

using namespace tschirn;
using namespace tschirn::numerology;

TEST_CASE("nodal members of the genus-3 pencil") {
  // Abelian surface blown up in the four base points: e = 4.
  auto blown = chern::blow_up(chern::abelian_surface(chern::polarization_lattice("L", 4)), 4);
  FibrationData pencil = pencil_fibration(blown.geometry, 3);
  CHECK(pencil.c2_total == 4);
  CHECK(pencil.fiber_euler == -4);
  CHECK(zeuthen_segre_count(pencil) == 12);

  CHECK(zeuthen_segre_count({24, 2, 0, 1}) == 24);
  CHECK(zeuthen_segre_count({0, 2, 0, 1}) == 0);
  CHECK(zeuthen_segre_count({26, 2, 0, 2}) == 13);
  CHECK_THROWS_AS(zeuthen_segre_count({25, 2, 0, 2}), InconsistentData);
  CHECK_THROWS_AS(zeuthen_segre_count({-1, 2, 0, 1}), InconsistentData);
  CHECK_THROWS_AS(zeuthen_segre_count({4, 2, -4, 0}), ShapeError);
}

TEST_CASE("hyperelliptic members") {
  auto h = horikawa_count(-4, 0);
  CHECK(h.torsion_degree == 6);
  CHECK(h.smooth_hyperelliptic == 6);
  auto special = horikawa_count(-4, 0, 2);
  CHECK(special.smooth_hyperelliptic == 4);
  CHECK(special.reducible == 2);
  CHECK(horikawa_count(-4, 0, 1).smooth_hyperelliptic == 5);
  for (std::int64_t chi = 0; chi < 6; ++chi) CHECK(horikawa_count(3 * chi - 10, chi).torsion_degree == 0);
  CHECK_THROWS_AS(horikawa_count(-11, 0), InconsistentData);
  CHECK_THROWS_AS(horikawa_count(-4, 0, 7), InconsistentData);
  CHECK_THROWS_AS(horikawa_count(-4, 0, -1), InconsistentData);
}

TEST_CASE("property: counts are linear in their inputs") {
  std::mt19937 rng(2611);
  for (int trial = 0; trial < 50; ++trial) {
    std::int64_t g = 2 + static_cast<std::int64_t>(rng() % 5);
    FibrationData f{2 * (2 - 2 * g) + static_cast<std::int64_t>(rng() % 30), 2, 2 - 2 * g, 1};
    std::int64_t base = zeuthen_segre_count(f);
    std::int64_t k = static_cast<std::int64_t>(rng() % 10);
    FibrationData shifted = f;
    shifted.c2_total += k;
    CHECK(zeuthen_segre_count(shifted) == base + k);

    std::int64_t chi = static_cast<std::int64_t>(rng() % 5), ksq = 3 * chi - 10 + static_cast<std::int64_t>(rng() % 8);
    CHECK(horikawa_count(ksq + k, chi).torsion_degree == horikawa_count(ksq, chi).torsion_degree + k);
    CHECK(horikawa_count(ksq + 3, chi + 1).torsion_degree == horikawa_count(ksq, chi).torsion_degree);
  }
}

TEST_CASE("orbit counts") {
  auto pencil = orbit_count({4, {2}});
  CHECK(pencil.branch_points == 3);
  CHECK(pencil.stabilized_elements == 6);
  auto involution = orbit_count({2, {1}});
  CHECK(involution.branch_points == 2);
  CHECK(involution.stabilized_elements == 2);
  auto rotation = orbit_count({4, {1}});
  CHECK(rotation.branch_points == 2);
  CHECK(rotation.stabilized_elements == 2);
  auto explicit_points = orbit_count({4, {2, 2, 2}});
  CHECK(explicit_points.branch_points == 3);
  CHECK(explicit_points.stabilized_elements == 6);

  CHECK_THROWS_AS(orbit_count({4, {3}}), InconsistentData);
  CHECK_THROWS_AS(orbit_count({4, {4}}), InconsistentData);
  CHECK_THROWS_AS(orbit_count({6, {4}}), InconsistentData);
  CHECK_THROWS_AS(orbit_count({4, {2, 2}}), InconsistentData);
  CHECK_THROWS_AS(orbit_count({1, {1}}), InconsistentData);
  CHECK_THROWS_AS(orbit_count({4, {}}), InconsistentData);
}

TEST_CASE("property: orbit solutions satisfy Riemann-Hurwitz") {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (std::int64_t f = 1; f < n; ++f) {
      if (n % f != 0) continue;
      OrbitCount c;
      try {
        c = orbit_count({n, {f}});
      } catch (const InconsistentData&) {
        // No solution: check that none exists by brute force over b.
        for (std::int64_t b = 0; b <= 2 * n; ++b) CHECK(2 != 2 * n - b * (n - f));
        continue;
      }
      // Euler characteristic of the cover from the orbit decomposition.
      std::int64_t euler_upstairs = n * (2 - c.branch_points) + c.stabilized_elements;
      CHECK(euler_upstairs == 2);
      CHECK(c.stabilized_elements == c.branch_points * f);
    }
}

TEST_CASE("two-division orbits") {
  auto p = two_division_orbits();
  CHECK(p.orbits.size() == 4);
  CHECK(p.orbits_of_size(4) == 4);
  CHECK(p.orbits[p.base_orbit] == std::vector<int>{0, 1, 2, 3});
  std::size_t non_base = 0;
  for (std::size_t i = 0; i < p.orbits.size(); ++i)
    if (i != p.base_orbit) non_base += p.orbits[i].size() == 4;
  CHECK(non_base == 3);
  for (int s : p.stabilizer_sizes) CHECK(s == 1);
  std::vector<int> all;
  for (const auto& o : p.orbits) all.insert(all.end(), o.begin(), o.end());
  std::sort(all.begin(), all.end());
  std::vector<int> expected(16);
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(all == expected);
}

TEST_CASE("moduli dimension") {
  auto m = moduli_dimension({3, 2, 4, 3});
  CHECK(m.total == 4);
  CHECK(m.base == 3);
  CHECK(m.fibre == 1);
  CHECK(m.pass());
  CHECK(m.checks.size() == 2);
  CHECK(moduli_dimension({3, 2, std::nullopt, std::nullopt}).checks.empty());
  CHECK_THROWS_AS(moduli_dimension({3, 2, 5, 3}), InconsistentData);
  CHECK_THROWS_AS(moduli_dimension({3, 2, 4, 2}), InconsistentData);
  CHECK_THROWS_AS(moduli_dimension({3, 0, std::nullopt, std::nullopt}), InconsistentData);
}

TEST_CASE("stabilized members against hyperelliptic and reducible ones") {
  auto general = pencil_consistency(Polarization::General, 0);
  CHECK(general.pass);
  CHECK(general.horikawa.smooth_hyperelliptic == 6);
  CHECK(general.orbits.stabilized_elements == 6);
  for (std::int64_t nu : {1, 2}) {
    auto special = pencil_consistency(Polarization::Special, nu);
    CHECK(special.pass);
    CHECK(special.horikawa.smooth_hyperelliptic == 6 - nu);
    CHECK(special.note.empty());
  }
  auto many = pencil_consistency(Polarization::Special, 4);
  CHECK(many.pass);
  CHECK_FALSE(many.note.empty());
  CHECK_THROWS_AS(pencil_consistency(Polarization::General, 1), InconsistentData);
  CHECK_THROWS_AS(pencil_consistency(Polarization::Special, 0), InconsistentData);
  CHECK_THROWS_AS(pencil_consistency(Polarization::Product, 0), InconsistentData);
  CHECK_THROWS_AS(pencil_consistency(Polarization::Special, 7), InconsistentData);
}

TEST_CASE("polarization names") {
  for (auto p : {Polarization::General, Polarization::Special, Polarization::Product})
    CHECK(parse_polarization(to_string(p)) == p);
  CHECK_THROWS_AS(parse_polarization("generic"), ParseError);
}
