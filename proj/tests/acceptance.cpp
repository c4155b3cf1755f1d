// Acceptance run: one line per criterion with its wall time against the limit.
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ledger_instances.hpp"
#include "oracles.hpp"
#include "tschirn/chern/chern.hpp"
#include "tschirn/cover/cover.hpp"
#include "tschirn/error.hpp"
#include "tschirn/ledger/ledger.hpp"
#include "tschirn/numerology/numerology.hpp"
#include "tschirn/qpoly/elimination.hpp"
#include "tschirn/qpoly/ideal.hpp"

using namespace tschirn;
using qpoly::Ideal;
using qpoly::MultiPoly;
using qpoly::Rat;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

const std::filesystem::path kLedgers = std::filesystem::path(TSCHIRN_DATA_DIR) / "ledgers";

// Collects failed checks and per-item timing violations of one criterion.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  // Sub-millisecond limits are compared against the fastest of three runs so
  // that scheduler noise does not decide the outcome; the result of the last
  // run is returned.
  template <class F>
  auto within(double limit_ms, const std::string& what, F&& f) {
    double best = 1e300;
    for (int k = 0; k < 2; ++k) {
      auto start = Clock::now();
      f();
      best = std::min(best, elapsed_ms(start));
    }
    auto start = Clock::now();
    auto result = f();
    best = std::min(best, elapsed_ms(start));
    if (best > limit_ms) failures_.push_back(what + " took " + std::to_string(best) + " ms");
    return result;
  }

  const std::vector<std::string>& failures() const { return failures_; }
  int checks() const { return checks_; }

 private:
  std::vector<std::string> failures_;
  int checks_ = 0;
};

struct Entry {
  int number;
  std::string title;
  double limit_ms;        // for the whole criterion
  std::string limit_text;
  std::function<void(Criterion&)> run;
};

struct RandomParams {
  std::mt19937 gen{20261016};
  Rat next() {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
    Rat q(num(gen), den(gen));
    q.canonicalize();
    return q;
  }
  Rat nonzero() {
    for (;;)
      if (Rat q = next(); q != 0) return q;
  }
};

bool on_degeneration_lines(const Rat& s, const Rat& t) {
  return s == 0 || t == 0 || s == t || s == -t || t == 3 * s || t == -3 * s;
}

std::string triple(const chern::CoverInvariants& inv) {
  return "(" + std::to_string(inv.geometric_genus) + "," + std::to_string(inv.irregularity) + "," +
         inv.canonical_square.get_str() + "," + std::to_string(inv.chi) + ")";
}

// ---------------------------------------------------------------- 1
void invariants(Criterion& c) {
  auto lattice = chern::polarization_lattice("L", 4);
  auto abelian = chern::abelian_surface(lattice);
  const chern::CohomologyTriple h_abelian{1, 2, 1};

  auto surface = c.within(1, "surface invariants", [&] {
    return chern::triple_cover_invariants(abelian, h_abelian, chern::BundleChern(2, lattice->basis("L"), 1), {0, 0, 1});
  });
  c.check(triple(surface) == "(2,2,5,1)", "surface " + triple(surface));

  auto blown = c.within(1, "blown-up invariants", [&] {
    auto b = chern::blow_up(abelian, 4);
    chern::NumClass lambda = b.lattice.lattice->zero();
    for (const auto& ex : b.lattice.exceptional) lambda += ex;
    auto l = chern::BundleChern::line_bundle(b.lattice.pull_back(lattice->basis("L")));
    auto e = chern::dual(chern::twist(chern::direct_sum(l, l), -lambda));
    return chern::triple_cover_invariants(b.geometry, h_abelian, e, {0, 0, 4});
  });
  c.check(triple(blown) == "(5,2,20,4)", "blown-up " + triple(blown));

  auto product = c.within(1, "product normalization", [&] {
    return chern::triple_cover_invariants(abelian, h_abelian, chern::BundleChern(2, lattice->zero(), 0), {0, 1, 1});
  });
  c.check(triple(product) == "(2,3,0,0)", "product " + triple(product));

  // Independent: K^2 = 3 K_Y^2 - 4 c1.K_Y + 2 c1^2 - 3 c2 with K_Y = 0.
  c.check(surface.canonical_square == 2 * 4 - 3 * 1, "surface K^2 by hand");
  c.check(product.canonical_square == 0, "product K^2 by hand");
}

// ---------------------------------------------------------------- 2
const char* kBranchFormula = "(t^2-s^2)^2*x^2*y^2 - 4*(s^2*x^2+s*t*y^2)*(s^2*y^2+s*t*x^2)";

void branch_formula(Criterion& c) {
  MultiPoly symbolic = cover::branch_discriminant(cover::build_model(cover::chen_hacon_data_symbolic()));
  const auto& ring = symbolic.ring();
  MultiPoly oracle = qpoly::parse_poly(kBranchFormula, ring);
  auto lambda = qpoly::proportionality(symbolic, oracle);
  c.check(lambda.has_value(), "symbolic discriminant is not proportional to the formula");
  if (!lambda) return;
  c.check(*lambda != 0, "lambda is zero");

  RandomParams rp;
  int done = 0;
  while (done < 10) {
    Rat s = rp.next(), t = rp.next();
    if (s == 0 && t == 0) continue;
    ++done;
    auto at = [&](const MultiPoly& f) { return f.substitute("s", s).substitute("t", t); };
    auto special = qpoly::proportionality(at(symbolic), at(oracle));
    if (at(oracle).is_zero()) {
      c.check(at(symbolic).is_zero(), "formula vanishes but discriminant does not");
      continue;
    }
    c.check(special == lambda, "lambda changes at s=" + s.get_str() + " t=" + t.get_str());
    // The specialized model agrees up to its own normalization.
    MultiPoly direct = cover::branch_discriminant(cover::build_model(cover::chen_hacon_data(s, t)));
    auto xy = qpoly::make_ring({"x", "y"});
    MultiPoly formula = cover::chen_hacon_branch_locus(xy, MultiPoly(xy, s), MultiPoly(xy, t));
    c.check(qpoly::proportionality(direct, formula).has_value(),
            "specialized model disagrees at s=" + s.get_str() + " t=" + t.get_str());
  }
}

// ---------------------------------------------------------------- 3
void degeneration_loci(Criterion& c) {
  using cover::Degeneration;
  MultiPoly g = cover::governing_discriminant();
  c.check(g.total_degree() == 24, "governing discriminant degree " + std::to_string(g.total_degree()));
  auto eval = [&](const Rat& s, const Rat& t) {
    std::vector<Rat> pt{s, t};
    return g.evaluate(pt);
  };
  struct Line {
    Rat ds, dt;
    Degeneration kind;
  };
  const std::vector<Line> lines{{1, 0, Degeneration::NonNormal},       {1, 3, Degeneration::NonNormal},
                                {1, -3, Degeneration::NonNormal},      {0, 1, Degeneration::TotallyRamified},
                                {1, 1, Degeneration::TotallyRamified}, {1, -1, Degeneration::TotallyRamified}};
  RandomParams rp;
  for (const auto& line : lines)
    for (int i = 0; i < 20; ++i) {
      Rat k = rp.nonzero();
      Rat s = k * line.ds, t = k * line.dt;
      c.check(eval(s, t) == 0, "discriminant nonzero at s=" + s.get_str() + " t=" + t.get_str());
      c.check(cover::classify_parameters(s, t).kind == line.kind,
              "classification at s=" + s.get_str() + " t=" + t.get_str());
    }
  int off = 0;
  while (off < 20) {
    Rat s = rp.next(), t = rp.next();
    if (on_degeneration_lines(s, t)) continue;
    ++off;
    c.check(eval(s, t) != 0, "discriminant vanishes off the lines");
    c.check(cover::classify_parameters(s, t).kind == Degeneration::General, "off-line point not General");
  }
  // Each of the six lines divides the discriminant exactly.
  auto ring = g.ring();
  MultiPoly s = MultiPoly::variable(ring, "s"), t = MultiPoly::variable(ring, "t");
  for (const auto& line : {s, t, t - s, t + s, t - 3 * s, t + 3 * s})
    c.check(qpoly::divide_exact(g, line).has_value(), "line " + line.to_string() + " does not divide the discriminant");
}

// ---------------------------------------------------------------- 4
bool plane_is_projection_graph(const cover::PlaneComponent& p, const cover::CoverModel& m) {
  for (const auto* f : {&p.z_value, &p.w_value})
    for (const auto& [e, coef] : f->terms())
      if (qpoly::total_degree(e) != 1 || e[2] != 0 || e[3] != 0) return false;
  for (const auto& minor : m.minors.generators())
    if (!minor.substitute("z", p.z_value).substitute("w", p.w_value).is_zero()) return false;
  return true;
}

void local_singularities(Criterion& c) {
  RandomParams rp;
  int done = 0;
  while (done < 10) {
    Rat s = rp.nonzero(), t = rp.nonzero();
    if (on_degeneration_lines(s, t)) continue;
    ++done;
    const std::string at = " at s=" + s.get_str() + " t=" + t.get_str();
    auto a = cover::analyze_base_point(cover::build_model(cover::chen_hacon_data(s, t)), s, t);
    c.check(a.certified(), "uncertified" + at + ": " + a.note);
    if (!a.certified()) continue;
    c.check(*a.singularity == cover::LocalSingularity::OneThird11, "singularity" + at);
    c.check(*a.hilbert == qpoly::HilbertSeries{{1, 2}, 2}, "Hilbert series " + a.hilbert->to_string() + at);
    c.check(*a.singular_locus_dimension == 0, "singular locus dimension" + at);
  }
  for (auto [s, t] : std::vector<std::pair<Rat, Rat>>{{1, 0}, {1, 3}}) {
    const std::string at = " at s=" + s.get_str() + " t=" + t.get_str();
    auto m = cover::build_model(cover::chen_hacon_data(s, t));
    auto cert = cover::decompose_three_planes(m);
    c.check(cert.components.size() == 3, "plane count" + at);
    c.check(cert.intersection_lines == 2, "line count" + at);
    c.check(!cert.field_square.has_value(), "planes not rational" + at);
    for (const auto& p : cert.components)
      c.check(plane_is_projection_graph(p, m), "plane is not a linear graph over (x, y)" + at);
  }
}

// ---------------------------------------------------------------- 5
void counting(Criterion& c) {
  auto blown = chern::blow_up(chern::abelian_surface(chern::polarization_lattice("L", 4)), 4);
  auto nodes = c.within(1, "nodal count", [&] {
    return numerology::zeuthen_segre_count(numerology::pencil_fibration(blown.geometry, 3));
  });
  // e(X) = e(P^1) e(F) + #nodes with e(F) = 2 - 2 * 3.
  c.check(nodes == 12 && nodes == 4 - 2 * (2 - 2 * 3), "nodal members " + std::to_string(nodes));

  auto hyper = c.within(1, "hyperelliptic count", [&] { return numerology::horikawa_count(-4, 0); });
  c.check(hyper.smooth_hyperelliptic == 6, "hyperelliptic members " + std::to_string(hyper.smooth_hyperelliptic));
  for (std::int64_t nu : {1, 2}) {
    auto special = numerology::pencil_consistency(numerology::Polarization::Special, nu);
    c.check(special.horikawa.smooth_hyperelliptic == 6 - nu && special.pass, "special nu=" + std::to_string(nu));
  }
  auto orbits = c.within(1, "orbit count", [&] { return numerology::orbit_count({4, {2}}); });
  // Riemann-Hurwitz for P^1 -> P^1 of degree 4: -2 = 4 * (-2) + b * (4 - 4/2).
  c.check(orbits.branch_points == 3 && orbits.branch_points * 2 == 6, "branch points");
  c.check(orbits.stabilized_elements == 6, "stabilized members " + std::to_string(orbits.stabilized_elements));
}

// ---------------------------------------------------------------- 6
void expect_claims(Criterion& c, const std::string& file) {
  auto script = ledger::load_ledger_script(kLedgers / file);
  auto result = ledger::check_consistency(script.ledger, script.claims);
  c.check(result.pass, file + " does not force its claims");
  for (const auto& o : result.claims)
    c.check(o.status == ledger::ClaimStatus::Forced, file + ": " + o.claim.group.to_string() + " is " +
                                                         std::string(ledger::to_string(o.status)));
}

ledger_fixture::Triple forced(Criterion& c, const ledger::LedgerReport& rep, const std::string& sheaf) {
  ledger_fixture::Triple out{-1, -1, -1};
  for (int i = 0; i < 3; ++i) {
    const auto& iv = rep.sheaf(sheaf).h[static_cast<std::size_t>(i)];
    c.check(iv.is_point(), sheaf + " h" + std::to_string(i) + " = " + iv.to_string());
    if (iv.is_point()) out[static_cast<std::size_t>(i)] = iv.lo;
  }
  return out;
}

void cohomology_chases(Criterion& c) {
  for (const char* f : {"eagon_northcott.ledger", "f_tensor_fdual.ledger", "reducibility.ledger",
                        "tangent_chase.ledger", "sequence_f.ledger"})
    expect_claims(c, f);
  auto report = [](const char* f) { return ledger::load_ledger_script(kLedgers / f).ledger.propagate(); };
  c.check(forced(c, report("eagon_northcott.ledger"), "S3") == ledger_fixture::Triple{2, 0, 0}, "h(S3) != (2,0,0)");
  c.check(forced(c, report("f_tensor_fdual.ledger"), "FFd") == ledger_fixture::Triple{1, 2, 1}, "h(F x F^) != (1,2,1)");
  auto red = report("reducibility.ledger");
  c.check(red.sheaf("FQ").h[0] == ledger::Interval::point(1), "first multiplication dimension");
  c.check(red.sheaf("S2Q").h[0] == ledger::Interval::point(1), "second multiplication dimension");
  auto tangent = forced(c, report("tangent_chase.ledger"), "T_S");
  c.check(tangent[1] == 4 && tangent[2] == 4, "h1, h2 of T_S");

  auto bad = ledger::load_ledger_script(kLedgers / "contradiction.ledger");
  auto result = ledger::check_consistency(bad.ledger, bad.claims);
  c.check(!result.pass, "perturbed claim accepted");
  c.check(result.first_failure.has_value(), "perturbed claim has no failure");
  if (result.first_failure) {
    const auto& o = result.claims[*result.first_failure];
    c.check(o.status == ledger::ClaimStatus::Contradicted, "perturbed claim not contradicted");
    c.check(!o.trace.empty(), "perturbed claim has no conflict trace");
  }
}

// ---------------------------------------------------------------- 7
void chern_checks(Criterion& c) {
  auto lattice = chern::polarization_lattice("L", 4);
  auto abelian = chern::abelian_surface(lattice);
  chern::BundleChern f(2, lattice->basis("L"), 1);
  auto s3 = chern::tensor(chern::symmetric_power(f, 3), chern::dual(chern::wedge2(f)));
  // Roots 2a - b, a, b, 2b - a give c2 = 10 c2(F) - c1(F)^2.
  c.check(s3.c2() == 6 && s3.c2() == 10 * f.c2() - chern::self_intersection(f.c1()), "c2 = " + s3.c2().get_str());
  c.check(chern::riemann_roch(s3, abelian) == 2, "chi = " + chern::riemann_roch(s3, abelian).get_str());

  auto rank2 = chern::Lattice::make({"e1", "e2"}, {{2, 1}, {1, -2}});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-5, 5);
  for (int i = 0; i < 50; ++i) {
    chern::BundleChern b(2, rank2->element({small(rng), small(rng)}), small(rng));
    auto lhs = chern::direct_sum(chern::BundleChern::trivial(rank2),
                                 chern::tensor(chern::symmetric_power(b, 2), chern::dual(chern::wedge2(b))));
    c.check(lhs == chern::tensor(b, chern::dual(b)), "Clebsch-Gordan fails for random input " + std::to_string(i));
    // c2(F x F^) = 4 c2 - c1^2 from the roots a - b, b - a, 0, 0.
    c.check(chern::tensor(b, chern::dual(b)).c2() == 4 * b.c2() - chern::self_intersection(b.c1()),
            "c2 of the endomorphism bundle");
  }

  // Noether: every constructed surface satisfies 12 chi = K^2 + e; a violating
  // one is rejected.
  auto blown = chern::blow_up(abelian, 4);
  auto general = chern::polarization_lattice("K", 5);
  std::vector<chern::SurfaceGeom> surfaces{abelian, blown.geometry, chern::SurfaceGeom(general->basis("K"), 7, 1)};
  for (const auto& sg : surfaces)
    c.check(12 * sg.chi() == sg.canonical_square() + Rat(sg.euler_number()), "Noether fails on a surface");
  bool rejected = false;
  try {
    chern::SurfaceGeom(general->basis("K"), 8, 1);
  } catch (const InconsistentData&) {
    rejected = true;
  }
  c.check(rejected, "surface violating Noether was accepted");
}

// ---------------------------------------------------------------- 8
void canonical_system(Criterion& c) {
  auto d = c.within(1, "canonical check", [] { return cover::canonical_decomposition_check(); });
  // (Xi + Phi)^2 = -3 + 2 * 4 + 0; genus(Phi) = 1 + (0 + Phi.K) / 2 with Phi.K = 4.
  c.check(d.canonical_square == -3 + 2 * 4 + 0, "K^2 = " + d.canonical_square.get_str());
  c.check(d.genus_phi == 1 + (0 + 4) / 2, "genus = " + d.genus_phi.get_str());
  c.check(d.pass, "canonical check did not pass");
}

// ---------------------------------------------------------------- 9
void moduli(Criterion& c) {
  auto tangent = ledger::load_ledger_script(kLedgers / "tangent_chase.ledger").ledger.propagate();
  auto sections = ledger::load_ledger_script(kLedgers / "eagon_northcott.ledger").ledger.propagate();
  numerology::ModuliInputs in;
  in.pencil_sections = sections.sheaf("S3").h[0].lo;
  in.tangent_h1 = tangent.sheaf("T_S").h[1].lo;
  in.embedded_family_dim = tangent.sheaf("N_S").h[0].lo;
  auto m = c.within(1, "moduli assembly", [&] { return numerology::moduli_dimension(in); });
  c.check(m.base == 3 && m.fibre == 1 && m.total == 4, "3 + 1 = " + std::to_string(m.total));
  c.check(m.total == *in.tangent_h1, "h1(T_S) = " + std::to_string(*in.tangent_h1));
  c.check(*in.embedded_family_dim == 3, "h0(N) = " + std::to_string(*in.embedded_family_dim));
  c.check(m.pass(), "moduli cross-checks");
}

// ---------------------------------------------------------------- 10
std::vector<Ideal> bundled_ideals() {
  std::vector<Ideal> out;
  auto r = qpoly::make_ring({"x", "y", "z", "w"});
  auto P = [&](const char* text) { return qpoly::parse_poly(text, r); };
  out.emplace_back(r, std::vector<MultiPoly>{P("x*z - y^2"), P("x*w - y*z"), P("y*w - z^2")});
  for (auto [s, t] : std::vector<std::pair<Rat, Rat>>{{1, 2}, {1, 1}, {0, 1}, {1, 0}, {1, 3}, {2, -5}}) {
    auto m = cover::build_model(cover::chen_hacon_data(s, t));
    out.push_back(m.minors);
    out.push_back(qpoly::jacobian_ideal(m.minors, 2));
  }
  return out;
}

void property_suites(Criterion& c) {
  auto ideals = bundled_ideals();
  for (std::size_t n = 0; n < ideals.size(); ++n) {
    const std::string which = "bundled ideal " + std::to_string(n);
    Ideal gb = qpoly::groebner(ideals[n]);
    const auto& g = gb.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        c.check(qpoly::normal_form(qpoly::s_polynomial(g[i], g[j]), g).is_zero(), which + ": S-polynomial");
    auto hs = qpoly::hilbert_series(ideals[n]).expand(8);
    for (int d = 0; d <= 8; ++d)
      c.check(hs[static_cast<std::size_t>(d)] == oracle::hilbert_function(ideals[n], d),
              which + ": Hilbert function in degree " + std::to_string(d));
  }

  auto xy = qpoly::make_ring({"x", "y"});
  std::mt19937 rng(20240601);
  int checked = 0;
  while (checked < 100) {
    MultiPoly f = oracle::random_poly(rng, xy, {2, 1}, 3);
    MultiPoly g = oracle::random_poly(rng, xy, {2, 1}, 3);
    MultiPoly h = oracle::random_poly(rng, xy, {2, 1}, 3);
    if (f.degree_in("x") < 1 || g.degree_in("x") < 1 || h.degree_in("x") < 1) continue;
    ++checked;
    c.check(qpoly::resultant(f * g, h, "x") == qpoly::resultant(f, h, "x") * qpoly::resultant(g, h, "x"),
            "resultant multiplicativity, instance " + std::to_string(checked));
  }

  auto zr = qpoly::make_ring({"z"});
  MultiPoly z = MultiPoly::variable(zr, "z");
  for (int i = 0; i < 100; ++i) {
    Rat lead = oracle::random_rat(rng, 5, true);
    Rat a = oracle::random_rat(rng, 5), b = oracle::random_rat(rng, 5), d = oracle::random_rat(rng, 5);
    if (i % 2 == 0) b = a;
    MultiPoly f = (z - MultiPoly(zr, a)) * (z - MultiPoly(zr, b)) * (z - MultiPoly(zr, d)) * lead;
    oracle::UPoly coeffs(4, 0);
    for (const auto& [e, coef] : f.terms()) coeffs[static_cast<std::size_t>(e[0])] = coef;
    c.check(qpoly::discriminant(f, "z").is_zero() == oracle::has_repeated_factor(coeffs),
            "repeated-root detection, instance " + std::to_string(i));
  }

  std::mt19937_64 rng64(1234);
  for (int n = 0; n < 100; ++n) {
    auto inst = ledger_fixture::random_instance(rng64, 1 + n % 5);
    ledger_fixture::reveal(inst, rng64, 0.35);
    auto report = inst.ledger.propagate();
    c.check(!report.contradiction(), "hidden-truth instance " + std::to_string(n) + " reported a contradiction");
    if (report.contradiction()) continue;
    for (const auto& s : report.sheaves)
      for (std::size_t i = 0; i < 3; ++i)
        c.check(s.h[i].contains(inst.truth.at(s.name)[i]),
                "hidden-truth instance " + std::to_string(n) + " excludes the truth for " + s.name);
  }
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ms < 10 ? "%.3f ms" : "%.0f ms", ms);
  return buf;
}

}  // namespace

int main() {
  const std::vector<Entry> entries{
      {1, "cover invariants (2,2,5,1), (5,2,20,4), (2,3,0,0)", 1e3, "1 ms each", invariants},
      {2, "branch discriminant proportional to the closed formula", 5e3, "5 s", branch_formula},
      {3, "degeneration loci and six-line certificate", 2e3, "2 s", degeneration_loci},
      {4, "local singularity certificates", 10e3, "10 s", local_singularities},
      {5, "nodal, hyperelliptic and orbit counts", 1e3, "1 ms each", counting},
      {6, "cohomology chases and contradiction regression", 1e3, "1 s", cohomology_chases},
      {7, "Chern cross-checks", 1e3, "1 s", chern_checks},
      {8, "canonical system K^2 = 5, genus 3", 1e3, "1 ms", canonical_system},
      {9, "moduli 3 + 1 = 4 = h1(T_S), h0(N) = 3", 1e3, "1 ms for the assembly", moduli},
      {10, "property suites", 60e3, "60 s", property_suites},
  };
  int failed = 0;
  for (const auto& entry : entries) {
    Criterion c;
    auto start = Clock::now();
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    double ms = elapsed_ms(start);
    if (ms > entry.limit_ms) c.check(false, "criterion took " + format_ms(ms));
    const bool pass = c.failures().empty();
    failed += pass ? 0 : 1;
    std::printf("%s  criterion %2d: %s  [%d checks, %s, limit %s]\n", pass ? "PASS" : "FAIL", entry.number,
                entry.title.c_str(), c.checks(), format_ms(ms).c_str(), entry.limit_text.c_str());
    for (std::size_t k = 0; k < c.failures().size() && k < 10; ++k)
      std::printf("        %s\n", c.failures()[k].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
