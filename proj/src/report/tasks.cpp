#include <chrono>
#include <functional>

#include "tschirn/chern/chern.hpp"
#include "tschirn/cover/cover.hpp"
#include "tschirn/error.hpp"
#include "tschirn/ledger/ledger.hpp"
#include "tschirn/qpoly/elimination.hpp"
#include "tschirn/report/report.hpp"

namespace tschirn::report {

namespace {

using numerology::Polarization;

std::string rat_string(const Rat& q) { return q.get_str(); }

Json tagged(Json value, Provenance p) { return Json{{"value", std::move(value)}, {"provenance", to_string(p)}}; }

Json checked(Json value, Json expected, Provenance p) {
  Json out = tagged(std::move(value), p);
  out["expected"] = std::move(expected);
  return out;
}

bool matches(const Json& entry) { return !entry.contains("expected") || entry["value"] == entry["expected"]; }

// Pass when every checked value matches, fail naming the first mismatch.
void settle(TaskResult& r) {
  for (const auto& [name, entry] : r.values.items())
    if (!matches(entry)) {
      r.status = Status::Fail;
      r.reason = name + " = " + entry["value"].dump() + ", expected " + entry["expected"].dump();
      return;
    }
  r.status = Status::Pass;
}

Json cohomology(const std::array<std::int64_t, 3>& h) { return Json::array({h[0], h[1], h[2]}); }

// The six lines of the parameter plane containing (s, t).
Json degeneration_lines(const Rat& s, const Rat& t) {
  Json lines = Json::array();
  if (s == 0) lines.push_back("s=0");
  if (t == 0) lines.push_back("t=0");
  if (s == t) lines.push_back("s=t");
  if (s == -t) lines.push_back("s=-t");
  if (t == 3 * s) lines.push_back("t=3s");
  if (t == -3 * s) lines.push_back("t=-3s");
  return lines;
}

std::string expected_singularity(cover::Degeneration d) {
  return d == cover::Degeneration::NonNormal ? to_string(cover::LocalSingularity::ThreePlanes)
                                             : to_string(cover::LocalSingularity::OneThird11);
}

void task_classify(const Scenario& sc, TaskResult& r) {
  auto cls = cover::classify_parameters(sc.s, sc.t);
  const auto& g = cover::governing_discriminant();
  std::vector<Rat> point{sc.s, sc.t};
  Rat value = g.evaluate(point);
  r.values["class"] = tagged(cls.to_string(), Provenance::Paper);
  r.values["governing_vanishes"] =
      checked(value == 0, cls.kind != cover::Degeneration::General, Provenance::Derived);
  r.certificates["governing_discriminant"] = g.to_string();
  r.certificates["governing_value"] = rat_string(value);
  r.certificates["lines"] = degeneration_lines(sc.s, sc.t);
  settle(r);
}

void task_local_singularity(const Scenario& sc, TaskResult& r) {
  auto model = cover::build_model(cover::chen_hacon_data(sc.s, sc.t));
  auto a = cover::analyze_base_point(model, sc.s, sc.t);
  Json minors = Json::array();
  for (const auto& g : model.minors.generators()) minors.push_back(g.to_string());
  r.certificates["minors"] = minors;
  r.certificates["degeneration"] = a.degeneration.to_string();
  if (a.hilbert) {
    r.certificates["hilbert_numerator"] = a.hilbert->numerator;
    r.certificates["hilbert_ambient_vars"] = a.hilbert->ambient_vars;
    r.certificates["hilbert_series"] = a.hilbert->to_string();
  }
  if (a.singular_locus_dimension) r.certificates["singular_locus_dimension"] = *a.singular_locus_dimension;
  if (a.planes) {
    Json planes = Json::array();
    for (const auto& p : a.planes->components)
      planes.push_back({{"z", p.z_value.to_string()}, {"w", p.w_value.to_string()}});
    r.certificates["planes"] = planes;
    r.certificates["pair_dimensions"] = a.planes->pair_dimensions;
    r.certificates["intersection_lines"] = a.planes->intersection_lines;
    r.certificates["field_square"] =
        a.planes->field_square ? Json(rat_string(*a.planes->field_square)) : Json(nullptr);
  }
  if (!a.certified()) {
    r.status = Status::Uncertified;
    r.reason = a.note;
    return;
  }
  r.values["singularity"] =
      checked(to_string(*a.singularity), expected_singularity(a.degeneration.kind), Provenance::Paper);
  if (*a.singularity != cover::LocalSingularity::ThreePlanes) {
    auto res = cover::resolution_of(*a.singularity);
    r.values["exceptional_curves"] = tagged(res.exceptional_self_intersections, Provenance::Paper);
    r.values["negligible"] = tagged(res.negligible, Provenance::Paper);
  }
  settle(r);
}

const Rat& symbolic_lambda() {
  static const Rat lambda = [] {
    auto model = cover::build_model(cover::chen_hacon_data_symbolic());
    auto branch = cover::branch_discriminant(model);
    const auto& ring = branch.ring();
    auto formula = cover::chen_hacon_branch_locus(ring, qpoly::MultiPoly::variable(ring, "s"),
                                                  qpoly::MultiPoly::variable(ring, "t"));
    auto l = qpoly::proportionality(branch, formula);
    if (!l || *l == 0) throw InconsistentData("symbolic branch polynomial is not proportional to the formula");
    return *l;
  }();
  return lambda;
}

void task_branch(const Scenario& sc, TaskResult& r) {
  auto cls = cover::classify_parameters(sc.s, sc.t);
  auto model = cover::build_model(cover::chen_hacon_data(sc.s, sc.t));
  auto branch = cover::branch_discriminant(model);
  const auto& ring = branch.ring();
  auto formula = cover::chen_hacon_branch_locus(ring, qpoly::MultiPoly(ring, sc.s), qpoly::MultiPoly(ring, sc.t));
  auto lambda = qpoly::proportionality(branch, formula);
  r.certificates["cubic"] = cover::eliminate_cubic(model).to_string();
  r.certificates["branch"] = branch.to_string();
  r.certificates["formula"] = formula.to_string();
  r.certificates["validation"] = "the cubic is validated only through its discriminant";
  r.values["symbolic_lambda"] = tagged(rat_string(symbolic_lambda()), Provenance::Derived);
  r.values["proportional"] = checked(lambda.has_value() && *lambda != 0, true, Provenance::Paper);
  if (lambda) {
    r.values["lambda"] = tagged(rat_string(*lambda), Provenance::Derived);
    r.certificates["lambda"] = rat_string(*lambda);
  }
  bool shape = true;
  for (const auto& [e, c] : branch.terms()) shape = shape && e[0] + e[1] == 4 && e[0] % 2 == 0;
  r.values["quartic_shape"] = checked(shape, true, Provenance::Paper);
  if (cls.kind != cover::Degeneration::NonNormal) {
    auto root = qpoly::poly_square_root(branch);
    bool square = std::holds_alternative<qpoly::SquareRoot>(root);
    r.values["branch_is_square"] =
        checked(square, cls.kind == cover::Degeneration::TotallyRamified, Provenance::Paper);
    if (square) {
      const auto& sr = std::get<qpoly::SquareRoot>(root);
      r.certificates["square_root"] = sr.root.to_string();
      r.certificates["square_constant"] = rat_string(sr.constant);
    }
  }
  settle(r);
}

Json miranda_certificate(const chern::SurfaceGeom& y, const chern::CohomologyTriple& h_base,
                         const chern::BundleChern& e, const chern::CohomologyTriple& h_bundle) {
  return {{"base_canonical_square", rat_string(y.canonical_square())},
          {"c1_squared", rat_string(chern::self_intersection(e.c1()))},
          {"c1_dot_canonical", rat_string(chern::pair(e.c1(), y.canonical()))},
          {"c2", rat_string(e.c2())},
          {"h_base", cohomology(h_base)},
          {"h_bundle", cohomology(h_bundle)}};
}

void put_invariants(TaskResult& r, const std::string& prefix, const chern::CoverInvariants& inv,
                    const std::array<std::int64_t, 4>& expected) {
  r.values[prefix + "pg"] = checked(inv.geometric_genus, expected[0], Provenance::Paper);
  r.values[prefix + "q"] = checked(inv.irregularity, expected[1], Provenance::Paper);
  r.values[prefix + "K2"] = checked(rat_string(inv.canonical_square), std::to_string(expected[2]), Provenance::Paper);
  r.values[prefix + "chi"] = checked(inv.chi, expected[3], Provenance::Paper);
}

void task_invariants(const Scenario& sc, TaskResult& r) {
  auto lattice = chern::polarization_lattice("L", 4);
  auto abelian = chern::abelian_surface(lattice);
  const chern::CohomologyTriple h_abelian{1, 2, 1};

  if (sc.polarization == Polarization::Product) {
    chern::BundleChern e = chern::BundleChern(2, lattice->zero(), 0);
    const chern::CohomologyTriple h_e{0, 1, 1};
    put_invariants(r, "normalization_", chern::triple_cover_invariants(abelian, h_abelian, e, h_e), {2, 3, 0, 0});
    r.certificates["normalization"] = miranda_certificate(abelian, h_abelian, e, h_e);
    r.status = Status::Skipped;
    r.reason = "product polarization: the normalization has K^2 = 0 and is not of general type";
    return;
  }
  if (cover::classify_parameters(sc.s, sc.t).kind == cover::Degeneration::NonNormal) {
    r.status = Status::Skipped;
    r.reason = "non-normal total space";
    return;
  }
  chern::BundleChern e(2, lattice->basis("L"), 1);
  const chern::CohomologyTriple h_e{0, 0, 1};
  put_invariants(r, "", chern::triple_cover_invariants(abelian, h_abelian, e, h_e), {2, 2, 5, 1});
  r.certificates["surface"] = miranda_certificate(abelian, h_abelian, e, h_e);

  // The cover of the abelian surface blown up in the four base points.
  auto blown = chern::blow_up(abelian, 4);
  chern::NumClass lambda = blown.lattice.lattice->zero();
  for (const auto& ex : blown.lattice.exceptional) lambda += ex;
  auto l = chern::BundleChern::line_bundle(blown.lattice.pull_back(lattice->basis("L")));
  auto e_sharp = chern::dual(chern::twist(chern::direct_sum(l, l), -lambda));
  const chern::CohomologyTriple h_sharp{0, 0, 4};
  put_invariants(r, "blown_up_", chern::triple_cover_invariants(blown.geometry, h_abelian, e_sharp, h_sharp),
                 {5, 2, 20, 4});
  r.certificates["blown_up"] = miranda_certificate(blown.geometry, h_abelian, e_sharp, h_sharp);
  settle(r);
}

void task_numerology(const Scenario& sc, TaskResult& r) {
  if (sc.polarization == Polarization::Product) {
    r.status = Status::Skipped;
    r.reason = "product polarization: no genus-3 pencil count";
    return;
  }
  const std::int64_t nu = effective_nu(sc);
  auto blown = chern::blow_up(chern::abelian_surface(chern::polarization_lattice("L", 4)), 4);
  auto fibration = numerology::pencil_fibration(blown.geometry, 3);
  r.values["nodal_members"] = checked(numerology::zeuthen_segre_count(fibration), 12, Provenance::Paper);
  r.certificates["fibration"] = {{"c2", fibration.c2_total},
                                 {"base_euler", fibration.base_euler},
                                 {"fiber_euler", fibration.fiber_euler},
                                 {"nodal_delta", fibration.nodal_delta}};

  auto consistency = numerology::pencil_consistency(sc.polarization, nu);
  r.values["hyperelliptic_members"] =
      checked(consistency.horikawa.smooth_hyperelliptic, 6 - nu, Provenance::Paper);
  r.values["reducible_members"] = tagged(nu, nu == 0 ? Provenance::Trivial : Provenance::Paper);
  r.values["branch_points"] = checked(consistency.orbits.branch_points, 3, Provenance::Paper);
  r.values["stabilized_members"] = checked(consistency.orbits.stabilized_elements, 6, Provenance::Paper);
  r.values["pencil_consistent"] = checked(consistency.pass, true, Provenance::Derived);
  r.certificates["horikawa"] = {{"canonical_square", rat_string(blown.geometry.canonical_square())},
                                {"chi", rat_string(blown.geometry.chi())},
                                {"torsion_degree", consistency.horikawa.torsion_degree}};
  r.certificates["orbit"] = {{"group_order", 4}, {"fiber_size", 2}};
  if (!consistency.note.empty()) r.certificates["note"] = consistency.note;

  auto orbits = numerology::two_division_orbits();
  r.values["non_base_orbits"] = checked(orbits.orbits.size() - 1, 3, Provenance::Paper);
  r.values["base_orbit"] = checked(orbits.orbits[orbits.base_orbit], Json::array({0, 1, 2, 3}), Provenance::Paper);
  r.certificates["two_division_orbits"] = orbits.orbits;
  settle(r);
}

void task_canonical(const Scenario&, TaskResult& r) {
  auto c = cover::canonical_decomposition_check();
  r.values["canonical_square"] = checked(rat_string(c.canonical_square), "5", Provenance::Paper);
  r.values["genus_phi"] = checked(c.genus_phi.get_si(), 3, Provenance::Paper);
  r.values["genus_xi"] = checked(c.genus_xi.get_si(), 0, Provenance::Trivial);
  r.certificates["gram"] = Json::array({Json::array({-3, 4}), Json::array({4, 0})});
  r.certificates["canonical_coefficients"] = Json::array({1, 1});
  r.certificates["chi"] = 1;
  settle(r);
}

std::filesystem::path resolve_ledger(const Scenario& sc, const std::string& file, const RunOptions& options) {
  std::filesystem::path p(file);
  if (p.is_absolute()) return p;
  if (!sc.base_dir.empty() && std::filesystem::exists(sc.base_dir / p)) return sc.base_dir / p;
  std::filesystem::path dir = options.ledger_dir.empty() ? default_ledger_dir() : options.ledger_dir;
  return dir / p;
}

std::string trace_line(const ledger::Ledger& l, ledger::RuleId id) { return l.describe(id); }

void fill_ledger(const ledger::LedgerScript& script, TaskResult& r) {
  auto consistency = ledger::check_consistency(script.ledger, script.claims);
  Json claims = Json::array();
  for (const auto& outcome : consistency.claims) {
    Json trace = Json::array();
    for (auto id : outcome.trace) trace.push_back(trace_line(script.ledger, id));
    claims.push_back({{"group", outcome.claim.group.to_string()},
                      {"claimed", outcome.claim.value},
                      {"derived", outcome.derived.to_string()},
                      {"status", ledger::to_string(outcome.status)},
                      {"trace", trace}});
    r.values[outcome.claim.group.to_string()] =
        checked(outcome.derived.to_string(), std::to_string(outcome.claim.value), Provenance::Derived);
  }
  r.certificates["claims"] = claims;
  if (consistency.report.conflict) {
    Json rules = Json::array();
    for (auto id : consistency.report.conflict->rules) rules.push_back(trace_line(script.ledger, id));
    r.certificates["conflict"] = {{"where", consistency.report.conflict->where}, {"rules", rules}};
  }
  if (consistency.pass) {
    r.status = Status::Pass;
    return;
  }
  r.status = Status::Fail;
  if (consistency.report.conflict)
    r.reason = "contradiction at " + consistency.report.conflict->where;
  else if (consistency.first_failure)
    r.reason = "claim " + consistency.claims[*consistency.first_failure].claim.group.to_string() + " is " +
               std::string(ledger::to_string(consistency.claims[*consistency.first_failure].status));
}

void task_ledger(const Scenario& sc, const std::string& file, const RunOptions& options, TaskResult& r) {
  auto path = resolve_ledger(sc, file, options);
  r.certificates["script"] = path.filename().string();
  fill_ledger(ledger::load_ledger_script(path), r);
}

std::int64_t forced_value(const ledger::LedgerReport& rep, const std::string& sheaf, int degree) {
  const auto& h = rep.sheaf(sheaf).h[static_cast<std::size_t>(degree)];
  if (!h.is_point()) throw InconsistentData(sheaf + " h" + std::to_string(degree) + " is not forced: " + h.to_string());
  return h.lo;
}

void task_moduli(const Scenario& sc, const RunOptions& options, TaskResult& r) {
  if (sc.polarization == Polarization::Product) {
    r.status = Status::Skipped;
    r.reason = "product polarization: not of general type";
    return;
  }
  auto tangent = ledger::load_ledger_script(resolve_ledger(sc, "tangent_chase.ledger", options));
  auto tangent_report = tangent.ledger.propagate();
  auto sections = ledger::load_ledger_script(resolve_ledger(sc, "eagon_northcott.ledger", options));
  auto sections_report = sections.ledger.propagate();
  if (tangent_report.conflict || sections_report.conflict)
    throw InconsistentData("a bundled cohomology chase is contradictory");

  const std::int64_t h0 = forced_value(sections_report, "S3", 0);
  // The same count from Riemann-Roch, given that the higher groups vanish.
  auto lattice = chern::polarization_lattice("L", 4);
  auto abelian = chern::abelian_surface(lattice);
  chern::BundleChern f(2, lattice->basis("L"), 1);
  Rat chi = chern::riemann_roch(chern::tensor(chern::symmetric_power(f, 3), chern::dual(chern::wedge2(f))), abelian);

  numerology::ModuliInputs in;
  in.polarization_family_dim = 3;
  in.pencil_sections = h0;
  in.tangent_h1 = forced_value(tangent_report, "T_S", 1);
  in.embedded_family_dim = forced_value(tangent_report, "N_S", 0);
  auto m = numerology::moduli_dimension(in);
  r.values["dimension"] = checked(m.total, 4, Provenance::Paper);
  r.values["polarization_family"] = tagged(m.base, Provenance::Paper);
  r.values["fibre"] = checked(m.fibre, 1, Provenance::Derived);
  r.values["sections"] = checked(h0, 2, Provenance::Paper);
  r.values["sections_chi"] = checked(rat_string(chi), std::to_string(h0), Provenance::Derived);
  r.values["tangent_h1"] = checked(*in.tangent_h1, m.total, Provenance::Paper);
  r.values["tangent_h2"] = checked(forced_value(tangent_report, "T_S", 2), 4, Provenance::Paper);
  r.values["normal_h0"] = checked(*in.embedded_family_dim, m.base, Provenance::Paper);
  r.certificates["sum"] = Json::array({m.base, m.fibre});
  settle(r);
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Uncertified: return "uncertified";
    case Status::Skipped: return "skipped";
  }
  return "";
}

Status parse_status(std::string_view text) {
  for (auto s : {Status::Pass, Status::Fail, Status::Uncertified, Status::Skipped})
    if (to_string(s) == text) return s;
  throw ParseError("unknown status '" + std::string(text) + "'");
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "";
}

TaskResult run_task(const Scenario& scenario, const std::string& task, const RunOptions& options) {
  TaskResult r;
  r.task = task;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (task == "classify")
      task_classify(scenario, r);
    else if (task == "local-singularity")
      task_local_singularity(scenario, r);
    else if (task == "branch")
      task_branch(scenario, r);
    else if (task == "invariants")
      task_invariants(scenario, r);
    else if (task == "numerology")
      task_numerology(scenario, r);
    else if (task == "canonical-check")
      task_canonical(scenario, r);
    else if (task == "moduli")
      task_moduli(scenario, options, r);
    else if (task.rfind("ledger:", 0) == 0)
      task_ledger(scenario, task.substr(7), options, r);
    else
      throw ParseError("unknown task '" + task + "'");
  } catch (const ParseError&) {
    throw;
  } catch (const UndeclaredSymbol&) {
    throw;
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.reason = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace tschirn::report
