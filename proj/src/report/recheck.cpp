#include <algorithm>

#include "tschirn/cover/cover.hpp"
#include "tschirn/error.hpp"
#include "tschirn/ledger/ledger.hpp"
#include "tschirn/qpoly/ideal.hpp"
#include "tschirn/report/report.hpp"

namespace tschirn::report {

namespace {

using qpoly::MultiPoly;

// Verdict rebuilt from certificates; `problems` collects every disagreement.
class Verifier {
 public:
  explicit Verifier(const Json& task) : task_(task) {}

  const Json& cert(const std::string& key) const {
    if (!task_.at("certificates").contains(key)) throw ParseError("missing certificate '" + key + "'");
    return task_["certificates"][key];
  }
  bool has_cert(const std::string& key) const { return task_.at("certificates").contains(key); }

  // The reported value must equal what the certificates imply.
  void value_is(const std::string& name, const Json& recomputed) {
    const Json& values = task_.at("values");
    if (!values.contains(name)) {
      problems_.push_back("missing value " + name);
      return;
    }
    if (values[name]["value"] != recomputed)
      problems_.push_back(name + ": reported " + values[name]["value"].dump() + ", certificates give " +
                          recomputed.dump());
  }
  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }

  // Pass iff every checked value matches its expectation and nothing above
  // disagreed.
  Status verdict() const {
    if (!problems_.empty()) return Status::Fail;
    for (const auto& [name, v] : task_.at("values").items())
      if (v.contains("expected") && v["value"] != v["expected"]) return Status::Fail;
    return Status::Pass;
  }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  const Json& task_;
  std::vector<std::string> problems_;
};

Rat rat(const Json& j) { return j.is_number_integer() ? Rat(j.get<long>()) : qpoly::parse_rat(j.get<std::string>()); }

std::string str(const Rat& q) { return q.get_str(); }

void check_classify(Verifier& v, const Rat& s, const Rat& t) {
  Json lines = Json::array();
  if (s == 0) lines.push_back("s=0");
  if (t == 0) lines.push_back("t=0");
  if (s == t) lines.push_back("s=t");
  if (s == -t) lines.push_back("s=-t");
  if (t == 3 * s) lines.push_back("t=3s");
  if (t == -3 * s) lines.push_back("t=-3s");
  v.require(v.cert("lines") == lines, "degeneration lines do not match (s, t)");
  auto ring = qpoly::make_ring({"s", "t"});
  MultiPoly g = qpoly::parse_poly(v.cert("governing_discriminant").get<std::string>(), ring);
  std::vector<Rat> point{s, t};
  Rat value = g.evaluate(point);
  v.require(str(value) == v.cert("governing_value").get<std::string>(), "governing value does not evaluate");
  v.value_is("governing_vanishes", value == 0);
  // The class follows from the lines alone.
  std::string cls = "General";
  for (const auto& l : lines)
    if (l == "t=0" || l == "t=3s" || l == "t=-3s") cls = "NonNormal(" + l.get<std::string>() + ")";
  if (cls == "General" && !lines.empty()) cls = "TotallyRamified(" + lines.front().get<std::string>() + ")";
  v.value_is("class", cls);
}

void check_local(Verifier& v) {
  if (v.has_cert("planes")) {
    std::optional<Rat> d;
    if (!v.cert("field_square").is_null()) d = rat(v.cert("field_square"));
    auto ring = qpoly::make_ring(d ? std::vector<std::string>{"x", "y", "z", "w", "r"}
                                   : std::vector<std::string>{"x", "y", "z", "w"});
    std::vector<MultiPoly> field;
    if (d) field.push_back(MultiPoly::variable(ring, "r").pow(2) - MultiPoly(ring, *d));
    std::vector<cover::PlaneComponent> planes;
    for (const auto& p : v.cert("planes")) {
      MultiPoly z = qpoly::parse_poly(p.at("z").get<std::string>(), ring);
      MultiPoly w = qpoly::parse_poly(p.at("w").get<std::string>(), ring);
      planes.push_back({z, w, qpoly::Ideal(ring, {MultiPoly::variable(ring, "z") - z, MultiPoly::variable(ring, "w") - w})});
    }
    for (const auto& m : v.cert("minors")) {
      MultiPoly g = qpoly::parse_poly(m.get<std::string>(), ring);
      for (const auto& p : planes) {
        MultiPoly on = g.substitute("z", p.z_value).substitute("w", p.w_value);
        v.require(qpoly::normal_form(on, field).is_zero(), "minor " + m.get<std::string>() + " does not vanish on a plane");
      }
    }
    try {
      auto cert = cover::certify_three_planes(planes, d);
      v.require(Json(cert.pair_dimensions) == v.cert("pair_dimensions"), "pair dimensions differ");
      v.require(cert.intersection_lines == v.cert("intersection_lines").get<int>(), "line count differs");
      v.value_is("singularity", "three planes");
    } catch (const DecompositionError& e) {
      v.require(false, e.what());
    }
    return;
  }
  const bool cone = v.cert("hilbert_numerator") == Json::array({1, 2}) && v.cert("hilbert_ambient_vars") == 2 &&
                    v.cert("singular_locus_dimension") == 0;
  v.require(cone, "Hilbert series and singular locus are not those of a cone over a twisted cubic");
  v.value_is("singularity", "1/3(1,1)");
}

void check_branch(Verifier& v, const Rat& s, const Rat& t) {
  auto ring = qpoly::make_ring({"x", "y"});
  MultiPoly branch = qpoly::parse_poly(v.cert("branch").get<std::string>(), ring);
  MultiPoly formula = qpoly::parse_poly(v.cert("formula").get<std::string>(), ring);
  v.require(formula == cover::chen_hacon_branch_locus(ring, MultiPoly(ring, s), MultiPoly(ring, t)),
            "formula certificate is not the branch formula at (s, t)");
  bool proportional = v.has_cert("lambda") && rat(v.cert("lambda")) != 0 &&
                      branch == formula * rat(v.cert("lambda"));
  v.value_is("proportional", proportional);
  bool shape = true;
  for (const auto& [e, c] : branch.terms()) shape = shape && e[0] + e[1] == 4 && e[0] % 2 == 0;
  v.value_is("quartic_shape", shape);
  if (v.has_cert("square_root")) {
    MultiPoly root = qpoly::parse_poly(v.cert("square_root").get<std::string>(), ring);
    v.require(branch == root * root * rat(v.cert("square_constant")), "square-root certificate does not square");
    v.value_is("branch_is_square", true);
  }
}

void check_miranda(Verifier& v, const std::string& cert_name, const std::string& prefix) {
  const Json& c = v.cert(cert_name);
  Rat k2 = 3 * rat(c.at("base_canonical_square")) - 4 * rat(c.at("c1_dot_canonical")) + 2 * rat(c.at("c1_squared")) -
           3 * rat(c.at("c2"));
  const Json &hb = c.at("h_base"), &he = c.at("h_bundle");
  std::int64_t h[3];
  for (int i = 0; i < 3; ++i) h[i] = hb[i].get<std::int64_t>() + he[i].get<std::int64_t>();
  v.value_is(prefix + "K2", str(k2));
  v.value_is(prefix + "pg", h[2]);
  v.value_is(prefix + "q", h[1]);
  v.value_is(prefix + "chi", h[0] - h[1] + h[2]);
}

void check_numerology(Verifier& v, std::int64_t nu) {
  const Json& f = v.cert("fibration");
  std::int64_t excess = f.at("c2").get<std::int64_t>() - f.at("base_euler").get<std::int64_t>() * f.at("fiber_euler").get<std::int64_t>();
  v.require(excess % f.at("nodal_delta").get<std::int64_t>() == 0, "nodal count is not integral");
  v.value_is("nodal_members", excess / f.at("nodal_delta").get<std::int64_t>());
  const Json& hk = v.cert("horikawa");
  Rat torsion = rat(hk.at("canonical_square")) - 3 * rat(hk.at("chi")) + 10;
  v.require(str(torsion) == std::to_string(hk.at("torsion_degree").get<std::int64_t>()), "torsion degree differs");
  v.value_is("hyperelliptic_members", hk.at("torsion_degree").get<std::int64_t>() - nu);
  std::int64_t n = v.cert("orbit").at("group_order"), size = v.cert("orbit").at("fiber_size");
  v.require((2 * n - 2) % (n - size) == 0, "no integral branch-point count");
  std::int64_t b = (2 * n - 2) / (n - size);
  v.value_is("branch_points", b);
  v.value_is("stabilized_members", b * size);
  v.value_is("pencil_consistent", b * size == hk.at("torsion_degree").get<std::int64_t>());
  // Orbits must be the cosets p xor {0, 1, 2, 3} and cover all 16 points.
  std::vector<int> covered(16, 0);
  for (const auto& o : v.cert("two_division_orbits")) {
    int base = o.at(0).get<int>() & ~3;
    v.require(o == Json::array({base, base | 1, base | 2, base | 3}), "orbit is not a translate coset");
    for (const auto& p : o) covered.at(p.get<std::size_t>())++;
  }
  for (int c : covered) v.require(c == 1, "orbits do not partition the 16 points");
  v.value_is("non_base_orbits", v.cert("two_division_orbits").size() - 1);
}

void check_canonical(Verifier& v) {
  const Json& g = v.cert("gram");
  const Json& k = v.cert("canonical_coefficients");
  auto dot = [&](const std::vector<long>& a, const std::vector<long>& b) {
    long acc = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) acc += a[i] * g[i][j].get<long>() * b[j];
    return acc;
  };
  std::vector<long> kv{k[0].get<long>(), k[1].get<long>()}, xi{1, 0}, phi{0, 1};
  v.value_is("canonical_square", std::to_string(dot(kv, kv)));
  v.value_is("genus_phi", 1 + (dot(phi, phi) + dot(phi, kv)) / 2);
  v.value_is("genus_xi", 1 + (dot(xi, xi) + dot(xi, kv)) / 2);
}

ledger::Interval parse_interval(const std::string& s) {
  if (s.empty() || s.front() != '[') return ledger::Interval::point(std::stoll(s));
  auto comma = s.find(',');
  ledger::Interval out;
  out.lo = std::stoll(s.substr(1, comma - 1));
  std::string hi = s.substr(comma + 2, s.size() - comma - 3);
  if (hi != "inf") out.hi = std::stoll(hi);
  return out;
}

void check_ledger(Verifier& v) {
  for (const auto& c : v.cert("claims")) {
    auto derived = parse_interval(c.at("derived").get<std::string>());
    std::int64_t claimed = c.at("claimed");
    std::string status = c.at("status");
    std::string expect = !derived.contains(claimed) || derived.lo > derived.hi.value_or(derived.lo)
                             ? "contradicted"
                             : derived.is_point() ? "forced" : "not forced";
    if (v.has_cert("conflict")) expect = status == "forced" ? "forced" : "contradicted";
    v.require(status == expect, c.at("group").get<std::string>() + " reported " + status + ", derived interval gives " + expect);
    v.require(status == "not forced" || !c.at("trace").empty(), "claim without a trace");
    v.value_is(c.at("group").get<std::string>(), c.at("derived"));
  }
  v.require(!v.has_cert("conflict"), "ledger is contradictory");
}

void check_moduli(Verifier& v) {
  const Json& sum = v.cert("sum");
  std::int64_t total = sum[0].get<std::int64_t>() + sum[1].get<std::int64_t>();
  v.value_is("dimension", total);
  v.value_is("polarization_family", sum[0]);
  v.value_is("fibre", sum[1]);
}

}  // namespace

bool RecheckResult::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const RecheckEntry& e) { return e.consistent; });
}

RecheckResult recheck(const Json& report) {
  RecheckResult out;
  const Json& sc = report.at("scenario");
  const bool has_params = sc.contains("s");
  const Rat s = has_params ? rat(sc["s"]) : Rat(0), t = has_params ? rat(sc["t"]) : Rat(0);
  std::int64_t nu = 0;
  if (has_params && sc.at("polarization") == "special") nu = sc["nu"].is_null() ? 2 : sc["nu"].get<std::int64_t>();

  for (const auto& task : report.at("tasks")) {
    RecheckEntry e;
    e.task = task.at("task");
    e.reported = parse_status(task.at("status").get<std::string>());
    if (e.reported == Status::Skipped || e.reported == Status::Uncertified) {
      e.consistent = !task.value("reason", std::string()).empty();
      e.detail = e.consistent ? "reason recorded" : "no reason recorded";
      out.entries.push_back(std::move(e));
      continue;
    }
    Verifier v(task);
    try {
      if (e.task == "classify")
        check_classify(v, s, t);
      else if (e.task == "local-singularity")
        check_local(v);
      else if (e.task == "branch")
        check_branch(v, s, t);
      else if (e.task == "invariants") {
        check_miranda(v, "surface", "");
        check_miranda(v, "blown_up", "blown_up_");
      } else if (e.task == "numerology")
        check_numerology(v, nu);
      else if (e.task == "canonical-check")
        check_canonical(v);
      else if (e.task == "moduli")
        check_moduli(v);
      else if (e.task.rfind("ledger:", 0) == 0)
        check_ledger(v);
      else
        v.require(false, "unknown task");
    } catch (const std::exception& ex) {
      v.require(false, std::string("malformed certificate: ") + ex.what());
    }
    Status verdict = v.verdict();
    // A failing task is consistent when the certificates also fail it.
    e.consistent = verdict == e.reported;
    if (!v.problems().empty())
      e.detail = v.problems().front();
    else
      e.detail = "verdict " + std::string(to_string(verdict)) + " reproduced";
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace tschirn::report
