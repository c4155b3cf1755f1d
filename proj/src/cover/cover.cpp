#include "tschirn/cover/cover.hpp"

#include <algorithm>
#include <set>

#include "tschirn/chern/chern.hpp"
#include "tschirn/error.hpp"

namespace tschirn::cover {

using qpoly::Exponents;
using qpoly::Int;
using qpoly::make_ring;

namespace {

MultiPoly var(const Ring& r, std::string_view name) { return MultiPoly::variable(r, name); }

// Image of f under the inclusion of its ring into `target` (matched by name).
MultiPoly lift(const MultiPoly& f, const Ring& target) {
  std::vector<MultiPoly> images;
  for (const auto& n : f.ring()->names()) images.push_back(var(target, n));
  return f.map_to(target, images);
}

CoverModel build_any(const MirandaData& data);

struct GenericElimination {
  CoverModel model;   // over {a, b, c, d, z, w}
  MultiPoly cubic;    // monic in z
  MultiPoly reduced;  // disc_z(cubic) / b^2
};

const GenericElimination& generic() {
  static const GenericElimination g = [] {
    Ring r = make_ring({"a", "b", "c", "d"});
    CoverModel m = build_any({var(r, "a"), var(r, "b"), var(r, "c"), var(r, "d")});
    const auto& gens = m.minors.generators();
    MultiPoly res = qpoly::resultant(gens[0], gens[1], "w");
    MultiPoly lead = res.coefficient_in(m.ring->require("z"), 3);
    if (res.degree_in("z") != 3 || !lead.is_constant())
      throw DegenerateInput("generic elimination did not produce a cubic: " + res.to_string());
    MultiPoly cubic = res * (1 / lead.constant_term());
    MultiPoly disc = qpoly::discriminant(cubic, "z");
    const MultiPoly& b = m.data.b;
    auto reduced = qpoly::divide_exact(disc, b * b);
    if (!reduced) throw DegenerateInput("generic discriminant is not divisible by b^2");
    return GenericElimination{std::move(m), std::move(cubic), std::move(*reduced)};
  }();
  return g;
}

// Substitutes the model's data into a polynomial over the generic ring.
MultiPoly specialize(const MultiPoly& f, const CoverModel& model) {
  std::vector<MultiPoly> images{model.data.a, model.data.b, model.data.c, model.data.d,
                                var(model.ring, "z"), var(model.ring, "w")};
  return f.map_to(model.ring, images);
}

void require_plane_ring(const CoverModel& model) {
  const auto& names = model.ring->names();
  if (names != std::vector<std::string>{"x", "y", "z", "w"})
    throw DecompositionError("local analysis needs data specialized to the ring {x, y}");
}

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rat(n, d);
}

// Squarefree integer k with q = k * (rational)^2.
Int squarefree_part(const Rat& q) {
  Int n = q.get_num() * q.get_den();
  Int sign = n < 0 ? -1 : 1;
  n = abs(n);
  Int out = 1;
  for (Int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e % 2 == 1) out *= p;
  }
  return sign * out * n;
}

// a + b r with r^2 = delta. The representation is unique because delta is not
// a square.
struct QuadNum {
  Rat a, b;
  bool is_zero() const { return a == 0 && b == 0; }
  bool rational() const { return b == 0; }
  friend bool operator==(const QuadNum&, const QuadNum&) = default;
};

// Q, or Q(r) with r^2 = delta once some root demands it. Only one square root
// can be adjoined; a second independent one makes the roots unavailable.
class QuadField {
 public:
  QuadField() = default;
  explicit QuadField(std::optional<Rat> delta) : delta_(std::move(delta)) {}

  const std::optional<Rat>& delta() const { return delta_; }
  Rat d() const { return delta_.value_or(0); }

  QuadNum add(const QuadNum& x, const QuadNum& y) const { return {x.a + y.a, x.b + y.b}; }
  QuadNum sub(const QuadNum& x, const QuadNum& y) const { return {x.a - y.a, x.b - y.b}; }
  QuadNum mul(const QuadNum& x, const QuadNum& y) const {
    return {x.a * y.a + d() * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  QuadNum inv(const QuadNum& x) const {
    Rat norm = x.a * x.a - d() * x.b * x.b;
    if (norm == 0) throw DegenerateInput("division by zero in a quadratic field");
    return {x.a / norm, -x.b / norm};
  }
  QuadNum div(const QuadNum& x, const QuadNum& y) const { return mul(x, inv(y)); }

  // A square root of x in the field, adjoining sqrt(x) when the field is
  // still Q and x is rational.
  std::optional<QuadNum> sqrt(const QuadNum& x) {
    if (x.rational()) {
      if (auto q = rational_sqrt(x.a)) return QuadNum{*q, 0};
      if (!delta_) delta_ = Rat(squarefree_part(x.a));
      if (auto q = rational_sqrt(x.a / *delta_)) return QuadNum{0, *q};
      return std::nullopt;
    }
    // (p + q r)^2 = x  <=>  p^2 + d q^2 = a, 2 p q = b.
    auto n = rational_sqrt(x.a * x.a - d() * x.b * x.b);
    if (!n) return std::nullopt;
    for (const Rat& p2 : std::array<Rat, 2>{(x.a + *n) / 2, (x.a - *n) / 2}) {
      auto p = rational_sqrt(p2);
      if (!p || *p == 0) continue;
      QuadNum cand{*p, x.b / (2 * *p)};
      if (mul(cand, cand) == x) return cand;
    }
    return std::nullopt;
  }

  // Replaces r^k by delta^(k/2) r^(k mod 2).
  MultiPoly reduce(const MultiPoly& f, std::size_t ri) const {
    MultiPoly out(f.ring());
    for (const auto& [exps, coef] : f.terms()) {
      Exponents e = exps;
      Rat c = coef;
      if (e[ri] >= 2) {
        Rat scale = 1;
        for (int k = 0; k < e[ri] / 2; ++k) scale *= d();
        c *= scale;
        e[ri] %= 2;
      }
      out += MultiPoly::monomial(f.ring(), e, c);
    }
    return out;
  }

  // Distinct roots in the field of sum coeffs[k] X^k. Cubics need rational
  // coefficients; lower degrees may be irrational.
  std::vector<QuadNum> roots(std::vector<QuadNum> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    std::vector<QuadNum> out;
    auto add_root = [&](const QuadNum& z) {
      if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
    };
    if (coeffs.size() <= 1) return out;
    if (coeffs.size() == 2) {
      add_root(div(QuadNum{-coeffs[0].a, -coeffs[0].b}, coeffs[1]));
      return out;
    }
    if (coeffs.size() == 3) {
      const QuadNum &c = coeffs[0], &b = coeffs[1], &a = coeffs[2];
      auto root = sqrt(sub(mul(b, b), mul(QuadNum{4, 0}, mul(a, c))));
      if (!root) return out;
      QuadNum two_a = mul(QuadNum{2, 0}, a);
      add_root(div(sub(*root, b), two_a));
      add_root(div(sub(QuadNum{-root->a, -root->b}, b), two_a));
      return out;
    }
    std::vector<Rat> rat;
    for (const auto& c : coeffs) {
      if (!c.rational())
        throw DecompositionError("cannot solve an equation of degree " + std::to_string(coeffs.size() - 1) +
                                 " with irrational coefficients");
      rat.push_back(c.a);
    }
    // Deflate by rational roots; what is left has degree <= 2 for cubics.
    for (const Rat& rho : rational_roots(rat)) {
      add_root({rho, 0});
      while (rat.size() > 1 && eval(rat, rho) == 0) rat = deflate(rat, rho);
    }
    if (rat.size() > 4) throw DecompositionError("cannot solve an equation of degree " + std::to_string(rat.size() - 1));
    if (rat.size() >= 2) {
      std::vector<QuadNum> rest;
      for (const Rat& c : rat) rest.push_back({c, 0});
      for (const auto& z : roots(std::move(rest))) add_root(z);
    }
    return out;
  }

 private:
  static Rat eval(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  static std::vector<Rat> deflate(const std::vector<Rat>& coeffs, const Rat& rho) {
    std::vector<Rat> q(coeffs.size() - 1);
    Rat carry = 0;
    for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
      carry = coeffs[k] + carry * rho;
      q[k - 1] = carry;
    }
    return q;
  }

  static std::set<Rat> rational_roots(std::vector<Rat> coeffs) {
    std::set<Rat> roots;
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low;
    if (low > 0) roots.insert(0);
    std::vector<Rat> rest(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.end());
    if (rest.size() == 1) return roots;
    Int den = 1;
    for (const auto& c : rest) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> ints;
    for (const auto& c : rest) ints.push_back(Int(c * Rat(den)));
    for (const Int& p : positive_divisors(ints.front()))
      for (const Int& q : positive_divisors(ints.back()))
        for (int sign : {1, -1}) {
          Rat cand(Int(sign * p), q);
          cand.canonicalize();
          if (eval(rest, cand) == 0) roots.insert(cand);
        }
    return roots;
  }

  std::optional<Rat> delta_;
};

// Working ring for plane decomposition: the model's {x, y, z, w} plus r.
struct PlaneRing {
  Ring ring = make_ring({"x", "y", "z", "w", "r"});
  std::size_t x = 0, y = 1, z = 2, w = 3, r = 4;

  MultiPoly constant(const QuadNum& c) const {
    return MultiPoly(ring, c.a) + MultiPoly::variable(ring, "r") * c.b;
  }
  MultiPoly linear(const QuadNum& alpha, const QuadNum& beta) const {
    return MultiPoly::variable(ring, "x") * constant(alpha) + MultiPoly::variable(ring, "y") * constant(beta);
  }
};

// Coefficients over the field of a polynomial in v (and r) only.
std::vector<QuadNum> univariate(const MultiPoly& f, std::size_t v, std::size_t r) {
  std::vector<QuadNum> out(static_cast<std::size_t>(std::max(f.degree_in(v), 0)) + 1);
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != v && i != r && e[i] != 0) throw ShapeError("expected a univariate polynomial, got " + f.to_string());
    if (e[r] > 1) throw ShapeError("unreduced field element in " + f.to_string());
    auto& slot = out[static_cast<std::size_t>(e[v])];
    (e[r] == 0 ? slot.a : slot.b) += c;
  }
  return out;
}

// Linear forms l = alpha x + beta y with f(l) == 0 in variable v, where alpha
// (beta) ranges over common roots at (1, 0) ((0, 1)) of the informative
// polynomials among `fs`.
std::vector<MultiPoly> linear_roots(const PlaneRing& pr, QuadField& field, const std::vector<MultiPoly>& fs,
                                    std::size_t v, const std::string& what) {
  auto common = [&](const Rat& xv, const Rat& yv) {
    std::optional<std::vector<QuadNum>> acc;
    for (const auto& f : fs) {
      MultiPoly g = f.substitute(pr.x, MultiPoly(pr.ring, xv)).substitute(pr.y, MultiPoly(pr.ring, yv));
      g = field.reduce(g, pr.r);
      if (g.is_zero()) continue;
      std::vector<QuadNum> rs = field.roots(univariate(g, v, pr.r));
      if (!acc) {
        acc = std::move(rs);
      } else {
        std::erase_if(*acc, [&](const QuadNum& z) { return std::find(rs.begin(), rs.end(), z) == rs.end(); });
      }
    }
    if (!acc) throw DecompositionError("cannot solve for " + what + ": every equation vanishes on a coordinate axis");
    return *acc;
  };
  std::vector<QuadNum> alphas = common(1, 0), betas = common(0, 1);
  std::vector<MultiPoly> out;
  for (const auto& al : alphas)
    for (const auto& be : betas) {
      MultiPoly l = pr.linear(al, be);
      bool ok = true;
      for (const auto& f : fs) ok = ok && field.reduce(f.substitute(v, l), pr.r).is_zero();
      if (ok) out.push_back(l);
    }
  return out;
}

// Coefficients of x and y in a linear form over {x, y, z, w[, r]}.
std::array<QuadNum, 2> xy_coefficients(const MultiPoly& linear) {
  const auto& names = linear.ring()->names();
  auto r = linear.ring()->index_of("r");
  std::size_t xi = linear.ring()->require("x"), yi = linear.ring()->require("y");
  std::array<QuadNum, 2> c{};
  for (const auto& [e, coef] : linear.terms()) {
    int rdeg = r ? e[*r] : 0;
    bool ok = rdeg <= 1 && e[xi] + e[yi] == 1;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (i != xi && i != yi && (!r || i != *r)) ok = ok && e[i] == 0;
    if (!ok) throw DecompositionError("expected a linear form in x, y, got " + linear.to_string());
    auto& slot = c[e[xi] == 1 ? 0 : 1];
    (rdeg == 0 ? slot.a : slot.b) += coef;
  }
  return c;
}

// Spanning vector of the line {z = l_i, w = m_i} cut out in the (x, y) plane
// by the row, normalized so its first nonzero entry is 1.
std::array<QuadNum, 4> line_direction(const QuadField& f, const PlaneComponent& p, const std::array<QuadNum, 2>& row) {
  QuadNum x{-row[1].a, -row[1].b}, y = row[0];
  auto zc = xy_coefficients(p.z_value), wc = xy_coefficients(p.w_value);
  std::array<QuadNum, 4> v{x, y, f.add(f.mul(zc[0], x), f.mul(zc[1], y)), f.add(f.mul(wc[0], x), f.mul(wc[1], y))};
  for (const auto& c : v)
    if (!c.is_zero()) {
      QuadNum inv = f.inv(c);
      for (auto& e : v) e = f.mul(e, inv);
      break;
    }
  return v;
}

std::string locus_name(DegenerationLocus l) {
  switch (l) {
    case DegenerationLocus::None: return "";
    case DegenerationLocus::SZero: return "s=0";
    case DegenerationLocus::SEqualsT: return "s=t";
    case DegenerationLocus::SEqualsMinusT: return "s=-t";
    case DegenerationLocus::TZero: return "t=0";
    case DegenerationLocus::TEquals3S: return "t=3s";
    case DegenerationLocus::TEqualsMinus3S: return "t=-3s";
  }
  return "";
}

}  // namespace

MirandaData chen_hacon_data(const Rat& s, const Rat& t) {
  Ring r = make_ring({"x", "y"});
  MultiPoly x = var(r, "x"), y = var(r, "y");
  return {x * s, y * t, x * Rat(-t), y * Rat(-s)};
}

MirandaData chen_hacon_data_symbolic() {
  Ring r = make_ring({"x", "y", "s", "t"});
  MultiPoly x = var(r, "x"), y = var(r, "y"), s = var(r, "s"), t = var(r, "t");
  return {s * x, t * y, -(t * x), -(s * y)};
}

namespace {

// Shape checks except the presence of x and y, which the generic ring lacks.
CoverModel build_any(const MirandaData& data) {
  const Ring& base = data.a.ring();
  for (const auto* p : {&data.b, &data.c, &data.d})
    if (!qpoly::same_ring(base, p->ring())) throw ShapeError("Miranda data must share one ring");
  if (base->index_of("z") || base->index_of("w")) throw ShapeError("Miranda data may not use z or w");
  std::vector<std::string> names = base->names();
  names.push_back("z");
  names.push_back("w");
  Ring ring = make_ring(names);
  MultiPoly a = lift(data.a, ring), b = lift(data.b, ring), c = lift(data.c, ring), d = lift(data.d, ring);
  MultiPoly z = var(ring, "z"), w = var(ring, "w");
  std::array<std::array<MultiPoly, 3>, 2> matrix{{{z + a, w - d * Rat(2), c}, {b, z - a * Rat(2), w + d}}};
  auto minor = [&](int i, int j) { return matrix[0][i] * matrix[1][j] - matrix[0][j] * matrix[1][i]; };
  Ideal minors(ring, {minor(0, 1), minor(0, 2), minor(1, 2)});
  bool homogeneous = minors.is_homogeneous();
  return CoverModel{{a, b, c, d}, ring, std::move(matrix), std::move(minors), homogeneous};
}

}  // namespace

CoverModel build_model(const MirandaData& data) {
  const Ring& base = data.a.ring();
  if (!base->index_of("x") || !base->index_of("y")) throw ShapeError("Miranda data must live over a ring with x and y");
  return build_any(data);
}

MultiPoly eliminate_cubic(const CoverModel& model) { return specialize(generic().cubic, model); }

MultiPoly eliminate_cubic_from_minors(const CoverModel& model, std::size_t i, std::size_t j) {
  const auto& gens = model.minors.generators();
  if (gens.size() != 3 || i >= 3 || j >= 3 || i == j) throw ShapeError("minor indices must be distinct in 0..2");
  MultiPoly res = qpoly::resultant(gens[i], gens[j], "w");
  if (res.is_zero()) throw DegenerateInput("resultant of the minors vanishes identically");
  if (res.degree_in("z") != 3)
    throw DegenerateInput("resultant has degree " + std::to_string(res.degree_in("z")) + " in z, expected 3");
  auto monic = qpoly::divide_exact(res, res.coefficient_in(model.ring->require("z"), 3));
  if (!monic) throw DegenerateInput("leading coefficient in z does not divide the resultant");
  return *monic;
}

MultiPoly branch_discriminant(const CoverModel& model) {
  MultiPoly f = specialize(generic().reduced, model);
  if (f.is_zero()) throw DegenerateInput("branch discriminant vanishes identically");
  // Back to the data ring; z and w do not occur.
  std::vector<std::string> names = model.ring->names();
  names.resize(names.size() - 2);
  Ring base = make_ring(names);
  std::vector<MultiPoly> images;
  for (const auto& n : names) images.push_back(var(base, n));
  images.emplace_back(base, 0);
  images.emplace_back(base, 0);
  f = f.map_to(base, images);
  return f * (1 / f.content());
}

MultiPoly chen_hacon_branch_locus(const Ring& ring, const MultiPoly& s, const MultiPoly& t) {
  MultiPoly x = var(ring, "x"), y = var(ring, "y");
  MultiPoly x2 = x * x, y2 = y * y, s2 = s * s, st = s * t;
  MultiPoly diff = t * t - s2;
  return diff * diff * x2 * y2 - Rat(4) * (s2 * x2 + st * y2) * (s2 * y2 + st * x2);
}

std::string DegenerationClass::to_string() const {
  switch (kind) {
    case Degeneration::General: return "General";
    case Degeneration::TotallyRamified: return "TotallyRamified(" + locus_name(locus) + ")";
    case Degeneration::NonNormal: return "NonNormal(" + locus_name(locus) + ")";
  }
  return "";
}

DegenerationClass classify_parameters(const Rat& s, const Rat& t) {
  if (s == 0 && t == 0) throw DegenerateInput("(s, t) = (0, 0) does not define a cover");
  using L = DegenerationLocus;
  if (t == 0) return {Degeneration::NonNormal, L::TZero};
  if (t == 3 * s) return {Degeneration::NonNormal, L::TEquals3S};
  if (t == -3 * s) return {Degeneration::NonNormal, L::TEqualsMinus3S};
  if (s == 0) return {Degeneration::TotallyRamified, L::SZero};
  if (s == t) return {Degeneration::TotallyRamified, L::SEqualsT};
  if (s == -t) return {Degeneration::TotallyRamified, L::SEqualsMinusT};
  return {};
}

MultiPoly governing_discriminant() {
  static const MultiPoly result = [] {
    CoverModel m = build_model(chen_hacon_data_symbolic());
    MultiPoly branch = branch_discriminant(m);
    // Dehomogenize at y = 1; the x^4 coefficient is generically nonzero.
    Ring r = make_ring({"x", "s", "t"});
    std::vector<MultiPoly> images{var(r, "x"), MultiPoly(r, 1), var(r, "s"), var(r, "t")};
    MultiPoly f = branch.map_to(r, images);
    int n = f.degree_in("x");
    MultiPoly lead = f.coefficient_in(0, n);
    MultiPoly res = qpoly::resultant(f, f.derivative(0), "x");
    auto disc = qpoly::divide_exact(res, lead);
    if (!disc) throw DegenerateInput("leading coefficient does not divide the resultant");
    if ((n * (n - 1) / 2) % 2 == 1) *disc = -*disc;
    Ring st = make_ring({"s", "t"});
    MultiPoly out = disc->map_to(st, std::vector<MultiPoly>{MultiPoly(st, 0), var(st, "s"), var(st, "t")});
    return out * (1 / out.content());
  }();
  return result;
}

std::string to_string(LocalSingularity s) {
  switch (s) {
    case LocalSingularity::OneThird11: return "1/3(1,1)";
    case LocalSingularity::OneHalf11: return "1/2(1,1)";
    case LocalSingularity::OneThird12: return "1/3(1,2)";
    case LocalSingularity::ThreePlanes: return "three planes";
    case LocalSingularity::Smooth: return "smooth";
  }
  return "";
}

ResolutionData resolution_of(LocalSingularity s) {
  switch (s) {
    case LocalSingularity::OneThird11: return {{-3}};
    case LocalSingularity::OneHalf11: return {{-2}};
    case LocalSingularity::OneThird12: return {{-2, -2}};
    case LocalSingularity::Smooth: return {};
    case LocalSingularity::ThreePlanes: return {{}, false, false};
  }
  return {};
}

ThreePlaneCertificate certify_three_planes(std::vector<PlaneComponent> planes, std::optional<Rat> field_square) {
  if (planes.size() != 3)
    throw DecompositionError("found " + std::to_string(planes.size()) + " planes, expected 3");
  const QuadField field(field_square);
  ThreePlaneCertificate cert;
  std::vector<std::array<QuadNum, 4>> lines;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& p = planes[pairs[k].first];
    const auto& q = planes[pairs[k].second];
    auto dz = xy_coefficients(p.z_value - q.z_value);
    auto dw = xy_coefficients(p.w_value - q.w_value);
    QuadNum det = field.sub(field.mul(dz[0], dw[1]), field.mul(dz[1], dw[0]));
    bool zero_z = dz[0].is_zero() && dz[1].is_zero(), zero_w = dw[0].is_zero() && dw[1].is_zero();
    if (zero_z && zero_w) throw DecompositionError("planes " + std::to_string(pairs[k].first) + " and " +
                                                   std::to_string(pairs[k].second) + " coincide");
    int rank = det.is_zero() ? 1 : 2;
    cert.pair_dimensions[k] = 2 - rank;
    if (rank == 1) {
      auto dir = line_direction(field, p, zero_z ? dw : dz);
      if (std::find(lines.begin(), lines.end(), dir) == lines.end()) lines.push_back(dir);
    }
  }
  cert.intersection_lines = static_cast<int>(lines.size());
  if (cert.intersection_lines != 2)
    throw DecompositionError("intersection-line count " + std::to_string(cert.intersection_lines) + " != 2");
  cert.components = std::move(planes);
  cert.field_square = std::move(field_square);
  return cert;
}

ThreePlaneCertificate decompose_three_planes(const CoverModel& model) {
  require_plane_ring(model);
  const PlaneRing pr;
  QuadField field;
  std::vector<MultiPoly> minors;
  for (const auto& g : model.minors.generators()) minors.push_back(lift(g, pr.ring));
  MultiPoly cubic = lift(eliminate_cubic(model), pr.ring);
  std::vector<MultiPoly> z_roots = linear_roots(pr, field, {cubic}, pr.z, "z");
  if (z_roots.empty())
    throw DecompositionError("cubic has no linear factor over a quadratic field: " + cubic.to_string());

  std::vector<PlaneComponent> planes;
  const MultiPoly z = var(pr.ring, "z"), w = var(pr.ring, "w");
  for (const auto& l : z_roots) {
    std::vector<MultiPoly> on_plane;
    for (const auto& g : minors) on_plane.push_back(field.reduce(g.substitute(pr.z, l), pr.r));
    for (const auto& m : linear_roots(pr, field, on_plane, pr.w, "w on z = " + l.to_string()))
      planes.push_back({l, m, Ideal(pr.ring, {z - l, w - m})});
  }
  for (const auto& p : planes)
    for (const auto& g : minors)
      if (!field.reduce(g.substitute(pr.z, p.z_value).substitute(pr.w, p.w_value), pr.r).is_zero())
        throw DecompositionError("minor " + g.to_string() + " does not vanish on a candidate plane");
  // Three distinct planes of degree 1 exhaust a 2-dimensional scheme of degree 3.
  qpoly::HilbertSeries hs = qpoly::hilbert_series(model.minors, qpoly::groebner_budget_from_env());
  std::int64_t degree = 0;
  for (auto c : hs.numerator) degree += c;
  if (qpoly::krull_dimension(hs) != 2 || degree != 3)
    throw DecompositionError("minor ideal has Hilbert series " + hs.to_string() + ", expected dimension 2, degree 3");
  if (!field.delta()) {
    // Rational planes live in the model's own ring.
    std::vector<MultiPoly> images{var(model.ring, "x"), var(model.ring, "y"), var(model.ring, "z"),
                                  var(model.ring, "w"), MultiPoly(model.ring, 0)};
    for (auto& p : planes) {
      p.z_value = p.z_value.map_to(model.ring, images);
      p.w_value = p.w_value.map_to(model.ring, images);
      p.ideal = Ideal(model.ring, {images[2] - p.z_value, images[3] - p.w_value});
    }
  }
  return certify_three_planes(std::move(planes), field.delta());
}

BasePointAnalysis analyze_base_point(const CoverModel& model, const Rat& s, const Rat& t) {
  BasePointAnalysis out;
  out.degeneration = classify_parameters(s, t);
  require_plane_ring(model);
  try {
    if (out.degeneration.kind == Degeneration::NonNormal) {
      out.planes = decompose_three_planes(model);
      out.singularity = LocalSingularity::ThreePlanes;
      return out;
    }
    const std::size_t budget = qpoly::groebner_budget_from_env();
    out.hilbert = qpoly::hilbert_series(model.minors, budget);
    out.singular_locus_dimension = qpoly::krull_dimension(qpoly::jacobian_ideal(model.minors, 2), budget);
    const qpoly::HilbertSeries cone{{1, 2}, 2};
    if (*out.hilbert == cone && *out.singular_locus_dimension == 0)
      out.singularity = LocalSingularity::OneThird11;
    else
      out.note = "Hilbert series " + out.hilbert->to_string() + " with singular locus of dimension " +
                 std::to_string(*out.singular_locus_dimension) + " is not a cone over a twisted cubic";
  } catch (const Error& e) {
    out.note = e.what();
  }
  return out;
}

CoverSingularityReport branch_singularity_table(std::span<const BranchPoint> config) {
  CoverSingularityReport out;
  enum Rule { Quadruple, PartialNode, DoubledNodeAtOrigin, DoubledNodeElsewhere };
  std::vector<Rule> rules;
  for (const auto& p : config) {
    BranchPointSingularities row{p, {}, std::nullopt};
    if (p.multiplicity == 4 && p.reduced && p.totally_ramified) {
      rules.push_back(Quadruple);
      row.over_point = {LocalSingularity::OneThird11};
    } else if (p.multiplicity == 2 && p.reduced && !p.totally_ramified) {
      rules.push_back(PartialNode);
      row.over_point = {LocalSingularity::Smooth, LocalSingularity::OneHalf11};
      row.canonical_resolution = std::vector<int>{-1, -2};
    } else if (p.multiplicity == 4 && !p.reduced && p.totally_ramified) {
      // Doubled node of the reduced branch curve; which quotient occurs is
      // fixed by the global case analysis.
      rules.push_back(p.at_origin ? DoubledNodeAtOrigin : DoubledNodeElsewhere);
      row.over_point = {p.at_origin ? LocalSingularity::OneThird11 : LocalSingularity::OneThird12};
    } else {
      throw DecompositionError("unclassified branch point: multiplicity " + std::to_string(p.multiplicity) +
                               (p.reduced ? ", reduced" : ", non-reduced") +
                               (p.totally_ramified ? ", totally ramified" : ", partially ramified"));
    }
    for (auto s : row.over_point)
      if (s != LocalSingularity::Smooth) out.singularities.push_back(s);
    out.points.push_back(std::move(row));
  }
  std::multiset<Rule> seen(rules.begin(), rules.end());
  std::size_t at_origin = 0;
  for (const auto& p : config) at_origin += p.at_origin && p.multiplicity == 4;
  if (at_origin != 1) throw DecompositionError("the branch curve must have exactly one quadruple point at the origin");
  if (seen == std::multiset<Rule>{Quadruple})
    out.configuration = 'a';
  else if (seen == std::multiset<Rule>{Quadruple, PartialNode})
    out.configuration = 'b';
  else if (seen == std::multiset<Rule>{DoubledNodeAtOrigin})
    out.configuration = 'c';
  else if (seen == std::multiset<Rule>{DoubledNodeAtOrigin, DoubledNodeElsewhere})
    out.configuration = 'd';
  else
    throw DecompositionError("branch configuration is not one of the classified cases");
  out.canonical_ample = out.configuration == 'a' || out.configuration == 'c';
  return out;
}

CanonicalDecomposition canonical_decomposition_check() {
  auto lattice = chern::Lattice::make({"Xi", "Phi"}, {{-3, 4}, {4, 0}});
  chern::NumClass xi = lattice->basis("Xi"), phi = lattice->basis("Phi");
  chern::NumClass k = xi + phi;
  CanonicalDecomposition out;
  out.canonical_square = chern::self_intersection(k);
  // chi(O) = 1 with K^2 = 5 gives e = 7 by Noether.
  chern::SurfaceGeom s(k, Int(12) - Int(out.canonical_square.get_num()), 1);
  out.genus_phi = chern::adjunction_genus(phi, s);
  out.genus_xi = chern::adjunction_genus(xi, s);
  out.pass = out.canonical_square == 5 && out.genus_phi == 3 && out.genus_xi == 0;
  return out;
}

}  // namespace tschirn::cover
