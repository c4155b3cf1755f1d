#include "tschirn/qpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "tschirn/error.hpp"

namespace tschirn::qpoly {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool term_greater(TermOrder order, const Exponents& a, const Exponents& b) {
  if (order == TermOrder::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  // Smaller exponent in the last differing variable wins.
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents gcd(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

// ---------------------------------------------------------------------------

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ParseError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarContext::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw ShapeError("unknown variable '" + std::string(name) + "'");
  return *i;
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(Ring ring) : ring_(std::move(ring)) {}

MultiPoly::MultiPoly(Ring ring, const Rat& constant) : ring_(std::move(ring)) {
  if (constant != 0) terms_.emplace(Exponents(ring_->size(), 0), constant);
}

MultiPoly MultiPoly::variable(Ring ring, std::string_view name) {
  Exponents e(ring->size(), 0);
  e[ring->require(name)] = 1;
  return monomial(std::move(ring), std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Ring ring, Exponents exponents, const Rat& coefficient) {
  if (exponents.size() != ring->size()) throw ShapeError("exponent vector length mismatch");
  MultiPoly p(std::move(ring));
  p.add_term(exponents, coefficient);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(ring_->size(), 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
  // Grevlex is degree-compatible, so the first term has the top degree.
  return terms_.empty() ? -1 : qpoly::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return qpoly::total_degree(t.first) == d; });
}

std::pair<Exponents, Rat> MultiPoly::leading_term(TermOrder order) const {
  if (terms_.empty()) throw DegenerateInput("leading term of the zero polynomial");
  if (order == TermOrder::Grevlex) return *terms_.begin();
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (term_greater(order, it->first, best->first)) best = it;
  return *best;
}

MultiPoly MultiPoly::coefficient_in(std::size_t var, int k) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  check_ring(value);
  std::vector<MultiPoly> images;
  images.reserve(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i)
    images.push_back(i == var ? value : variable(ring_, ring_->name(i)));
  return map_to(ring_, images);
}

MultiPoly MultiPoly::map_to(const Ring& target, std::span<const MultiPoly> images) const {
  if (images.size() != ring_->size()) throw ShapeError("map_to: one image per variable required");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target)) throw ShapeError("map_to: image outside the target ring");
  // powers[i][k] = images[i]^k, grown on demand.
  std::vector<std::vector<MultiPoly>> powers(ring_->size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Rat(1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term *= power(i, e[i]);
    r += term;
  }
  return r;
}

Rat MultiPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != ring_->size()) throw ShapeError("evaluate: point dimension mismatch");
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(ring_, Rat(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rat MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Int num = 0, den = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  if (leading_coefficient() < 0) c = -c;
  MultiPoly r = *this;
  r *= Rat(1 / c);
  return r;
}

MultiPoly MultiPoly::monic(TermOrder order) const {
  if (terms_.empty()) return *this;
  MultiPoly r = *this;
  r *= Rat(1 / leading_coefficient(order));
  return r;
}

void MultiPoly::add_term(const Exponents& exponents, const Rat& coefficient) {
  if (coefficient == 0) return;
  if (exponents.size() != ring_->size()) throw ShapeError("exponent vector length mismatch");
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly r(a.ring_);
  Exponents e(a.ring_->size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (!same_ring(ring_, other.ring_)) throw ShapeError("variable context mismatch");
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = qpoly::total_degree(e) == 0;
    bool need_star = false;
    if (mag != 1 || constant) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << ring_->name(i);
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DegenerateInput("division by the zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw ShapeError("variable context mismatch");
  const auto [lg, cg] = g.leading_term();
  MultiPoly q(f.ring()), r = f;
  while (!r.is_zero()) {
    const auto [lr, cr] = r.leading_term();
    if (!divides(lg, lr)) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(f.ring(), quotient(lr, lg), cr / cg);
    q += t;
    r -= t * g;
  }
  return q;
}

std::optional<Rat> proportionality(const MultiPoly& f, const MultiPoly& g) {
  if (!same_ring(f.ring(), g.ring())) throw ShapeError("variable context mismatch");
  if (f.is_zero() || g.is_zero() || f.term_count() != g.term_count()) return std::nullopt;
  Rat lambda = f.leading_coefficient() / g.leading_coefficient();
  if (f == g * lambda) return lambda;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + why +
                     " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  MultiPoly expression() {
    MultiPoly acc(ring_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (peek('+') || peek('-')) {
      bool minus = text_[pos_++] == '-';
      MultiPoly u = term();
      acc += minus ? -u : u;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc *= Rat(1 / d.constant_term());
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = factor();
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(ring_, parse_rat(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      if (!ring_->index_of(name)) fail("unknown variable '" + std::string(name) + "'");
      return MultiPoly::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace tschirn::qpoly
