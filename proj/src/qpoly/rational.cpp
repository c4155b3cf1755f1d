#include "tschirn/qpoly/rational.hpp"

#include <cctype>

#include "tschirn/error.hpp"

namespace tschirn::qpoly {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int as_integer(const Rat& r) {
  if (!is_integer(r)) throw NonIntegral("expected an integer, got " + r.get_str());
  return r.get_num();
}

long as_long(const Rat& r) {
  Int z = as_integer(r);
  if (!z.fits_slong_p()) throw NonIntegral("integer out of range: " + z.get_str());
  return z.get_si();
}

}  // namespace tschirn::qpoly
