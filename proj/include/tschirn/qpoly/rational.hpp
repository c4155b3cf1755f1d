#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tschirn::qpoly {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; the helpers below keep that true at construction.
using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

bool is_integer(const Rat& r);

// Numerator of an integral rational; throws NonIntegral otherwise.
Int as_integer(const Rat& r);

long as_long(const Rat& r);

}  // namespace tschirn::qpoly
