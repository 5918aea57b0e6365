#pragma once

#include <gmpxx.h>

#include <string>

namespace hamtpath {

// Exact rational number. mpq_class keeps values canonical (reduced,
// positive denominator) under all arithmetic.
using Rat = mpq_class;

// "p/q" with an explicit denominator, e.g. "0/1", "-3/2".
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q" in base 10. Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat rat_from_string(const std::string& s);

}  // namespace hamtpath
