#pragma once

#include <gmpxx.h>

#include <string>

namespace gsh {

/// Exact rational scalar. All graph arithmetic in the library is carried out
/// in this type; doubles only appear in display output and in the numeric
/// oracle.
using Rat = mpq_class;

Rat makeRat(long num, long den = 1);

/// Accepts "p/q", plain integers and decimal strings ("3/2", "-7", "1.25").
/// Throws ParseError on anything else.
Rat ratFromString(const std::string& text);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string ratToString(const Rat& value);

double ratToDouble(const Rat& value);

}  // namespace gsh
