#pragma once

#include <gmpxx.h>

#include <string>

namespace newstein {

// Exact rational. mpq_class keeps the reduced form after canonicalize().
using Scalar = mpq_class;

// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on bad input or zero denominator.
Scalar parse_scalar(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& x);

}  // namespace newstein
