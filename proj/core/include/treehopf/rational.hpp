#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace treehopf {

// Exact arbitrary-precision scalars. All primary computations are rational;
// there is no floating point anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalisation).
Rat rat_parse(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

Int int_factorial(unsigned n);

}  // namespace treehopf
