// Exact scalar arithmetic. All coefficients in the library are arbitrary
// precision rationals; nothing is ever rounded.
#pragma once

#include <gmpxx.h>

#include <string>

#include "ginlex/errors.hpp"

namespace ginlex {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n" or "n/d" (optionally signed). Throws domain_error on garbage
/// or a zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical string form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& q);

} // namespace ginlex
