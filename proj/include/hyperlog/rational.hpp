#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperlog {

using Rational = mpq_class;
using Integer = mpz_class;

// "n" for integers, "n/d" otherwise; canonical reduced form.
std::string to_string(const Rational& q);

// Accepts "n", "-n", "n/d". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace hyperlog
