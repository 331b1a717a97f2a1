#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lft
{

using integer = mpz_class;
using rational = mpq_class;

// Accepts "p", "+p", "-p" and "p/q" with decimal digits only.
rational parse_rational(std::string_view text);

std::string to_string(const rational &q);

integer floor(const rational &q);

// q - floor(q), always in [0, 1).
rational fractional_part(const rational &q);

// Exact n-th root inside Q. For even n the positive root is returned.
std::optional<rational> exact_root(const rational &q, unsigned long n);

rational pow(const rational &q, long e);

// num/den in lowest terms; den must be nonzero.
rational ratio(long num, long den);

} // namespace lft
