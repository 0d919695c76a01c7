#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dlab {

using Rational = mpq_class;

// Accepts "p/q", "-p/q", integers and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
Rational rational(long num, long den = 1);

}  // namespace dlab
