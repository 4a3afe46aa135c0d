#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace abelorb {

using Rational = mpq_class;

/// "3", "-3/2", "+4/6" (canonicalised). Throws DomainError otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace abelorb
