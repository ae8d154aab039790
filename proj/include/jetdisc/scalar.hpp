#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetdisc {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses an integer or a `p/q` fraction; the result is canonicalized.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace jetdisc
