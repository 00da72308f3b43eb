#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace deptree {

using BigNat = mpz_class;
using Rational = mpq_class;

/// Natural logarithm of a positive big integer, computed from a normalized
/// mantissa and binary exponent so values far beyond double range are fine.
double log_big(const BigNat& x);

inline std::string to_decimal(const BigNat& x) { return x.get_str(10); }

/// "p/q", or just "p" when the denominator is one.
inline std::string to_decimal(const Rational& x) { return x.get_str(10); }

inline std::size_t bit_length(const BigNat& x) {
    return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace deptree
