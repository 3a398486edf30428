#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tverberg/matrix.hpp"

namespace tverberg {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num / den in lowest terms. GMP does not reduce two-argument construction,
/// and its arithmetic assumes reduced operands.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "num/den" or "num" (decimal integers, optional sign). Throws
/// InvalidParameter on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "num/den"; integers keep the "/1" suffix so the format is uniform.
std::string format_rational(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// Exact determinant; the empty matrix has determinant 1.
Rational det_rational(const Matrix<Rational>& m, std::size_t cap = kDefaultDeterminantCap);

}  // namespace tverberg
