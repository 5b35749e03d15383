#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace spinc {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Residue of `a` modulo `m` in [0, m). `m` must be positive.
Integer mod_floor(const Integer& a, const Integer& m);

/// Quotient rounded towards negative infinity.
Integer div_floor(const Integer& a, const Integer& b);

/// Inverse of `a` modulo `m`; requires gcd(a, m) = 1.
Integer mod_inverse(const Integer& a, const Integer& m);

bool is_unit(const Integer& a);

std::int64_t to_int64(const Integer& a);

std::string to_string(const IntVector& v);

}  // namespace spinc
