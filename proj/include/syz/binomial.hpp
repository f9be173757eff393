#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace syz {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact binomial coefficient C(a, b).
///
/// Zero when b < 0 or b > a >= 0. For a < 0 the polynomial extension
/// a(a-1)...(a-b+1)/b! is used, so identities between binomial polynomials
/// keep holding at small arguments.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Narrowing helper for counts known to be small; throws on overflow.
std::int64_t to_int64(const BigInt& value);

}  // namespace syz
