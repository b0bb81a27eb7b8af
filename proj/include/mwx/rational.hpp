// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_RATIONAL_HPP
#define MWX_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "mwx/error.hpp"

namespace mwx {

// Exact scalars. Int is an arbitrary-precision integer; Rat is an
// arbitrary-precision rational kept in lowest terms with positive
// denominator (canonical form is maintained by the backend on every
// operation, so the reducedness invariant can never lapse).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Int& x) { return x.is_zero(); }

inline Int num(const Rat& x) { return numerator(x); }
inline Int den(const Rat& x) { return denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

Rat rat_pow(const Rat& x, long e); // x^e, e may be negative (x != 0)
Int int_pow(const Int& x, unsigned long e);

// Serialized form: "num" when the denominator is 1, else "num/den".
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// Reduction mod p for p not dividing den(x).
std::uint64_t rat_mod(const Rat& x, std::uint64_t p);
std::uint64_t int_mod(const Int& x, std::uint64_t p);

inline Rat scalar_mul_long(const Rat& x, long v) { return x * v; }
inline Rat scalar_scale(const Rat& x, const Rat& c) { return x * c; }

// Prime factorization by trial division; meant for the small numerators
// and denominators appearing in specialization data. Returns (prime,
// exponent) pairs of |x|; throws budget_error if a cofactor above the
// trial bound survives.
std::vector<std::pair<Int, long>> factor_small(const Int& x, std::uint64_t bound = 1000000);

} // namespace mwx

#endif
