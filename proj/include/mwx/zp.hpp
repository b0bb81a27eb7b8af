// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_ZP_HPP
#define MWX_ZP_HPP

#include <cstdint>
#include <vector>

#include "mwx/error.hpp"
#include "mwx/rational.hpp"

namespace mwx {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime_u64(u64 n);
u64 next_prime_u64(u64 n); // smallest prime >= n

// Deterministic list of distinct primes just below 2^62, for modular
// identity checks. Index k always yields the same prime.
u64 nth_check_prime(unsigned k);

// Prime field Z/p for an odd prime p < 2^62. Elements are plain u64
// residues in [0, p); the context carries the modulus.
class Zp {
public:
    explicit Zp(u64 p);

    u64 modulus() const { return p_; }
    bool small() const { return p_ < (u64(1) << 31); } // SIMD-kernel eligible

    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128(a) * b) % p_); }
    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const; // throws bad_prime_error on non-invertible input
    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    u64 from_int(const Int& x) const { return int_mod(x, p_); }
    u64 from_rat(const Rat& x) const { return rat_mod(x, p_); }
    u64 from_long(long x) const {
        long r = x % static_cast<long>(p_);
        return static_cast<u64>(r < 0 ? r + static_cast<long>(p_) : r);
    }

private:
    u64 p_;
};

} // namespace mwx

#endif
