// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/zp.hpp"

namespace mwx {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128(a) * b) % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

u64 next_prime_u64(u64 n) {
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

u64 nth_check_prime(unsigned k) {
    // Walk downward from 2^62 so the moduli stay below the Zp bound.
    u64 p = (u64(1) << 62) - 1;
    unsigned found = 0;
    while (true) {
        if (is_prime_u64(p)) {
            if (found == k) return p;
            ++found;
        }
        p -= 2;
    }
}

Zp::Zp(u64 p) : p_(p) {
    if (p < 3 || p >= (u64(1) << 62) || !is_prime_u64(p))
        throw input_error("Zp: modulus must be an odd prime below 2^62");
}

u64 Zp::pow(u64 a, u64 e) const { return powmod_u64(a % p_, e, p_); }

u64 Zp::inv(u64 a) const {
    a %= p_;
    if (a == 0) throw bad_prime_error("Zp: inverse of zero");
    // Extended Euclid; p is prime so gcd is 1.
    std::int64_t t = 0, nt = 1;
    u64 r = p_, nr = a;
    while (nr != 0) {
        const u64 q = r / nr;
        const std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
        t = nt; nt = tmp;
        const u64 rmp = r - q * nr;
        r = nr; nr = rmp;
    }
    MWX_CHECK(r == 1, "Zp::inv: modulus not prime?");
    return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
}

} // namespace mwx
