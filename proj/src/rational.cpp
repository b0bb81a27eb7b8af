// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/rational.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace mwx {

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x.is_zero()) {
        if (e < 0) throw input_error("rat_pow: zero to a negative power");
        return Rat(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(pow(numerator(x), a), pow(denominator(x), a));
    if (e < 0) r = Rat(1) / r;
    return r;
}

Int int_pow(const Int& x, unsigned long e) { return pow(x, e); }

std::string rat_to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat rat_from_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw input_error("rational with zero denominator: " + s);
        return Rat(n, d);
    } catch (const std::exception&) {
        throw input_error("malformed rational: \"" + s + "\"");
    }
}

std::uint64_t int_mod(const Int& x, std::uint64_t p) {
    Int r = x % Int(p);
    if (r < 0) r += Int(p);
    return r.convert_to<std::uint64_t>();
}

std::uint64_t rat_mod(const Rat& x, std::uint64_t p) {
    const std::uint64_t d = int_mod(denominator(x), p);
    if (d == 0) throw bad_prime_error("denominator divisible by " + std::to_string(p));
    // Modular inverse by Fermat would need the field context; do extended
    // Euclid on machine words here to keep this header-independent.
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p, nr = d;
    while (nr != 0) {
        const std::uint64_t q = r / nr;
        std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
        t = nt; nt = tmp;
        std::uint64_t tmr = r - q * nr;
        r = nr; nr = tmr;
    }
    if (r != 1) throw bad_prime_error("denominator not invertible mod " + std::to_string(p));
    std::int64_t ti = t < 0 ? t + static_cast<std::int64_t>(p) : t;
    const std::uint64_t dinv = static_cast<std::uint64_t>(ti);
    const std::uint64_t n = int_mod(numerator(x), p);
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(n) * dinv) % p);
}

std::vector<std::pair<Int, long>> factor_small(const Int& x, std::uint64_t bound) {
    std::vector<std::pair<Int, long>> out;
    Int n = abs(x);
    if (n <= 1) return out;
    auto strip = [&](const Int& q) {
        long e = 0;
        while (n % q == 0) { n /= q; ++e; }
        if (e > 0) out.emplace_back(q, e);
    };
    strip(Int(2));
    for (Int q = 3; q * q <= n && q <= Int(bound); q += 2) strip(q);
    if (n > 1) {
        if (n > Int(bound) * Int(bound) &&
            !boost::multiprecision::miller_rabin_test(n, 32))
            throw budget_error("factor_small: composite cofactor beyond trial bound");
        out.emplace_back(n, 1);
    }
    return out;
}

} // namespace mwx
