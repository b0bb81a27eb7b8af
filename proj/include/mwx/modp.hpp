// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_MODP_HPP
#define MWX_MODP_HPP

#include "mwx/rational.hpp"
#include "mwx/zp.hpp"

namespace mwx {

// Thread-local modulus scope so that Mp elements can flow through the
// generic polynomial templates without carrying a context pointer each.
// Scopes nest; each worker thread of a parallel run opens its own.
class ModScope {
public:
    explicit ModScope(u64 p);
    ~ModScope();
    ModScope(const ModScope&) = delete;
    ModScope& operator=(const ModScope&) = delete;

    static const Zp& field();

private:
    const Zp* prev_;
    Zp cur_;
};

// Element of the thread-current prime field.
struct Mp {
    u64 v = 0;

    Mp() = default;
    Mp(long x) : v(ModScope::field().from_long(x)) {} // NOLINT: literals promote
    static Mp raw(u64 x) {
        Mp r;
        r.v = x;
        return r;
    }
    static Mp from_rat(const Rat& x) { return raw(ModScope::field().from_rat(x)); }

    friend Mp operator+(Mp a, Mp b) { return raw(ModScope::field().add(a.v, b.v)); }
    friend Mp operator-(Mp a, Mp b) { return raw(ModScope::field().sub(a.v, b.v)); }
    friend Mp operator*(Mp a, Mp b) { return raw(ModScope::field().mul(a.v, b.v)); }
    friend Mp operator/(Mp a, Mp b) { return raw(ModScope::field().div(a.v, b.v)); }
    Mp operator-() const { return raw(ModScope::field().neg(v)); }
    Mp& operator+=(Mp o) { return *this = *this + o; }
    Mp& operator-=(Mp o) { return *this = *this - o; }
    Mp& operator*=(Mp o) { return *this = *this * o; }
    bool operator==(Mp o) const { return v == o.v; }
    bool operator!=(Mp o) const { return v != o.v; }
};

inline bool is_zero(Mp x) { return x.v == 0; }
inline Mp divexact(Mp a, Mp b) { return a / b; }
inline Mp divide_by_long(Mp x, long k) { return x / Mp(k); }
inline Mp scalar_mul_long(Mp x, long v) { return x * Mp(v); }
inline Mp scalar_scale(Mp x, const Rat& c) { return x * Mp::from_rat(c); }

} // namespace mwx

#endif
