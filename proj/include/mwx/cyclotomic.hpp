// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_CYCLOTOMIC_HPP
#define MWX_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "mwx/rational.hpp"
#include "mwx/unipoly.hpp"

namespace mwx {

// Element of Q(zeta_m), represented by its coefficient vector in
// Q[x]/(Phi_m(x)), always reduced mod Phi_m. Order 1 is plain Q.
// Arithmetic between different orders promotes both operands to the lcm;
// orders are capped at 60, which covers every root of unity in the
// degeneration tables with room to spare.
class Cyclo {
public:
    static constexpr unsigned order_cap = 60;

    Cyclo() : m_(1), c_(1, Rat(0)) {}
    Cyclo(const Rat& x) : m_(1), c_(1, x) {} // NOLINT: implicit promotion intended
    Cyclo(const Int& x) : m_(1), c_(1, Rat(x)) {}
    Cyclo(long x) : m_(1), c_(1, Rat(x)) {}
    explicit Cyclo(unsigned order, std::vector<Rat> coeffs);

    static Cyclo zeta(unsigned m); // primitive m-th root of unity
    static Cyclo i() { return zeta(4); }

    unsigned order() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero_elt() const;
    bool is_rational() const; // lies in Q (all non-constant coordinates zero)
    Rat rational_part() const; // requires is_rational()

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);

    Cyclo inverse() const;
    Cyclo pow(long e) const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    bool operator==(const Rat& o) const { return *this == Cyclo(o); }

    std::string to_string() const;

private:
    // Promote into Q(zeta_target); requires order | target.
    Cyclo promoted(unsigned target) const;
    static unsigned common_order(unsigned a, unsigned b);

    unsigned m_;
    std::vector<Rat> c_;
};

inline bool is_zero(const Cyclo& x) { return x.is_zero_elt(); }
Cyclo divide_by_long(const Cyclo& x, long k);
inline Cyclo scalar_mul_long(const Cyclo& x, long v) { return x * Cyclo(v); }
inline Cyclo scalar_scale(const Cyclo& x, const Rat& c) { return x * Cyclo(c); }
inline Rat divide_by_long(const Rat& x, long k) { return x / Rat(k); }

} // namespace mwx

#endif
