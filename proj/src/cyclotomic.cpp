// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace mwx {

namespace {

QPoly as_poly(const std::vector<Rat>& c) { return QPoly(std::vector<Rat>(c)); }

std::vector<Rat> reduced_coeffs(unsigned m, const QPoly& f) {
    const QPoly phi = cyclotomic_poly(m);
    QPoly r = divrem(f, phi).second;
    std::vector<Rat> c(static_cast<std::size_t>(phi.degree()), Rat(0));
    for (int i = 0; i < phi.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
    return c;
}

} // namespace

Cyclo::Cyclo(unsigned order, std::vector<Rat> coeffs) : m_(order) {
    if (order == 0 || order > order_cap)
        throw input_error("cyclotomic order out of range (1..60)");
    c_ = reduced_coeffs(order, QPoly(std::move(coeffs)));
}

Cyclo Cyclo::zeta(unsigned m) {
    if (m == 0 || m > order_cap) throw input_error("cyclotomic order out of range (1..60)");
    std::vector<Rat> c(2, Rat(0));
    c[1] = Rat(1);
    return Cyclo(m, std::move(c));
}

bool Cyclo::is_zero_elt() const {
    for (const auto& x : c_)
        if (!mwx::is_zero(x)) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!mwx::is_zero(c_[i])) return false;
    return true;
}

Rat Cyclo::rational_part() const {
    MWX_CHECK(is_rational(), "cyclotomic element is not rational");
    return c_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

unsigned Cyclo::common_order(unsigned a, unsigned b) {
    const unsigned l = std::lcm(a, b);
    if (l > order_cap)
        throw input_error("cyclotomic order " + std::to_string(l) + " above cap 60");
    return l;
}

Cyclo Cyclo::promoted(unsigned target) const {
    if (target == m_) return *this;
    MWX_CHECK(target % m_ == 0, "promotion requires divisible orders");
    const unsigned k = target / m_;
    // zeta_m = zeta_target^k, so substitute x -> x^k.
    std::vector<Rat> big;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const std::size_t pos = i * k;
        if (big.size() <= pos) big.resize(pos + 1, Rat(0));
        big[pos] = c_[i];
    }
    Cyclo r;
    r.m_ = target;
    r.c_ = reduced_coeffs(target, QPoly(std::move(big)));
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    const unsigned m = Cyclo::common_order(a.m_, b.m_);
    const Cyclo x = a.promoted(m), y = b.promoted(m);
    Cyclo r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += y.c_[i];
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const unsigned m = Cyclo::common_order(a.m_, b.m_);
    const Cyclo x = a.promoted(m), y = b.promoted(m);
    Cyclo r;
    r.m_ = m;
    r.c_ = reduced_coeffs(m, as_poly(x.c_) * as_poly(y.c_));
    return r;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::inverse() const {
    if (is_zero_elt()) throw degenerate_error("inverse of zero cyclotomic element");
    // Extended Euclid against Phi_m; Phi_m is irreducible over Q so the gcd
    // is a nonzero constant.
    const QPoly phi = cyclotomic_poly(m_);
    QPoly r0 = phi, r1 = as_poly(c_);
    QPoly s0{}, s1{Rat(1)};
    while (!r1.is_zero_poly() && r1.degree() > 0) {
        auto [q, r2] = divrem(r0, r1);
        QPoly s2 = s0 - q * s1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    MWX_CHECK(!r1.is_zero_poly(), "cyclotomic inverse: zero divisor");
    const QPoly inv = s1.scaled(Rat(1) / r1.coeff(0));
    Cyclo out;
    out.m_ = m_;
    out.c_ = reduced_coeffs(m_, inv);
    return out;
}

Cyclo Cyclo::pow(long e) const {
    Cyclo base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Cyclo r(Rat(1));
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
    const unsigned m = common_order(m_, o.m_);
    return promoted(m).c_ == o.promoted(m).c_;
}

std::string Cyclo::to_string() const {
    if (is_rational()) return rat_to_string(c_[0]);
    std::ostringstream os;
    os << "[" << m_ << ";";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(c_[i]);
    }
    os << "]";
    return os.str();
}

Cyclo divide_by_long(const Cyclo& x, long k) {
    MWX_CHECK(k != 0, "division by zero");
    return x * Cyclo(Rat(1, k));
}

} // namespace mwx
