// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_UNIPOLY_HPP
#define MWX_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mwx/error.hpp"
#include "mwx/rational.hpp"

namespace mwx {

template <class S> class UniPoly;
template <class S> bool is_zero(const UniPoly<S>& p);

// Dense univariate polynomial over an exact scalar ring S (Rat for most
// uses; UniPoly<Rat> itself for bivariate work). Coefficient vector is
// kept trimmed: no stored leading zero, the zero polynomial has an empty
// vector and degree -1.
template <class S>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(long v) { c_.push_back(S(v)); trim(); }
    explicit UniPoly(std::vector<S> c) : c_(std::move(c)) { trim(); }
    UniPoly(std::initializer_list<S> c) : c_(c) { trim(); }

    static UniPoly constant(S v) {
        UniPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static UniPoly monomial(int k, S v) {
        UniPoly p;
        if (!is_zero(v)) {
            p.c_.assign(static_cast<std::size_t>(k) + 1, S{});
            p.c_.back() = std::move(v);
        }
        return p;
    }
    static UniPoly x() { return monomial(1, S(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    const S& lc() const {
        MWX_CHECK(!c_.empty(), "lc of zero polynomial");
        return c_.back();
    }
    S coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return S{};
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<S>& coeffs() const { return c_; }

    // Valuation at 0 (largest k with x^k | f); -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), S{});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), S{});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const S& v) const {
        if (is_zero(v)) return {};
        UniPoly r = *this;
        for (auto& e : r.c_) e = e * v;
        r.trim();
        return r;
    }

    UniPoly shifted(int k) const { // multiply by x^k (k >= 0)
        if (c_.empty() || k == 0) return *this;
        UniPoly r;
        r.c_.assign(c_.size() + static_cast<std::size_t>(k), S{});
        std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
        return r;
    }

    // x^d * f(1/x) for d >= deg f.
    UniPoly reversed(int d) const {
        MWX_CHECK(d >= degree(), "reversed: degree raise required");
        std::vector<S> r(static_cast<std::size_t>(d) + 1, S{});
        for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(d) - i] = c_[i];
        return UniPoly(std::move(r));
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    template <class T>
    T eval(const T& x) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> r(c_.size() - 1, S{});
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * S(static_cast<long>(i));
        return UniPoly(std::move(r));
    }

    // f(x + a)
    UniPoly translated(const S& a) const {
        UniPoly r;
        const UniPoly lin{a, S(1)};
        for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

template <class S>
bool is_zero(const UniPoly<S>& p) { return p.is_zero_poly(); }

using QPoly = UniPoly<Rat>;
using QQPoly = UniPoly<QPoly>; // bivariate: outer variable with QPoly coefficients

// --- exact division -------------------------------------------------------

inline Rat divexact(const Rat& a, const Rat& b) {
    if (is_zero(b)) throw degenerate_error("division by zero scalar");
    return a / b;
}

// Quotient and remainder; requires the leading coefficient of g to be
// invertible in S (S a field for our instantiations).
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divrem(const UniPoly<S>& f, const UniPoly<S>& g) {
    if (g.is_zero_poly()) throw degenerate_error("divrem by zero polynomial");
    if (f.degree() < g.degree()) return {UniPoly<S>{}, f};
    std::vector<S> r(f.coeffs());
    const int dg = g.degree();
    std::vector<S> q(static_cast<std::size_t>(f.degree() - dg) + 1, S{});
    for (int k = f.degree(); k >= dg; --k) {
        S c = r[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        c = divexact(c, g.lc());
        q[static_cast<std::size_t>(k - dg)] = c;
        for (int j = 0; j <= dg; ++j)
            r[static_cast<std::size_t>(k - dg + j)] -= c * g.coeff(j);
    }
    return {UniPoly<S>(std::move(q)), UniPoly<S>(std::move(r))};
}

// Exact division in S[x]; throws when the division leaves a remainder.
template <class S>
UniPoly<S> divexact(const UniPoly<S>& f, const UniPoly<S>& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero_poly()) throw degenerate_error("polynomial division not exact");
    return q;
}

template <class S>
UniPoly<S> gcd_monic(UniPoly<S> a, UniPoly<S> b) {
    while (!b.is_zero_poly()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    return a.scaled(divexact(S(1), a.lc()));
}

template <class S>
UniPoly<S> poly_pow(const UniPoly<S>& f, long e) {
    UniPoly<S> r = UniPoly<S>::constant(S(1));
    UniPoly<S> b = f;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// --- named operations -----------------------------------------------------

// Yun decomposition: pairwise-coprime squarefree factors with multiplicities,
// f = lc * prod factor^mult, factors monic, multiplicities increasing.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

// Square root in Q[t] under the convention that the result has positive
// leading coefficient; throws degenerate_error("not a square") otherwise.
QPoly poly_sqrt(const QPoly& f);

// m-th cyclotomic polynomial over Q.
QPoly cyclotomic_poly(unsigned m);

// Newton interpolation through (xs[i], ys[i]) with distinct xs.
template <class S>
UniPoly<S> interpolate(const std::vector<S>& xs, const std::vector<S>& ys) {
    MWX_CHECK(xs.size() == ys.size() && !xs.empty(), "interpolate: size mismatch");
    const std::size_t n = xs.size();
    std::vector<S> dd(ys); // divided differences, built in place
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = divexact(S(dd[i] - dd[i - 1]), S(xs[i] - xs[i - k]));
            if (i == k) break;
        }
    UniPoly<S> r;
    for (std::size_t i = n; i-- > 0;) {
        const UniPoly<S> lin{-xs[i], S(1)};
        r = r * lin + UniPoly<S>::constant(dd[i]);
    }
    return r;
}

// Determinant by fraction-free (Bareiss) elimination over an integral
// domain R with exact division. Row swaps flip the sign.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    for (const auto& row : m) MWX_CHECK(row.size() == n, "bareiss_det: not square");
    bool negate = false;
    R prev = R(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return R{}; // singular
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divexact(t, prev);
            }
            m[i][k] = R{};
        }
        prev = m[k][k];
    }
    return negate ? R(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

template <class S>
S poly_constant_pow(S base, int e) {
    S r(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

// Sylvester-matrix resultant eliminating the outer variable of f and g;
// entries live in the coefficient ring S. Res(x-a, x-b) = a-b under this
// convention, and specializing the surviving variables commutes with the
// determinant.
template <class S>
S resultant_sylvester(const UniPoly<S>& f, const UniPoly<S>& g) {
    if (f.is_zero_poly() || g.is_zero_poly())
        throw degenerate_error("resultant of zero polynomial");
    const int df = f.degree(), dg = g.degree();
    if (df == 0) return poly_constant_pow(f.coeff(0), dg);
    if (dg == 0) return poly_constant_pow(g.coeff(0), df);
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<S>> m(n, std::vector<S>(n, S{}));
    for (int r = 0; r < dg; ++r)
        for (int j = 0; j <= df; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(df - j);
    for (int r = 0; r < df; ++r)
        for (int j = 0; j <= dg; ++j) m[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + j)] = g.coeff(dg - j);
    return bareiss_det(std::move(m));
}

std::string poly_to_string(const QPoly& f, const std::string& var = "t");

} // namespace mwx

#endif
