// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_MPOLY_HPP
#define MWX_MPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mwx/error.hpp"
#include "mwx/rational.hpp"
#include "mwx/unipoly.hpp"

namespace mwx {

// Sparse multivariate polynomial in up to 8 variables with nonnegative
// exponents below 2^15, packed 16 bits per variable into a 128-bit key.
// Coefficients C are Rat for the symbolic side and the thread-modulus
// scalars for modular runs. Terms are kept sorted by packed key.
template <class C>
class MPoly {
public:
    using Key = unsigned __int128;
    using Term = std::pair<Key, C>;

    MPoly() = default;
    explicit MPoly(long v) {
        if (v != 0) t_.emplace_back(0, C(v));
        strip_zeros();
    }

    static MPoly constant(C v) {
        MPoly r;
        if (!is_zero(v)) r.t_.emplace_back(0, std::move(v));
        return r;
    }
    static MPoly var(int slot, int exp = 1) {
        MWX_CHECK(slot >= 0 && slot < 8, "variable slot out of range");
        MPoly r;
        r.t_.emplace_back(key_of(slot, exp), C(1));
        return r;
    }
    static Key key_of(int slot, int exp) {
        MWX_CHECK(exp >= 0 && exp < (1 << 15), "exponent out of range");
        return static_cast<Key>(exp) << (16 * slot);
    }
    static int key_exp(Key k, int slot) { return static_cast<int>((k >> (16 * slot)) & 0xffff); }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero_poly() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    C constant_value() const {
        if (t_.empty()) return C(0);
        MWX_CHECK(is_constant(), "not a constant polynomial");
        return t_[0].second;
    }

    int degree(int slot) const {
        int d = -1;
        for (const auto& [k, v] : t_) d = std::max(d, key_exp(k, slot));
        return t_.empty() ? -1 : d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, v] : t_) {
            int s = 0;
            for (int i = 0; i < 8; ++i) s += key_exp(k, i);
            d = std::max(d, s);
        }
        return d;
    }

    // Coefficient of slot^e as a polynomial in the remaining variables.
    MPoly coeff_of(int slot, int e) const {
        MPoly r;
        for (const auto& [k, v] : t_)
            if (key_exp(k, slot) == e) r.t_.emplace_back(k - key_of(slot, e), v);
        std::sort(r.t_.begin(), r.t_.end(), key_less);
        return r;
    }
    MPoly lc(int slot) const { return coeff_of(slot, degree(slot)); }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [k, v] : r.t_) v = -v;
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merged(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merged(a, b, true); }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

    struct KeyHash {
        std::size_t operator()(Key k) const {
            const std::uint64_t lo = static_cast<std::uint64_t>(k);
            const std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
            return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ull));
        }
    };

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.t_.empty() || b.t_.empty()) return {};
        std::unordered_map<Key, C, KeyHash> acc;
        acc.reserve(a.t_.size() * 2);
        for (const auto& [ka, va] : a.t_)
            for (const auto& [kb, vb] : b.t_) acc[key_add(ka, kb)] += va * vb;
        MPoly r;
        r.t_.reserve(acc.size());
        for (auto& [k, v] : acc)
            if (!is_zero(v)) r.t_.emplace_back(k, std::move(v));
        std::sort(r.t_.begin(), r.t_.end(), key_less);
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const C& v) const {
        if (is_zero(v)) return {};
        MPoly r = *this;
        for (auto& [k, c] : r.t_) c = c * v;
        r.strip_zeros();
        return r;
    }

    MPoly pow(int e) const {
        MPoly r(1);
        MPoly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            if ((e >>= 1)) b *= b;
        }
        return r;
    }

    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Partial evaluation of one variable.
    MPoly eval_var(int slot, const C& x) const {
        MPoly r;
        std::unordered_map<Key, C, KeyHash> acc;
        for (const auto& [k, v] : t_) {
            const int e = key_exp(k, slot);
            C p = v;
            for (int i = 0; i < e; ++i) p = p * x;
            acc[k - key_of(slot, e)] += p;
        }
        for (auto& [k, v] : acc)
            if (!is_zero(v)) r.t_.emplace_back(k, std::move(v));
        std::sort(r.t_.begin(), r.t_.end(), key_less);
        return r;
    }

    // Full evaluation; xs[i] substitutes slot i.
    C eval_all(std::span<const C> xs) const {
        C acc(0);
        for (const auto& [k, v] : t_) {
            C term = v;
            for (int i = 0; i < 8; ++i) {
                const int e = key_exp(k, i);
                for (int j = 0; j < e; ++j) term = term * xs[static_cast<std::size_t>(i)];
            }
            acc += term;
        }
        return acc;
    }

    // var := B / A (A, B free of var): returns A^deg * P|_{var=B/A}.
    MPoly subst_ratio(int slot, const MPoly& a, const MPoly& b) const {
        const int d = degree(slot);
        if (d <= 0) return *this;
        MPoly r;
        std::vector<MPoly> apow(static_cast<std::size_t>(d) + 1), bpow(static_cast<std::size_t>(d) + 1);
        apow[0] = MPoly(1);
        bpow[0] = MPoly(1);
        for (int i = 1; i <= d; ++i) {
            apow[static_cast<std::size_t>(i)] = apow[static_cast<std::size_t>(i - 1)] * a;
            bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * b;
        }
        for (int i = 0; i <= d; ++i) {
            const MPoly ci = coeff_of(slot, i);
            if (ci.is_zero_poly()) continue;
            r += ci * bpow[static_cast<std::size_t>(i)] * apow[static_cast<std::size_t>(d - i)];
        }
        return r;
    }

    // var := (alpha*var + beta) / (gamma*var + delta), homogenized by the
    // denominator to degree deg(var).
    MPoly subst_mobius(int slot, long alpha, long beta, long gamma, long delta) const {
        const int d = degree(slot);
        if (d <= 0) return *this;
        const MPoly x = var(slot);
        const MPoly numer = x.scaled(C(alpha)) + MPoly(beta);
        const MPoly denom = x.scaled(C(gamma)) + MPoly(delta);
        std::vector<MPoly> npow(static_cast<std::size_t>(d) + 1), dpow(static_cast<std::size_t>(d) + 1);
        npow[0] = MPoly(1);
        dpow[0] = MPoly(1);
        for (int i = 1; i <= d; ++i) {
            npow[static_cast<std::size_t>(i)] = npow[static_cast<std::size_t>(i - 1)] * numer;
            dpow[static_cast<std::size_t>(i)] = dpow[static_cast<std::size_t>(i - 1)] * denom;
        }
        MPoly r;
        for (int i = 0; i <= d; ++i) {
            const MPoly ci = coeff_of(slot, i);
            if (ci.is_zero_poly()) continue;
            r += ci * npow[static_cast<std::size_t>(i)] * dpow[static_cast<std::size_t>(d - i)];
        }
        return r;
    }

    // var := product of other variables with given exponents (e.g. d = a*r).
    MPoly subst_monomial(int slot, Key replacement) const {
        MPoly r;
        for (const auto& [k, v] : t_) {
            const int e = key_exp(k, slot);
            Key nk = k - key_of(slot, e);
            for (int i = 0; i < e; ++i) nk = key_add(nk, replacement);
            r.t_.emplace_back(nk, v);
        }
        std::sort(r.t_.begin(), r.t_.end(), key_less);
        r.combine_sorted();
        return r;
    }

    // Remove the monomial content in one variable (divide by var^min).
    int strip_var_content(int slot) {
        if (t_.empty()) return 0;
        int mn = 1 << 20;
        for (const auto& [k, v] : t_) mn = std::min(mn, key_exp(k, slot));
        if (mn == 0) return 0;
        for (auto& [k, v] : t_) k -= key_of(slot, mn);
        std::sort(t_.begin(), t_.end(), key_less);
        return mn;
    }

    // View as a univariate polynomial in `slot` with MPoly coefficients.
    UniPoly<MPoly> as_unipoly(int slot) const {
        std::vector<MPoly> c(static_cast<std::size_t>(degree(slot)) + 1);
        if (t_.empty()) return UniPoly<MPoly>{};
        for (const auto& [k, v] : t_) {
            const int e = key_exp(k, slot);
            c[static_cast<std::size_t>(e)].t_.emplace_back(k - key_of(slot, e), v);
        }
        for (auto& p : c) std::sort(p.t_.begin(), p.t_.end(), key_less);
        return UniPoly<MPoly>(std::move(c));
    }

    // Univariate view when only `slot` occurs.
    UniPoly<C> as_scalar_unipoly(int slot) const {
        std::vector<C> c(static_cast<std::size_t>(std::max(degree(slot), 0)) + 1, C(0));
        for (const auto& [k, v] : t_) {
            MWX_CHECK(k == key_of(slot, key_exp(k, slot)), "poly is not univariate");
            c[static_cast<std::size_t>(key_exp(k, slot))] = v;
        }
        return UniPoly<C>(std::move(c));
    }

    MPoly divided_by_long(long k) const {
        MPoly r = *this;
        for (auto& [key, v] : r.t_) v = divide_by_long(v, k);
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    static bool key_less(const Term& a, const Term& b) { return a.first < b.first; }
    static Key key_add(Key a, Key b) {
        const Key s = a + b;
        const Key mask = (static_cast<Key>(0x8000800080008000ull) << 64) | 0x8000800080008000ull;
        if ((s & mask) != 0) throw budget_error("mpoly exponent overflow");
        return s;
    }
    void strip_zeros() {
        t_.erase(std::remove_if(t_.begin(), t_.end(), [](const Term& t) { return is_zero(t.second); }),
                 t_.end());
    }
    void combine_sorted() {
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& [k, v] : t_) {
            if (!out.empty() && out.back().first == k) out.back().second += v;
            else out.emplace_back(k, std::move(v));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return is_zero(t.second); }),
                  out.end());
        t_ = std::move(out);
    }

    static MPoly merged(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
                r.t_.push_back(b.t_[j]);
                if (subtract) r.t_.back().second = -r.t_.back().second;
                ++j;
            } else {
                C v = subtract ? C(a.t_[i].second - b.t_[j].second) : C(a.t_[i].second + b.t_[j].second);
                if (!is_zero(v)) r.t_.emplace_back(a.t_[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> t_;
};

template <class C>
bool is_zero(const MPoly<C>& p) { return p.is_zero_poly(); }

using MPolyQ = MPoly<Rat>;

template <class C>
MPoly<C> divide_by_long(const MPoly<C>& p, long k) { return p.divided_by_long(k); }

inline MPolyQ scalar_mul_long(const MPolyQ& x, long v) { return x.scaled(Rat(v)); }
inline MPolyQ scalar_scale(const MPolyQ& x, const Rat& c) { return x.scaled(c); }

// Multivariate blackbox reconstruction on a tensor grid: per-variable
// degree bounds, integer grid nodes offset+0..offset+m_i, oracle called
// with full coordinate tuples. The caller validates grid genericity and
// picks a new offset on failure.
MPolyQ lagrange_reconstruct(const std::function<Rat(const std::vector<Rat>&)>& oracle,
                            const std::vector<int>& degree_bounds, long grid_offset = 0);

} // namespace mwx

#endif
