// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_LAURENT_HPP
#define MWX_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <vector>

#include "mwx/cyclotomic.hpp"
#include "mwx/rational.hpp"
#include "mwx/weyl.hpp"

namespace mwx {

// Term cap shared by all Laurent polynomials (explicit overflow error).
std::size_t laurent_term_cap();
void set_laurent_term_cap(std::size_t cap);

inline std::string coeff_to_string(const Rat& x) { return rat_to_string(x); }
inline std::string coeff_to_string(const Int& x) { return x.str(); }

inline Int divide_by_long(const Int& x, long k) {
    MWX_CHECK(k != 0, "division by zero");
    Int q = x / k;
    if (q * k != x) throw degenerate_error("integer division not exact");
    return q;
}

// Point on the torus hypersurface s_1 ... s_n = r^3, entries in Q or Q(zeta).
template <class T>
struct TorusPoint {
    Case cs;
    std::vector<T> s; // n entries
    T r;

    TorusPoint(Case cs_, std::vector<T> s_, T r_) : cs(cs_), s(std::move(s_)), r(std::move(r_)) {
        const int n = rank_of(cs);
        if (static_cast<int>(s.size()) != n) throw input_error("torus point: wrong length");
        T prod(1);
        for (const auto& x : s) {
            if (is_zero(x)) throw input_error("torus point: zero coordinate");
            prod *= x;
        }
        if (is_zero(r)) throw input_error("torus point: zero coordinate");
        if (!(prod == r * r * r)) throw input_error("torus point: s_1...s_n != r^3");
    }

    // From the table layout (s_1..s_{n-1}, r); s_n is forced by the relation.
    static TorusPoint from_partial(Case cs_, std::vector<T> head, T r_) {
        if (static_cast<int>(head.size()) != rank_of(cs_) - 1)
            throw input_error("torus point: need n-1 leading coordinates");
        T prod(1);
        for (const auto& x : head) {
            if (is_zero(x)) throw input_error("torus point: zero coordinate");
            prod *= x;
        }
        T last = r_ * r_ * r_ / prod;
        head.push_back(last);
        return TorusPoint(cs_, std::move(head), std::move(r_));
    }
};

inline Rat scalar_pow(const Rat& x, long e) { return rat_pow(x, e); }
inline Cyclo scalar_pow(const Cyclo& x, long e) { return x.pow(e); }

// Value of the monomial with exponent vector e at a torus point.
template <class T>
T eval_monomial(const ExpVec& e, const TorusPoint<T>& xi) {
    const int n = e.rank();
    T acc(1);
    for (int i = 0; i < n; ++i) {
        if (e.coord(i) == 0) continue;
        const T& base = i == n - 1 ? xi.r : xi.s[static_cast<std::size_t>(i)];
        acc *= scalar_pow(base, e.coord(i));
    }
    return acc;
}

// Sparse Laurent polynomial with exponents in the weight lattice basis
// (v_1..v_{n-1}, u); terms are kept sorted by the packed exponent key,
// which is also the serialization order. C is Int or Rat.
template <class C>
class LaurentT {
public:
    using Term = std::pair<std::uint64_t, C>;

    explicit LaurentT(Case cs) : cs_(cs) {}

    static LaurentT zero(Case cs) { return LaurentT(cs); }
    static LaurentT constant(Case cs, C v) {
        LaurentT r(cs);
        if (!is_zero(v)) r.t_.emplace_back(ExpVec::zero(cs).pack(), std::move(v));
        return r;
    }
    static LaurentT monomial(const ExpVec& e, C v) {
        LaurentT r(e.cs);
        if (!is_zero(v)) r.t_.emplace_back(e.pack(), std::move(v));
        return r;
    }
    static LaurentT orbit_sum(Case cs, const OrbitMultiset& orb) {
        LaurentT r(cs);
        r.t_.reserve(orb.size());
        for (const auto& w : orb) r.t_.emplace_back(w.pack(), C(1));
        r.normalize();
        return r;
    }
    // Sum of k-th powers of the orbit monomials (exponents scaled by k).
    static LaurentT orbit_power_sum(Case cs, const OrbitMultiset& orb, int k) {
        LaurentT r(cs);
        r.t_.reserve(orb.size());
        for (const auto& w : orb) {
            ExpVec e = w;
            for (int i = 0; i < e.rank(); ++i) {
                const int x = e.coord(i) * k;
                if (std::abs(x) > ExpVec::coord_cap) throw budget_error("exponent coordinate overflow");
                e.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(x);
            }
            r.t_.emplace_back(e.pack(), C(1));
        }
        r.normalize();
        return r;
    }

    Case case_tag() const { return cs_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero_poly() const { return t_.empty(); }

    C coeff_of(const ExpVec& e) const {
        const std::uint64_t k = e.pack();
        auto it = std::lower_bound(t_.begin(), t_.end(), k,
                                   [](const Term& t, std::uint64_t key) { return t.first < key; });
        if (it == t_.end() || it->first != k) return C(0);
        return it->second;
    }
    C constant_term() const { return coeff_of(ExpVec::zero(cs_)); }

    bool operator==(const LaurentT& o) const { return cs_ == o.cs_ && t_ == o.t_; }
    bool operator!=(const LaurentT& o) const { return !(*this == o); }

    LaurentT operator-() const {
        LaurentT r = *this;
        for (auto& [k, v] : r.t_) v = -v;
        return r;
    }

    friend LaurentT operator+(const LaurentT& a, const LaurentT& b) { return merged(a, b, false); }
    friend LaurentT operator-(const LaurentT& a, const LaurentT& b) { return merged(a, b, true); }
    LaurentT& operator+=(const LaurentT& o) { return *this = *this + o; }
    LaurentT& operator-=(const LaurentT& o) { return *this = *this - o; }

    LaurentT scaled(const C& v) const {
        if (is_zero(v)) return LaurentT(cs_);
        LaurentT r = *this;
        for (auto& [k, c] : r.t_) c = c * v;
        return r;
    }

    friend LaurentT operator*(const LaurentT& a, const LaurentT& b) {
        MWX_CHECK(a.cs_ == b.cs_, "mixed cases");
        if (a.t_.empty() || b.t_.empty()) return LaurentT(a.cs_);
        const bool a_small = a.t_.size() <= b.t_.size();
        const LaurentT& small = a_small ? a : b;
        const LaurentT& big = a_small ? b : a;
        if (small.t_.size() <= 128) return mul_merge(small, big);
        return mul_hash(a, b);
    }
    LaurentT& operator*=(const LaurentT& o) { return *this = *this * o; }

    LaurentT divided_by_long(long k) const {
        LaurentT r = *this;
        for (auto& [key, v] : r.t_) v = divide_by_long(v, k);
        return r;
    }

    template <class T>
    T eval(const TorusPoint<T>& xi) const {
        MWX_CHECK(xi.cs == cs_, "mixed cases");
        const int n = rank_of(cs_);
        // Memoized coordinate powers; exponents are small.
        std::vector<std::unordered_map<int, T>> pows(static_cast<std::size_t>(n));
        auto coord_pow = [&](int i, int e) -> const T& {
            auto& m = pows[static_cast<std::size_t>(i)];
            auto it = m.find(e);
            if (it == m.end()) {
                const T& base = i == n - 1 ? xi.r : xi.s[static_cast<std::size_t>(i)];
                it = m.emplace(e, scalar_pow(base, e)).first;
            }
            return it->second;
        };
        T acc(0);
        for (const auto& [key, v] : t_) {
            const ExpVec e = ExpVec::unpack(cs_, key);
            T term(v);
            for (int i = 0; i < n; ++i)
                if (e.coord(i) != 0) term *= coord_pow(i, e.coord(i));
            acc += term;
        }
        return acc;
    }

    LaurentT apply_map(const LatticeMap& m) const {
        MWX_CHECK(m.cs == cs_, "mixed cases");
        const long d = m.det();
        if (d != 1 && d != -1) throw input_error("apply_map: non-unimodular lattice map");
        LaurentT r(cs_);
        r.t_.reserve(t_.size());
        for (const auto& [key, v] : t_) r.t_.emplace_back(m.apply(ExpVec::unpack(cs_, key)).pack(), v);
        std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        r.normalize_sorted();
        return r;
    }

    std::vector<std::pair<ExpVec, C>> unpacked_terms() const {
        std::vector<std::pair<ExpVec, C>> out;
        out.reserve(t_.size());
        for (const auto& [k, v] : t_) out.emplace_back(ExpVec::unpack(cs_, k), v);
        return out;
    }

    template <class D>
    LaurentT<D> converted() const {
        LaurentT<D> r(cs_);
        for (const auto& [k, v] : t_) r.raw_terms().emplace_back(k, D(v));
        return r;
    }

    std::vector<Term>& raw_terms() { return t_; } // caller keeps sort order
    void renormalize() { normalize(); }

private:
    static constexpr std::uint64_t bias_key(Case cs) {
        std::uint64_t b = 0;
        for (int i = 0; i < rank_of(cs); ++i) b = (b << 8) | 64u;
        return b;
    }
    // Key addition: valid whenever every per-coordinate sum stays within
    // the +-31 cap, which keeps each byte carry-free.
    static std::uint64_t key_add(std::uint64_t a, std::uint64_t b, std::uint64_t bias) {
        const std::uint64_t s = a + b - bias;
        // Every byte of a and b is in [33,95]; sums-minus-64 land in [2,126],
        // so a byte of s above 127 can only mean a coordinate overflow.
        if ((s & 0x8080808080808080ull) != 0) throw budget_error("exponent coordinate overflow");
        return s;
    }

    void check_cap(std::size_t n) const {
        if (n > laurent_term_cap()) throw budget_error("laurent term cap exceeded");
    }

    static LaurentT merged(const LaurentT& a, const LaurentT& b, bool subtract) {
        MWX_CHECK(a.cs_ == b.cs_, "mixed cases");
        LaurentT r(a.cs_);
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
        r.check_cap(r.t_.size());
        return r;
    }

    // K-way merge of the shifted copies of `big`, one per term of `small`.
    static LaurentT mul_merge(const LaurentT& small, const LaurentT& big) {
        const std::uint64_t bias = bias_key(small.cs_);
        struct Node {
            std::uint64_t key;
            std::uint32_t list;
            std::uint32_t pos;
        };
        auto cmp = [](const Node& x, const Node& y) { return x.key > y.key; };
        std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
        const std::size_t k = small.t_.size();
        for (std::uint32_t l = 0; l < k; ++l)
            heap.push({key_add(small.t_[l].first, big.t_[0].first, bias), l, 0});
        LaurentT r(small.cs_);
        r.t_.reserve(big.t_.size() + small.t_.size());
        while (!heap.empty()) {
            const Node n = heap.top();
            heap.pop();
            C v = small.t_[n.list].second * big.t_[n.pos].second;
            if (!r.t_.empty() && r.t_.back().first == n.key) {
                r.t_.back().second += v;
                if (is_zero(r.t_.back().second)) r.t_.pop_back();
            } else {
                if (!is_zero(v)) {
                    r.t_.emplace_back(n.key, std::move(v));
                    r.check_cap(r.t_.size());
                }
            }
            if (n.pos + 1 < big.t_.size())
                heap.push({key_add(small.t_[n.list].first, big.t_[n.pos + 1].first, bias), n.list, n.pos + 1});
        }
        return r;
    }

    static LaurentT mul_hash(const LaurentT& a, const LaurentT& b) {
        const std::uint64_t bias = bias_key(a.cs_);
        std::unordered_map<std::uint64_t, C> acc;
        acc.reserve(a.t_.size() + b.t_.size());
        for (const auto& [ka, va] : a.t_)
            for (const auto& [kb, vb] : b.t_) acc[key_add(ka, kb, bias)] += va * vb;
        LaurentT r(a.cs_);
        r.t_.reserve(acc.size());
        for (auto& [k, v] : acc)
            if (!is_zero(v)) r.t_.emplace_back(k, std::move(v));
        std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        r.check_cap(r.t_.size());
        return r;
    }

    void normalize() {
        std::sort(t_.begin(), t_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        normalize_sorted();
    }
    void normalize_sorted() {
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& [k, v] : t_) {
            if (!out.empty() && out.back().first == k) out.back().second += v;
            else out.emplace_back(k, std::move(v));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return is_zero(t.second); }),
                  out.end());
        t_ = std::move(out);
        check_cap(t_.size());
    }

    Case cs_;
    std::vector<Term> t_;
};

template <class C>
bool is_zero(const LaurentT<C>& p) { return p.is_zero_poly(); }

using Laurent = LaurentT<Rat>;
using LaurentZ = LaurentT<Int>;

// Division with exact quotient under graded-lex order on the shifted
// (polynomial-support) exponents; throws degenerate_error("not divisible")
// when no exact quotient exists.
template <class C>
LaurentT<C> exact_divide(const LaurentT<C>& f, const LaurentT<C>& g);

// Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i. Works
// in any commutative ring with exact division by integers.
template <class S>
std::vector<S> elementary_from_power_sums(const std::vector<S>& p, const S& one_like) {
    std::vector<S> e;
    e.reserve(p.size() + 1);
    S one = one_like;
    e.push_back(one); // e_0 = 1
    for (std::size_t k = 1; k <= p.size(); ++k) {
        S acc = e[k - 1] * p[0];
        for (std::size_t i = 2; i <= k; ++i) {
            S term = e[k - i] * p[i - 1];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        e.push_back(divide_by_long(acc, static_cast<long>(k)));
    }
    return e; // e[0..k]
}

template <class C>
LaurentT<C> divide_by_long(const LaurentT<C>& x, long k) { return x.divided_by_long(k); }

template <class C>
LaurentT<C> scalar_mul_long(const LaurentT<C>& x, long v) { return x.scaled(C(v)); }
inline Laurent scalar_scale(const Laurent& x, const Rat& c) { return x.scaled(c); }

} // namespace mwx

#endif
