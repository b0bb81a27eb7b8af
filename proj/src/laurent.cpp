// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/laurent.hpp"

#include <atomic>
#include <map>

namespace mwx {

namespace {
std::atomic<std::size_t> g_term_cap{5000000};
}

std::size_t laurent_term_cap() { return g_term_cap.load(); }
void set_laurent_term_cap(std::size_t cap) { g_term_cap.store(cap); }

namespace {

Rat divide_coeff(const Rat& a, const Rat& b) { return a / b; }
Int divide_coeff(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw degenerate_error("not divisible");
    return q;
}

using Coords = std::array<int, 8>;

// Graded-lex key on shifted (nonnegative) exponents, descending order in
// the map below means "leading term first".
struct GrlexLess {
    bool operator()(const std::pair<int, Coords>& a, const std::pair<int, Coords>& b) const {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second; // lexicographic, larger first
    }
};

template <class C>
using WorkPoly = std::map<std::pair<int, Coords>, C, GrlexLess>;

template <class C>
LaurentT<C> exact_divide_impl(const LaurentT<C>& f, const LaurentT<C>& g) {
    MWX_CHECK(f.case_tag() == g.case_tag(), "mixed cases");
    const Case cs = f.case_tag();
    const int n = rank_of(cs);
    if (g.is_zero_poly()) throw degenerate_error("division by zero");
    if (f.is_zero_poly()) return LaurentT<C>(cs);

    // Shift both supports to nonnegative coordinates.
    auto min_coords = [&](const LaurentT<C>& p) {
        Coords m{};
        bool first = true;
        for (const auto& [key, v] : p.terms()) {
            const ExpVec e = ExpVec::unpack(cs, key);
            for (int i = 0; i < n; ++i) {
                if (first) m[static_cast<std::size_t>(i)] = e.coord(i);
                else m[static_cast<std::size_t>(i)] = std::min(m[static_cast<std::size_t>(i)], e.coord(i));
            }
            first = false;
        }
        return m;
    };
    const Coords mf = min_coords(f), mg = min_coords(g);

    auto to_work = [&](const LaurentT<C>& p, const Coords& shift) {
        WorkPoly<C> w;
        for (const auto& [key, v] : p.terms()) {
            const ExpVec e = ExpVec::unpack(cs, key);
            Coords csh{};
            int grade = 0;
            for (int i = 0; i < n; ++i) {
                csh[static_cast<std::size_t>(i)] = e.coord(i) - shift[static_cast<std::size_t>(i)];
                grade += csh[static_cast<std::size_t>(i)];
            }
            w.emplace(std::make_pair(grade, csh), v);
        }
        return w;
    };
    WorkPoly<C> fw = to_work(f, mf);
    const WorkPoly<C> gw = to_work(g, mg);

    const auto& glt = *gw.begin();
    std::vector<std::pair<Coords, C>> quotient;
    while (!fw.empty()) {
        const auto flt = *fw.begin();
        Coords qe{};
        int qgrade = flt.first.first - glt.first.first;
        if (qgrade < 0) throw degenerate_error("not divisible");
        for (int i = 0; i < n; ++i) {
            qe[static_cast<std::size_t>(i)] =
                flt.first.second[static_cast<std::size_t>(i)] - glt.first.second[static_cast<std::size_t>(i)];
            if (qe[static_cast<std::size_t>(i)] < 0) throw degenerate_error("not divisible");
        }
        C qc = divide_coeff(flt.second, glt.second);
        // Subtract qc * x^qe * g from f.
        for (const auto& [ge, gv] : gw) {
            Coords se{};
            for (int i = 0; i < n; ++i)
                se[static_cast<std::size_t>(i)] = ge.second[static_cast<std::size_t>(i)] + qe[static_cast<std::size_t>(i)];
            const auto key = std::make_pair(ge.first + qgrade, se);
            auto it = fw.find(key);
            if (it == fw.end()) {
                C nv = -(qc * gv);
                if (!is_zero(nv)) fw.emplace(key, std::move(nv));
            } else {
                it->second -= qc * gv;
                if (is_zero(it->second)) fw.erase(it);
            }
        }
        quotient.emplace_back(qe, std::move(qc));
    }

    // Unshift: quotient exponent = qe + mf - mg.
    LaurentT<C> q(cs);
    for (auto& [qe, qc] : quotient) {
        ExpVec e = ExpVec::zero(cs);
        for (int i = 0; i < n; ++i) {
            const int x = qe[static_cast<std::size_t>(i)] + mf[static_cast<std::size_t>(i)] - mg[static_cast<std::size_t>(i)];
            if (std::abs(x) > ExpVec::coord_cap) throw budget_error("exponent coordinate overflow");
            e.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(x);
        }
        q += LaurentT<C>::monomial(e, qc);
    }
    return q;
}

} // namespace

template <>
Laurent exact_divide<Rat>(const Laurent& f, const Laurent& g) {
    return exact_divide_impl(f, g);
}

template <>
LaurentZ exact_divide<Int>(const LaurentZ& f, const LaurentZ& g) {
    return exact_divide_impl(f, g);
}

} // namespace mwx
