// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mwx/error.hpp"

namespace mwx {

Case case_from_string(const std::string& s) {
    if (s == "e6" || s == "E6") return Case::E6;
    if (s == "e7" || s == "E7") return Case::E7;
    if (s == "e8" || s == "E8") return Case::E8;
    throw input_error("unknown case tag: " + s);
}

std::string case_to_string(Case c) {
    switch (c) {
        case Case::E6: return "e6";
        case Case::E7: return "e7";
        default: return "e8";
    }
}

ExpVec ExpVec::from_vu(Case cs, const std::vector<int>& v, int u) {
    const int n = rank_of(cs);
    MWX_CHECK(static_cast<int>(v.size()) == n, "from_vu: need n v-coefficients");
    ExpVec r{cs, {}};
    const int an = v[static_cast<std::size_t>(n - 1)];
    for (int i = 0; i < n - 1; ++i) {
        const int x = v[static_cast<std::size_t>(i)] - an;
        MWX_CHECK(std::abs(x) <= coord_cap, "exponent coordinate overflow");
        r.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(x);
    }
    const int uu = u + 3 * an;
    MWX_CHECK(std::abs(uu) <= coord_cap, "exponent coordinate overflow");
    r.c[static_cast<std::size_t>(n - 1)] = static_cast<std::int8_t>(uu);
    return r;
}

std::uint64_t ExpVec::pack() const {
    std::uint64_t k = 0;
    for (int i = 0; i < rank(); ++i)
        k = (k << 8) | static_cast<std::uint64_t>(static_cast<int>(c[static_cast<std::size_t>(i)]) + 64);
    return k;
}

ExpVec ExpVec::unpack(Case cs, std::uint64_t key) {
    ExpVec r{cs, {}};
    const int n = rank_of(cs);
    for (int i = n - 1; i >= 0; --i) {
        r.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(static_cast<int>(key & 0xff) - 64);
        key >>= 8;
    }
    return r;
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
    MWX_CHECK(cs == o.cs, "mixed cases");
    ExpVec r{cs, {}};
    for (int i = 0; i < rank(); ++i) {
        const int x = coord(i) + o.coord(i);
        if (std::abs(x) > coord_cap) throw budget_error("exponent coordinate overflow");
        r.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(x);
    }
    return r;
}

ExpVec ExpVec::operator-() const {
    ExpVec r = *this;
    for (int i = 0; i < rank(); ++i) r.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-coord(i));
    return r;
}

std::string ExpVec::to_string() const {
    // Multiplicative form in s_1..s_{n-1}, r.
    std::ostringstream num, den;
    auto emit = [](std::ostringstream& os, const std::string& sym, int e) {
        if (!os.str().empty()) os << "*";
        os << sym;
        if (e != 1) os << "^" << e;
    };
    for (int i = 0; i < rank(); ++i) {
        const int e = coord(i);
        if (e == 0) continue;
        const std::string sym = i == rank() - 1 ? "r" : "s" + std::to_string(i + 1);
        if (e > 0) emit(num, sym, e);
        else emit(den, sym, -e);
    }
    std::string n = num.str().empty() ? "1" : num.str();
    if (den.str().empty()) return n;
    return n + "/(" + den.str() + ")";
}

LatticeMap LatticeMap::identity(Case cs) {
    LatticeMap r{cs, {}};
    for (int i = 0; i < rank_of(cs); ++i) r.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return r;
}

ExpVec LatticeMap::apply(const ExpVec& x) const {
    MWX_CHECK(cs == x.cs, "mixed cases");
    const int n = rank_of(cs);
    ExpVec r{cs, {}};
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = 0; j < n; ++j) acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x.coord(j);
        if (std::abs(acc) > ExpVec::coord_cap) throw budget_error("exponent coordinate overflow");
        r.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(acc);
    }
    return r;
}

LatticeMap LatticeMap::compose(const LatticeMap& o) const {
    MWX_CHECK(cs == o.cs, "mixed cases");
    const int n = rank_of(cs);
    LatticeMap r{cs, {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int k = 0; k < n; ++k)
                acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * o.m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            r.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
    return r;
}

long LatticeMap::det() const {
    const int n = rank_of(cs);
    // Fraction-free elimination on a copy in 64-bit integers.
    std::array<std::array<long, 8>, 8> a{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    long prev = 1;
    bool neg = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(piv)]);
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                     a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
            }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    const long d = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return neg ? -d : d;
}

namespace {

Rat gram_a(Case cs) {
    switch (cs) {
        case Case::E6: return Rat(1, 3);
        case Case::E7: return Rat(1, 2);
        default: return Rat(1);
    }
}

// Gram matrix of the basis (v_1..v_{n-1}, u).
const std::vector<std::vector<Rat>>& gram(Case cs) {
    static std::map<Case, std::vector<std::vector<Rat>>> cache;
    auto it = cache.find(cs);
    if (it != cache.end()) return it->second;
    const int n = rank_of(cs);
    const Rat a = gram_a(cs);
    const Rat vu = (Rat(1) + Rat(n) * a) / 3; // <v_i, u>
    const Rat uu = Rat(n) * vu / 3;           // <u, u>
    std::vector<std::vector<Rat>> g(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat val;
            if (i == n - 1 && j == n - 1) val = uu;
            else if (i == n - 1 || j == n - 1) val = vu;
            else val = (i == j ? Rat(1) + a : a);
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = val;
        }
    return cache.emplace(cs, std::move(g)).first->second;
}

} // namespace

Rat pairing(const ExpVec& x, const ExpVec& y) {
    MWX_CHECK(x.cs == y.cs, "mixed cases");
    const auto& g = gram(x.cs);
    const int n = x.rank();
    Rat acc(0);
    for (int i = 0; i < n; ++i) {
        if (x.coord(i) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (y.coord(j) == 0) continue;
            acc += Rat(x.coord(i)) * Rat(y.coord(j)) * g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return acc;
}

Rat norm2(const ExpVec& x) { return pairing(x, x); }

namespace {

OrbitMultiset sorted_unique(std::vector<ExpVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

OrbitMultiset build_roots(Case cs) {
    const int n = rank_of(cs);
    std::vector<ExpVec> out;
    auto vu = [&](std::initializer_list<int> ones, int u, int sign) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (int i : ones) v[static_cast<std::size_t>(i)] = 1;
        if (sign < 0) {
            for (auto& x : v) x = -x;
            u = -u;
        }
        return ExpVec::from_vu(cs, v, u);
    };
    if (cs == Case::E8) {
        for (int i = 0; i < n; ++i) {
            out.push_back(vu({i}, 0, +1));
            out.push_back(vu({i}, 0, -1));
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) {
                    std::vector<int> v(static_cast<std::size_t>(n), 0);
                    v[static_cast<std::size_t>(i)] = 1;
                    v[static_cast<std::size_t>(j)] = -1;
                    out.push_back(ExpVec::from_vu(cs, v, 0));
                }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                out.push_back(vu({i, j}, -1, +1));
                out.push_back(vu({i, j}, -1, -1));
            }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    out.push_back(vu({i, j, k}, -1, +1));
                    out.push_back(vu({i, j, k}, -1, -1));
                }
    } else if (cs == Case::E7) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            out.push_back(ExpVec::from_vu(cs, v, -1)); // v_i - u
            for (auto& x : v) x = -x;
            out.push_back(ExpVec::from_vu(cs, v, 1)); // u - v_i
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) {
                    std::vector<int> v(static_cast<std::size_t>(n), 0);
                    v[static_cast<std::size_t>(i)] = 1;
                    v[static_cast<std::size_t>(j)] = -1;
                    out.push_back(ExpVec::from_vu(cs, v, 0));
                }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    out.push_back(vu({i, j, k}, -1, +1));
                    out.push_back(vu({i, j, k}, -1, -1));
                }
    } else {
        // E6: +-u, v_i - v_j, +-(v_i + v_j + v_k - u)
        out.push_back(ExpVec::from_vu(cs, std::vector<int>(6, 0), 1));
        out.push_back(ExpVec::from_vu(cs, std::vector<int>(6, 0), -1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) {
                    std::vector<int> v(static_cast<std::size_t>(n), 0);
                    v[static_cast<std::size_t>(i)] = 1;
                    v[static_cast<std::size_t>(j)] = -1;
                    out.push_back(ExpVec::from_vu(cs, v, 0));
                }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    out.push_back(vu({i, j, k}, -1, +1));
                    out.push_back(vu({i, j, k}, -1, -1));
                }
    }
    return sorted_unique(std::move(out));
}

OrbitMultiset build_coset(Case cs) {
    const int n = rank_of(cs);
    std::vector<ExpVec> out;
    if (cs == Case::E6) {
        // { v_i } u { v_i - u } u { u - v_i - v_j }
        for (int i = 0; i < n; ++i) {
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            out.push_back(ExpVec::from_vu(cs, v, 0));
            out.push_back(ExpVec::from_vu(cs, v, -1));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> v(static_cast<std::size_t>(n), 0);
                v[static_cast<std::size_t>(i)] = -1;
                v[static_cast<std::size_t>(j)] = -1;
                out.push_back(ExpVec::from_vu(cs, v, 1));
            }
    } else if (cs == Case::E7) {
        // { +-v_i } u { +-(u - v_i - v_j) }
        for (int i = 0; i < n; ++i) {
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            out.push_back(ExpVec::from_vu(cs, v, 0));
            v[static_cast<std::size_t>(i)] = -1;
            out.push_back(ExpVec::from_vu(cs, v, 0));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> v(static_cast<std::size_t>(n), 0);
                v[static_cast<std::size_t>(i)] = -1;
                v[static_cast<std::size_t>(j)] = -1;
                out.push_back(ExpVec::from_vu(cs, v, 1));
                v[static_cast<std::size_t>(i)] = 1;
                v[static_cast<std::size_t>(j)] = 1;
                out.push_back(ExpVec::from_vu(cs, v, -1));
            }
    } else {
        throw input_error("minimal_coset: E8 minimal vectors are the roots");
    }
    return sorted_unique(std::move(out));
}

} // namespace

const OrbitMultiset& roots(Case cs) {
    static std::map<Case, OrbitMultiset> cache;
    auto it = cache.find(cs);
    if (it != cache.end()) return it->second;
    return cache.emplace(cs, build_roots(cs)).first->second;
}

const OrbitMultiset& minimal_coset(Case cs) {
    static std::map<Case, OrbitMultiset> cache;
    auto it = cache.find(cs);
    if (it != cache.end()) return it->second;
    return cache.emplace(cs, build_coset(cs)).first->second;
}

ExpVec simple_root(Case cs, int label) {
    const int n = rank_of(cs);
    MWX_CHECK(label >= 1 && label <= n, "simple root label out of range");
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    if (label == 2) {
        v[0] = v[1] = v[2] = -1;
        return ExpVec::from_vu(cs, v, 1); // u - v_1 - v_2 - v_3
    }
    // Chain labels 1,3,4,...,n correspond to v_i - v_{i+1} for i = 1..n-1.
    const int i = label == 1 ? 0 : label - 2;
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(i + 1)] = -1;
    return ExpVec::from_vu(cs, v, 0);
}

std::vector<ExpVec> simple_roots(Case cs) {
    std::vector<ExpVec> r;
    for (int i = 1; i <= rank_of(cs); ++i) r.push_back(simple_root(cs, i));
    return r;
}

LatticeMap reflection(const ExpVec& alpha) {
    if (norm2(alpha) != Rat(2)) throw input_error("reflection: input is not a root");
    const int n = alpha.rank();
    LatticeMap r = LatticeMap::identity(alpha.cs);
    for (int j = 0; j < n; ++j) {
        ExpVec ej = ExpVec::zero(alpha.cs);
        ej.c[static_cast<std::size_t>(j)] = 1;
        const Rat p = pairing(ej, alpha);
        MWX_CHECK(is_integer(p), "reflection: non-integral pairing");
        const long pi = numerator(p).convert_to<long>();
        for (int i = 0; i < n; ++i)
            r.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= pi * alpha.coord(i);
    }
    return r;
}

OrbitMultiset orbit(const ExpVec& w, std::size_t cap) {
    std::vector<LatticeMap> gens;
    for (const auto& a : simple_roots(w.cs)) gens.push_back(reflection(a));
    std::set<std::uint64_t> seen{w.pack()};
    std::vector<ExpVec> frontier{w};
    while (!frontier.empty()) {
        std::vector<ExpVec> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                const ExpVec y = g.apply(x);
                if (seen.insert(y.pack()).second) {
                    if (seen.size() > cap) throw budget_error("orbit cap exceeded");
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    OrbitMultiset out;
    out.reserve(seen.size());
    for (std::uint64_t k : seen) out.push_back(ExpVec::unpack(w.cs, k));
    return out;
}

namespace {

// Fundamental weights: <w_i, alpha_j> = delta_ij, solved exactly.
const std::vector<std::vector<Rat>>& fundamental_weights(Case cs) {
    static std::map<Case, std::vector<std::vector<Rat>>> cache;
    auto it = cache.find(cs);
    if (it != cache.end()) return it->second;
    const int n = rank_of(cs);
    const auto alphas = simple_roots(cs);
    // Coefficient matrix A[j][k] = <e_k, alpha_j>; weight w solves A w = e_i.
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            ExpVec ek = ExpVec::zero(cs);
            ek.c[static_cast<std::size_t>(k)] = 1;
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = pairing(ek, alphas[static_cast<std::size_t>(j)]);
        }
    std::vector<std::vector<Rat>> weights;
    for (int i = 0; i < n; ++i) {
        // Gaussian elimination on an augmented copy.
        auto mtx = a;
        std::vector<Rat> rhs(static_cast<std::size_t>(n), Rat(0));
        rhs[static_cast<std::size_t>(i)] = Rat(1);
        for (int col = 0; col < n; ++col) {
            int piv = col;
            while (piv < n && is_zero(mtx[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)])) ++piv;
            MWX_CHECK(piv < n, "singular simple-root matrix");
            std::swap(mtx[static_cast<std::size_t>(col)], mtx[static_cast<std::size_t>(piv)]);
            std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(piv)]);
            const Rat d = mtx[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == col) continue;
                const Rat f = mtx[static_cast<std::size_t>(r2)][static_cast<std::size_t>(col)] / d;
                if (is_zero(f)) continue;
                for (int c2 = 0; c2 < n; ++c2)
                    mtx[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] -= f * mtx[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
                rhs[static_cast<std::size_t>(r2)] -= f * rhs[static_cast<std::size_t>(col)];
            }
        }
        std::vector<Rat> w(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = rhs[static_cast<std::size_t>(k)] / mtx[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        weights.push_back(std::move(w));
    }
    return cache.emplace(cs, std::move(weights)).first->second;
}

Rat pair_rat_vec(Case cs, const std::vector<Rat>& x, const ExpVec& y) {
    const int n = rank_of(cs);
    Rat acc(0);
    for (int j = 0; j < n; ++j) {
        if (y.coord(j) == 0) continue;
        ExpVec ej = ExpVec::zero(cs);
        ej.c[static_cast<std::size_t>(j)] = 1;
        // <x, e_j> with x given by rational coordinates.
        for (int i = 0; i < n; ++i) {
            if (is_zero(x[static_cast<std::size_t>(i)])) continue;
            ExpVec ei = ExpVec::zero(cs);
            ei.c[static_cast<std::size_t>(i)] = 1;
            acc += x[static_cast<std::size_t>(i)] * Rat(y.coord(j)) * pairing(ei, ej);
        }
    }
    return acc;
}

} // namespace

Int weyl_dimension(Case cs, int label) {
    const int n = rank_of(cs);
    MWX_CHECK(label >= 1 && label <= n, "fundamental index out of range");
    const auto& fw = fundamental_weights(cs);
    std::vector<Rat> rho(static_cast<std::size_t>(n), Rat(0));
    for (const auto& w : fw)
        for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(i)];
    const auto& lam = fw[static_cast<std::size_t>(label - 1)];
    std::vector<Rat> lamrho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lamrho[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];
    Rat prod(1);
    for (const auto& alpha : roots(cs)) {
        const Rat ra = pair_rat_vec(cs, rho, alpha);
        if (ra <= 0) continue; // positive roots only
        prod *= pair_rat_vec(cs, lamrho, alpha) / ra;
    }
    MWX_CHECK(is_integer(prod), "Weyl dimension formula returned a non-integer");
    return numerator(prod);
}

} // namespace mwx
