// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/unipoly.hpp"

#include <map>
#include <sstream>

namespace mwx {

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
    if (f.is_zero_poly()) throw degenerate_error("squarefree decomposition of zero");
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() == 0) return out;
    // Yun's algorithm on the monic normalization.
    QPoly b = f.scaled(Rat(1) / f.lc());
    QPoly d = b.derivative();
    QPoly a = gcd_monic(b, d);
    b = divexact(b, a);
    QPoly c = divexact(d, a);
    d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        QPoly ai = gcd_monic(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = divexact(b, ai);
        c = divexact(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

bool rat_sqrt(const Rat& x, Rat& root) {
    if (x < 0) return false;
    const Int n = numerator(x), d = denominator(x);
    const Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    root = Rat(sn, sd);
    return true;
}

} // namespace

QPoly poly_sqrt(const QPoly& f) {
    if (f.is_zero_poly()) return f;
    const int df = f.degree();
    if (df % 2 != 0) throw degenerate_error("poly_sqrt: odd degree");
    const int m = df / 2;
    Rat top;
    if (!rat_sqrt(f.lc(), top)) throw degenerate_error("poly_sqrt: leading coefficient not a square");
    std::vector<Rat> g(static_cast<std::size_t>(m) + 1, Rat(0));
    g[static_cast<std::size_t>(m)] = top;
    for (int k = m - 1; k >= 0; --k) {
        // Coefficient of x^(m+k) in g^2 is 2 g_m g_k plus the interior pairs
        // g_i g_j with i+j = m+k and k < i <= j < m.
        Rat s = f.coeff(m + k);
        for (int i = k + 1; 2 * i <= m + k; ++i) {
            const int j = m + k - i;
            if (j > m - 1) continue;
            if (i == j) s -= g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
            else s -= Rat(2) * g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
        }
        g[static_cast<std::size_t>(k)] = s / (Rat(2) * top);
    }
    QPoly r{std::vector<Rat>(g)};
    if (r * r != f) throw degenerate_error("poly_sqrt: not a square");
    return r;
}

QPoly cyclotomic_poly(unsigned m) {
    if (m == 0 || m > 60) throw input_error("cyclotomic order out of range (1..60)");
    static std::map<unsigned, QPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by the cyclotomic polynomials of proper divisors.
    std::vector<Rat> xm(m + 1, Rat(0));
    xm[0] = Rat(-1);
    xm[m] = Rat(1);
    QPoly f{std::move(xm)};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) f = divexact(f, cyclotomic_poly(d));
    cache.emplace(m, f);
    return f;
}

std::string poly_to_string(const QPoly& f, const std::string& var) {
    if (f.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        Rat c = f.coeff(k);
        if (is_zero(c)) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (k == 0 || a != 1) os << rat_to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace mwx
