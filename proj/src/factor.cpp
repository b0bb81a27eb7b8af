// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/factor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mwx/kernels.hpp"

namespace mwx {

namespace zpoly {

void trim(ZpVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpVec reduce_coeffs(const Zp& F, const std::vector<Rat>& coeffs) {
    ZpVec r(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) r[i] = F.from_rat(coeffs[i]);
    trim(r);
    return r;
}

ZpVec from_qpoly(const Zp& F, const QPoly& f) {
    ZpVec r = reduce_coeffs(F, f.coeffs());
    if (degree(r) != f.degree())
        throw bad_prime_error("leading coefficient vanishes mod " + std::to_string(F.modulus()));
    return r;
}

ZpVec add(const Zp& F, const ZpVec& a, const ZpVec& b) {
    ZpVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

ZpVec sub(const Zp& F, const ZpVec& a, const ZpVec& b) {
    ZpVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

ZpVec mul(const Zp& F, const ZpVec& a, const ZpVec& b) {
    if (a.empty() || b.empty()) return {};
    ZpVec r(a.size() + b.size() - 1, 0);
    if (F.small()) {
        const auto& K = kern::active_kernels();
        const u64 p = F.modulus();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            K.axpy(r.data() + i, b.data(), b.size(), a[i], kern::shoup_precompute(a[i], p), p);
        }
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

ZpVec scale(const Zp& F, const ZpVec& a, u64 c) {
    if (c == 0) return {};
    ZpVec r(a.size());
    if (F.small()) {
        kern::active_kernels().scale(r.data(), a.data(), a.size(), c,
                                     kern::shoup_precompute(c, F.modulus()), F.modulus());
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    }
    trim(r);
    return r;
}

ZpVec monic(const Zp& F, const ZpVec& a) {
    if (a.empty()) return a;
    if (a.back() == 1) return a;
    return scale(F, a, F.inv(a.back()));
}

std::pair<ZpVec, ZpVec> divrem(const Zp& F, const ZpVec& a, const ZpVec& b) {
    if (b.empty()) throw degenerate_error("zpoly divrem by zero");
    const int da = degree(a), db = degree(b);
    if (da < db) return {{}, a};
    ZpVec r = a;
    ZpVec q(static_cast<std::size_t>(da - db) + 1, 0);
    const u64 il = F.inv(b.back());
    for (int k = da; k >= db; --k) {
        const u64 c = F.mul(r[static_cast<std::size_t>(k)], il);
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - db)] = c;
        const u64 nc = F.neg(c);
        u64* dst = r.data() + (k - db);
        if (F.small()) {
            kern::active_kernels().axpy(dst, b.data(), b.size(), nc,
                                        kern::shoup_precompute(nc, F.modulus()), F.modulus());
        } else {
            for (std::size_t j = 0; j < b.size(); ++j) dst[j] = F.add(dst[j], F.mul(nc, b[j]));
        }
    }
    r.resize(static_cast<std::size_t>(db));
    trim(r);
    trim(q);
    return {q, r};
}

ZpVec divexact(const Zp& F, const ZpVec& a, const ZpVec& b) {
    auto [q, r] = divrem(F, a, b);
    if (!r.empty()) throw degenerate_error("zpoly division not exact");
    return q;
}

ZpVec gcd(const Zp& F, ZpVec a, ZpVec b) {
    while (!b.empty()) {
        auto [q, r] = divrem(F, a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

ZpVec derivative(const Zp& F, const ZpVec& a) {
    if (a.size() <= 1) return {};
    ZpVec r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.modulus());
    trim(r);
    return r;
}

ZpVec mulmod(const Zp& F, const ZpVec& a, const ZpVec& b, const ZpVec& f) {
    return divrem(F, mul(F, a, b), f).second;
}

ZpVec powmod(const Zp& F, ZpVec base, u64 e, const ZpVec& f) {
    ZpVec r{1};
    base = divrem(F, base, f).second;
    while (e) {
        if (e & 1) r = mulmod(F, r, base, f);
        base = mulmod(F, base, base, f);
        e >>= 1;
    }
    return r;
}

u64 eval(const Zp& F, const ZpVec& f, u64 x) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

std::vector<u64> eval_many(const Zp& F, const ZpVec& f, const std::vector<u64>& xs) {
    const std::size_t n = xs.size();
    if (f.empty()) return std::vector<u64>(n, 0);
    std::vector<u64> acc(n, f.back());
    if (F.small()) {
        const u64 p = F.modulus();
        std::vector<u64> xsh(n);
        for (std::size_t i = 0; i < n; ++i) xsh[i] = kern::shoup_precompute(xs[i], p);
        const auto& K = kern::active_kernels();
        for (std::size_t k = f.size() - 1; k-- > 0;)
            K.horner_step(acc.data(), xs.data(), xsh.data(), n, f[k], p);
    } else {
        for (std::size_t k = f.size() - 1; k-- > 0;)
            for (std::size_t i = 0; i < n; ++i) acc[i] = F.add(F.mul(acc[i], xs[i]), f[k]);
    }
    return acc;
}

ZpVec interpolate(const Zp& F, const std::vector<u64>& xs, const std::vector<u64>& ys) {
    MWX_CHECK(xs.size() == ys.size() && !xs.empty(), "zpoly interpolate: size mismatch");
    const std::size_t n = xs.size();
    std::vector<u64> dd(ys);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = F.div(F.sub(dd[i], dd[i - 1]), F.sub(xs[i], xs[i - k]));
            if (i == k) break;
        }
    ZpVec r;
    for (std::size_t i = n; i-- > 0;) {
        // r = r*(x - xs[i]) + dd[i]
        ZpVec nr(r.size() + 1, 0);
        for (std::size_t j = 0; j < r.size(); ++j) nr[j + 1] = r[j];
        const u64 nx = F.neg(xs[i]);
        for (std::size_t j = 0; j < r.size(); ++j) nr[j] = F.add(nr[j], F.mul(r[j], nx));
        nr[0] = F.add(nr[0], dd[i]);
        r = std::move(nr);
        trim(r);
    }
    return r;
}

} // namespace zpoly

int CycleType::total_degree() const {
    int s = 0;
    for (auto& [d, c] : parts) s += d * c;
    return s;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    for (auto& [d, c] : parts) {
        os << "(" << d << ")";
        if (c > 1) os << "^" << c;
    }
    return os.str();
}

CycleType ddf_cycle_type(const Zp& F, ZpVec f) {
    f = zpoly::monic(F, f);
    std::map<int, int> parts;
    ZpVec rem = f;
    ZpVec h{0, 1}; // x
    int d = 0;
    while (zpoly::degree(rem) > 0 && 2 * (d + 1) <= zpoly::degree(rem)) {
        ++d;
        h = zpoly::powmod(F, h, F.modulus(), rem);
        ZpVec hx = zpoly::sub(F, h, ZpVec{0, 1});
        ZpVec g = zpoly::gcd(F, hx, rem);
        if (zpoly::degree(g) > 0) {
            MWX_CHECK(zpoly::degree(g) % d == 0, "ddf: degree not a multiple");
            parts[d] += zpoly::degree(g) / d;
            rem = zpoly::divexact(F, rem, g);
            h = zpoly::divrem(F, h, rem).second;
        }
    }
    if (zpoly::degree(rem) > 0) parts[zpoly::degree(rem)] += 1;
    CycleType ct;
    for (auto& [deg, cnt] : parts) ct.parts.emplace_back(deg, cnt);
    return ct;
}

CycleType cycle_type_mod_p(const QPoly& f, u64 p) {
    const Zp F(p);
    ZpVec fp = zpoly::from_qpoly(F, f);
    const ZpVec d = zpoly::derivative(F, fp);
    if (zpoly::degree(zpoly::gcd(F, fp, d)) != 0)
        throw bad_prime_error("not squarefree mod " + std::to_string(p));
    CycleType ct = ddf_cycle_type(F, fp);
    MWX_CHECK(ct.total_degree() == f.degree(), "cycle type degree sum mismatch");
    return ct;
}

} // namespace mwx
