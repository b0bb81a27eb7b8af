// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <random>

#include "mwx/elim.hpp"
#include "mwx/parallel.hpp"

namespace mwx {

namespace {

// Shared oracle: the top i_max coefficients of Phi at a numeric lambda,
// cached per grid node so the per-coefficient reconstructions reuse runs.
class CoeffOracle {
public:
    CoeffOracle(Case cs, int i_max) : cs_(cs), imax_(i_max) {}

    // Throws degenerate_error when the pipeline rejects the node; the
    // reconstruction loop treats that as a grid-genericity failure.
    std::vector<Rat> tops(const std::vector<Rat>& lam) {
        auto it = cache_.find(lam);
        if (it != cache_.end()) return it->second;
        const QPoly phi = build_phi(WeierstrassData(cs_, lam));
        std::vector<Rat> t;
        for (int i = 1; i <= imax_; ++i) t.push_back(phi.coeff(phi.degree() - i));
        cache_.emplace(lam, t);
        return t;
    }

    void prewarm(const std::vector<std::vector<Rat>>& nodes) {
        std::vector<const std::vector<Rat>*> missing;
        for (const auto& n : nodes)
            if (!cache_.count(n)) missing.push_back(&n);
        const auto results = parallel_map(missing.size(), [&](std::size_t i) {
            const QPoly phi = build_phi(WeierstrassData(cs_, *missing[i]));
            std::vector<Rat> t;
            for (int k = 1; k <= imax_; ++k) t.push_back(phi.coeff(phi.degree() - k));
            return t;
        });
        for (std::size_t i = 0; i < missing.size(); ++i) cache_.emplace(*missing[i], results[i]);
    }

private:
    Case cs_;
    int imax_;
    std::map<std::vector<Rat>, std::vector<Rat>> cache_;
};

// Reference values keeping the 1-D degree slices generic.
std::vector<Rat> base_point(Case cs) {
    static const long vals[8] = {3, 5, 7, 11, 13, 17, 19, 23};
    std::vector<Rat> out;
    for (int i = 0; i < rank_of(cs); ++i) out.emplace_back(vals[i]);
    return out;
}

} // namespace

std::vector<std::vector<int>> phi_coeff_degree_bounds(Case cs, int i_max) {
    // Structural tracking by one-coordinate slices: every elimination stage
    // runs unchanged on each slice, and the slice degree of a polynomial
    // equals its degree in that coordinate for all but a measure-zero set
    // of base points. The final interpolants are hold-out checked, so a
    // conspiring base point cannot slip through silently.
    const int n = rank_of(cs);
    const int cap = 12;
    CoeffOracle oracle(cs, i_max);
    const auto base = base_point(cs);

    std::vector<std::vector<int>> bounds(static_cast<std::size_t>(i_max),
                                         std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<Rat>> nodes;
        for (int k = 0; k <= cap + 1; ++k) {
            auto lam = base;
            lam[static_cast<std::size_t>(j)] = Rat(k);
            nodes.push_back(std::move(lam));
        }
        oracle.prewarm(nodes);
        for (int i = 1; i <= i_max; ++i) {
            std::vector<Rat> xs, ys;
            for (int k = 0; k <= cap + 1; ++k) {
                xs.emplace_back(k);
                ys.push_back(oracle.tops(nodes[static_cast<std::size_t>(k)])[static_cast<std::size_t>(i - 1)]);
            }
            const QPoly f = interpolate(xs, ys);
            if (f.degree() > cap)
                throw budget_error("degree tracker cap exceeded for coefficient " + std::to_string(i));
            bounds[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = std::max(f.degree(), 0);
        }
    }
    return bounds;
}

std::vector<MPolyQ> symbolic_coefficients(Case cs, int i_max) {
    const int max_allowed = cs == Case::E7 ? 4 : cs == Case::E8 ? 3 : 3;
    if (i_max < 1 || i_max > max_allowed)
        throw budget_error("symbolic coefficient index beyond the default resource budget");
    const int n = rank_of(cs);
    const auto bounds = phi_coeff_degree_bounds(cs, i_max);

    CoeffOracle oracle(cs, i_max);
    std::vector<MPolyQ> out;

    for (int i = 1; i <= i_max; ++i) {
        const auto& b = bounds[static_cast<std::size_t>(i - 1)];
        MPolyQ rec;
        bool done = false;
        std::string last_err;
        for (long attempt = 0; attempt < 5 && !done; ++attempt) {
            const long offset = attempt; // deterministic resample: shift the grid
            try {
                // Enumerate the tensor grid and evaluate it in parallel first.
                std::vector<std::vector<Rat>> nodes;
                std::vector<int> idx(static_cast<std::size_t>(n), 0);
                while (true) {
                    std::vector<Rat> lam(static_cast<std::size_t>(n));
                    for (int j = 0; j < n; ++j) lam[static_cast<std::size_t>(j)] = Rat(offset + idx[static_cast<std::size_t>(j)]);
                    nodes.push_back(std::move(lam));
                    int j = 0;
                    while (j < n) {
                        if (++idx[static_cast<std::size_t>(j)] <= b[static_cast<std::size_t>(j)]) break;
                        idx[static_cast<std::size_t>(j)] = 0;
                        ++j;
                    }
                    if (j == n) break;
                }
                oracle.prewarm(nodes);
                const auto fn = [&](const std::vector<Rat>& lam) {
                    return oracle.tops(lam)[static_cast<std::size_t>(i - 1)];
                };
                rec = lagrange_reconstruct(fn, b, offset);
                // Hold-out: fixed-seed off-grid points must reproduce the oracle.
                std::mt19937_64 rng(0xE7E8 + static_cast<unsigned long>(i));
                std::uniform_int_distribution<long> d(40, 200);
                for (int h = 0; h < 10; ++h) {
                    std::vector<Rat> lam;
                    for (int j = 0; j < n; ++j) lam.emplace_back(Rat(d(rng), 2));
                    std::vector<Rat> full(8, Rat(0));
                    for (int j = 0; j < n; ++j) full[static_cast<std::size_t>(j)] = lam[static_cast<std::size_t>(j)];
                    if (rec.eval_all(full) != oracle.tops(lam)[static_cast<std::size_t>(i - 1)])
                        throw degenerate_error("hold-out mismatch");
                }
                done = true;
            } catch (const degenerate_error& e) {
                last_err = e.what();
            }
        }
        if (!done)
            throw degenerate_error("coefficient reconstruction failed after resampling: " + last_err);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace mwx
