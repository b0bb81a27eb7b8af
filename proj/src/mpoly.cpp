// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/mpoly.hpp"

#include <sstream>

namespace mwx {

template <>
std::string MPoly<Rat>::to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest keys first reads like a usual polynomial.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rat& c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rat a = abs(c);
        bool printed = false;
        if (a != 1) {
            os << rat_to_string(a);
            printed = true;
        }
        for (int i = 0; i < 8; ++i) {
            const int e = key_exp(it->first, i);
            if (e == 0) continue;
            if (printed) os << "*";
            os << (i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)]
                                                      : "x" + std::to_string(i));
            if (e > 1) os << "^" << e;
            printed = true;
        }
        if (!printed) os << rat_to_string(a);
    }
    return os.str();
}

namespace {

MPolyQ reconstruct_rec(const std::function<Rat(const std::vector<Rat>&)>& oracle,
                       const std::vector<int>& bounds, long offset, std::vector<Rat>& point,
                       std::size_t var) {
    const std::size_t nvars = bounds.size();
    if (var == nvars) return MPolyQ::constant(oracle(point));
    const int m = bounds[var];
    std::vector<Rat> nodes;
    std::vector<MPolyQ> vals;
    nodes.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        nodes.emplace_back(offset + j);
        point[var] = nodes.back();
        vals.push_back(reconstruct_rec(oracle, bounds, offset, point, var + 1));
    }
    point[var] = Rat(0);
    // Newton interpolation in this variable with polynomial values.
    for (int k = 1; k <= m; ++k)
        for (int i = m; i >= k; --i) {
            MPolyQ diff = vals[static_cast<std::size_t>(i)] - vals[static_cast<std::size_t>(i - 1)];
            vals[static_cast<std::size_t>(i)] =
                diff.scaled(Rat(1) / (nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(i - k)]));
        }
    MPolyQ r;
    const MPolyQ x = MPolyQ::var(static_cast<int>(var));
    for (int i = m; i >= 0; --i)
        r = r * (x - MPolyQ::constant(nodes[static_cast<std::size_t>(i)])) + vals[static_cast<std::size_t>(i)];
    return r;
}

} // namespace

MPolyQ lagrange_reconstruct(const std::function<Rat(const std::vector<Rat>&)>& oracle,
                            const std::vector<int>& degree_bounds, long grid_offset) {
    MWX_CHECK(!degree_bounds.empty() && degree_bounds.size() <= 8, "bad bound vector");
    std::vector<Rat> point(degree_bounds.size(), Rat(0));
    return reconstruct_rec(oracle, degree_bounds, grid_offset, point, 0);
}

} // namespace mwx
