// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_WEYL_HPP
#define MWX_WEYL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mwx/rational.hpp"

namespace mwx {

enum class Case { E6, E7, E8 };

constexpr int rank_of(Case c) { return c == Case::E6 ? 6 : c == Case::E7 ? 7 : 8; }
Case case_from_string(const std::string& s); // "e6"/"E6"/...
std::string case_to_string(Case c);

// Lattice vector in the basis (v_1, ..., v_{n-1}, u) where n = rank and
// v_n is eliminated through v_n = 3u - (v_1 + ... + v_{n-1}). Coordinates
// are capped at +/-31 so that exponent vectors pack into one u64 with
// carry-free bytewise addition.
struct ExpVec {
    Case cs;
    std::array<std::int8_t, 8> c{};

    int rank() const { return rank_of(cs); }
    int coord(int i) const { return c[static_cast<std::size_t>(i)]; }

    static constexpr int coord_cap = 31;

    // From coefficients on (v_1..v_n, u); v_n gets eliminated.
    static ExpVec from_vu(Case cs, const std::vector<int>& v, int u);
    static ExpVec zero(Case cs) { return ExpVec{cs, {}}; }

    std::uint64_t pack() const;
    static ExpVec unpack(Case cs, std::uint64_t key);

    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-() const;
    bool operator==(const ExpVec& o) const { return cs == o.cs && c == o.c; }
    bool operator<(const ExpVec& o) const { return pack() < o.pack(); }

    std::string to_string() const; // e.g. "s1*s2/r"
};

// Integer lattice map on the (v_1..v_{n-1}, u) coordinates.
struct LatticeMap {
    Case cs;
    std::array<std::array<int, 8>, 8> m{}; // column-major action: (Mx)_i = sum_j m[i][j] x_j

    static LatticeMap identity(Case cs);
    ExpVec apply(const ExpVec& x) const;
    LatticeMap compose(const LatticeMap& o) const; // this after o
    long det() const;
    bool operator==(const LatticeMap& o) const { return cs == o.cs && m == o.m; }
};

// Gram pairing of the weight lattice in the paper's normalization:
// <v_i, v_j> = delta_ij + a with a = 1/3, 1/2, 1 for E6, E7, E8 and
// u = (v_1 + ... + v_n)/3. Roots have norm 2; the E6/E7 minuscule cosets
// have norms 4/3 and 3/2.
Rat pairing(const ExpVec& x, const ExpVec& y);
Rat norm2(const ExpVec& x);

using OrbitMultiset = std::vector<ExpVec>; // sorted by packed key

// The full root multiset (72 / 126 / 240 vectors).
const OrbitMultiset& roots(Case cs);

// Minimal vectors of the nontrivial coset: 27 (E6) or 56 (E7). E8 has no
// such coset; its minimal vectors are the roots themselves.
const OrbitMultiset& minimal_coset(Case cs);

// Simple roots in the diagram labeling used throughout: the chain carries
// labels 1,3,4,...,n and the branch node label 2 sits over the third chain
// vertex (as the monomials s_i/s_{i+1} and r/(s_1 s_2 s_3)).
ExpVec simple_root(Case cs, int label);
std::vector<ExpVec> simple_roots(Case cs);

// s_alpha(x) = x - <x, alpha> alpha as an integer matrix; requires a norm-2
// input that pairs integrally with the lattice.
LatticeMap reflection(const ExpVec& alpha);

// Closure of {w} under the simple reflections, sorted; throws budget_error
// above the cap.
OrbitMultiset orbit(const ExpVec& w, std::size_t cap = 1000000);

// Dimension of the i-th fundamental representation (diagram labels as
// above) by the Weyl dimension formula in exact arithmetic.
Int weyl_dimension(Case cs, int label);

} // namespace mwx

#endif
