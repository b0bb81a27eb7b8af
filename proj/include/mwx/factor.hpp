// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_FACTOR_HPP
#define MWX_FACTOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "mwx/unipoly.hpp"
#include "mwx/zp.hpp"

namespace mwx {

// Dense polynomial over Z/p as a trimmed coefficient vector. Free
// functions take the field context; the hot loops go through the
// runtime-dispatched kernels when p fits the small-prime engine.
using ZpVec = std::vector<u64>;

namespace zpoly {

void trim(ZpVec& f);
inline int degree(const ZpVec& f) { return static_cast<int>(f.size()) - 1; }
inline bool is_zero(const ZpVec& f) { return f.empty(); }

ZpVec from_qpoly(const Zp& F, const QPoly& f); // bad_prime_error on p | den or p | lc
ZpVec reduce_coeffs(const Zp& F, const std::vector<Rat>& coeffs);

ZpVec add(const Zp& F, const ZpVec& a, const ZpVec& b);
ZpVec sub(const Zp& F, const ZpVec& a, const ZpVec& b);
ZpVec mul(const Zp& F, const ZpVec& a, const ZpVec& b);
ZpVec scale(const Zp& F, const ZpVec& a, u64 c);
ZpVec monic(const Zp& F, const ZpVec& a);
std::pair<ZpVec, ZpVec> divrem(const Zp& F, const ZpVec& a, const ZpVec& b);
ZpVec divexact(const Zp& F, const ZpVec& a, const ZpVec& b); // throws if remainder
ZpVec gcd(const Zp& F, ZpVec a, ZpVec b); // monic
ZpVec derivative(const Zp& F, const ZpVec& a);
ZpVec mulmod(const Zp& F, const ZpVec& a, const ZpVec& b, const ZpVec& f);
ZpVec powmod(const Zp& F, ZpVec base, u64 e, const ZpVec& f);

u64 eval(const Zp& F, const ZpVec& f, u64 x);
// Batched evaluation; the SIMD path handles all points of one grid at once.
std::vector<u64> eval_many(const Zp& F, const ZpVec& f, const std::vector<u64>& xs);
ZpVec interpolate(const Zp& F, const std::vector<u64>& xs, const std::vector<u64>& ys);

} // namespace zpoly

// Multiset of irreducible-factor degrees of a squarefree polynomial mod p,
// stored as sorted (degree, count) pairs.
struct CycleType {
    std::vector<std::pair<int, int>> parts;

    int total_degree() const;
    std::string to_string() const; // e.g. "(3)^2(5)^4(15)^2"
    bool operator==(const CycleType& o) const { return parts == o.parts; }
    bool operator!=(const CycleType& o) const { return !(*this == o); }
};

// Distinct-degree factorization of a monic squarefree f over Z/p. Only the
// factor degrees are extracted; no equal-degree splitting.
CycleType ddf_cycle_type(const Zp& F, ZpVec f);

// Reduce f mod p and return its cycle type. Throws bad_prime_error when p
// divides the leading coefficient or a denominator of f, or when f mod p
// is not squarefree.
CycleType cycle_type_mod_p(const QPoly& f, u64 p);

} // namespace mwx

#endif
