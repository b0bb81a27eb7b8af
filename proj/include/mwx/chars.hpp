// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_CHARS_HPP
#define MWX_CHARS_HPP

#include <array>
#include <string>
#include <vector>

#include "mwx/laurent.hpp"
#include "mwx/mpoly.hpp"
#include "mwx/weyl.hpp"

namespace mwx {

// Weierstrass coefficients of the three families, in the canonical order
// (p_0, p_1, p_2, q_0, ..., q_k) with k = 2, 3, 4 for E6, E7, E8.
struct WeierstrassData {
    Case cs;
    std::vector<Rat> lambda; // length 6, 7, 8

    WeierstrassData(Case cs_, std::vector<Rat> l);
    const Rat& p(int i) const { return lambda[static_cast<std::size_t>(i)]; }
    const Rat& q(int i) const { return lambda[static_cast<std::size_t>(3 + i)]; }
    static int length(Case cs) { return rank_of(cs); }
};

// --- fundamental characters ------------------------------------------------

// Symbolic fundamental characters chi_1..chi_n as integer Laurent
// polynomials (E6 and E7 only; the E8 ones are out of reach by design).
// Computed once per case and cached.
const std::vector<LaurentZ>& symbolic_chars(Case cs);

// Numeric character values at a torus point, through power sums and
// Newton's identities on the orbit values (no symbolic polynomials).
std::vector<Rat> chars_at_point(Case cs, const TorusPoint<Rat>& xi);
std::vector<Cyclo> chars_at_point(Case cs, const TorusPoint<Cyclo>& xi);

// --- coefficient transforms -------------------------------------------------

// chi(lambda): the explicit forward polynomials, over any commutative ring
// with the scalar helpers (Rat, MPoly<Rat>, Laurent). `one` supplies the
// ring's unit (it carries case/context information the type alone lacks).
template <class S>
std::vector<S> chars_from_lambda_t(Case cs, const std::vector<S>& lam, const S& one);

// lambda(chi): E6 and E7 use the printed inverse; E8 is solved by
// back-substitution through the forward formulas, one new unknown per
// step, each pivot a nonzero rational constant.
template <class S>
std::vector<S> lambda_from_chars_t(Case cs, const std::vector<S>& chi, const S& one);

WeierstrassData lambda_from_chars(Case cs, const std::vector<Rat>& chi);
std::vector<Rat> chars_from_lambda(const WeierstrassData& w);

// Coefficients of the degree-56 polynomial in terms of the characters
// (eps_1..eps_7) and of lambda (eps_1..eps_7), plus the first two
// coefficients eta_1, eta_2 of the degree-126 polynomial both ways.
template <class S>
S eps_of_chi_e7(int i, const std::vector<S>& chi, const S& one);
template <class S>
S eps_of_lambda_e7(int i, const std::vector<S>& lam, const S& one);
template <class S>
S eta_of_chi_e7(int i, const std::vector<S>& chi, const S& one);
template <class S>
S eta_of_lambda_e7(int i, const std::vector<S>& lam, const S& one);

// E6: the six relations delta_1, eps_1, eps_-1, eps_2, eps_-2, eps_3 as
// polynomials in lambda; index keys: "d1","e1","em1","e2","em2","e3".
template <class S>
S e6_relation_rhs(const std::string& key, const std::vector<S>& lam, const S& one);

// --- verification ------------------------------------------------------------

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

struct RelationReport {
    std::vector<CheckLine> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// E6: the six lambda-relations and six chi-identifications as exact
// Laurent identities; E7: Weyl invariance, dimension values, and the
// printed eps_5/eps_6/eps_7 and eta_1/eta_2 identities.
RelationReport verify_char_relations(Case cs);

// Symbolic round-trip lambda -> chi -> lambda and chi -> lambda -> chi
// over indeterminate coefficients.
RelationReport verify_roundtrip(Case cs);

// --- template definitions ----------------------------------------------------

template <class S>
std::vector<S> chars_from_lambda_t(Case cs, const std::vector<S>& lam, const S& one) {
    MWX_CHECK(static_cast<int>(lam.size()) == rank_of(cs), "lambda length mismatch");
    const auto c = [&](long v) { return scalar_mul_long(one, v); };
    const S &p0 = lam[0], &p1 = lam[1], &p2 = lam[2];
    std::vector<S> chi;
    if (cs == Case::E6) {
        const S &q0 = lam[3], &q1 = lam[4], &q2 = lam[5];
        chi.push_back(c(6) * p2);
        chi.push_back(c(6) - c(2) * p1);
        chi.push_back(c(13) * p2 * p2 + p0 - q2);
        chi.push_back(c(8) * p2 * p2 * p2 + c(2) * p0 * p2 + p1 * p1 - c(6) * p1 - q0 + c(9));
        chi.push_back(c(6) * p2 - c(2) * p1 * p2 + q1);
        chi.push_back(p2 * p2 - q2);
    } else if (cs == Case::E7) {
        const S &q0 = lam[3], &q1 = lam[4], &q2 = lam[5], &q3 = lam[6];
        chi.push_back(c(6) * p2 + c(25));
        chi.push_back(c(6) * q3 - c(2) * p1);
        chi.push_back(-q2 + c(13) * p2 * p2 + c(108) * p2 + p0 + c(221));
        chi.push_back(c(9) * q3 * q3 - c(6) * p1 * q3 - q2 - q0 + c(8) * p2 * p2 * p2 + c(85) * p2 * p2 +
                      (c(2) * p0 + c(300)) * p2 + p1 * p1 + c(10) * p0 + c(350));
        chi.push_back((c(6) * p2 + c(26)) * q3 + q1 - c(2) * p1 * p2 - c(10) * p1);
        chi.push_back(-q2 + p2 * p2 + c(12) * p2 + c(27));
        chi.push_back(q3);
    } else {
        const S &q0 = lam[3], &q1 = lam[4], &q2 = lam[5], &q3 = lam[6], &q4 = lam[7];
        chi.push_back(c(-1600) * q4 + c(1536) * p2 + c(3875));
        chi.push_back(scalar_mul_long(
            c(-45600) * q4 + c(12288) * q3 + c(40704) * p2 - c(16384) * p1 + c(73625), 2));
        chi.push_back(scalar_mul_long(
            c(14144) * q4 * q4 - scalar_mul_long(c(384) * p2 + c(1225), 72) * q4 + c(11200) * q3 -
                c(4096) * q2 + c(13312) * p2 * p2 + c(87072) * p2 - c(17920) * p1 + c(16384) * p0 +
                c(104625),
            64));
        chi.push_back(
            c(-91750400) * q4 * q4 * q4 +
            scalar_mul_long(c(25600) * p2 + c(222101), 12288) * q4 * q4 -
            scalar_mul_long(c(4530176) * q3 - c(65536) * q2 + c(1392640) * p2 * p2 +
                                c(21778944) * p2 - c(8159232) * p1 + c(2621440) * p0 + c(34773585),
                            256) *
                q4 +
            scalar_mul_long(c(4718592) * q3 * q3 +
                                scalar_mul_long(c(80896) * p2 - c(32768) * p1 + c(225379), 384) * q3 -
                                c(29589504) * q2 + c(30408704) * q1 - c(33554432) * q0 +
                                c(4194304) * p2 * p2 * p2 + c(88129536) * p2 * p2 -
                                scalar_mul_long(c(876544) * p1 - c(262144) * p0 - c(4399923), 64) * p2 +
                                c(8388608) * p1 * p1 - c(133996544) * p1 + c(65175552) * p0 +
                                c(215596227),
                            32));
        chi.push_back(c(24760320) * q4 * q4 -
                      scalar_mul_long(c(106496) * q3 + c(738816) * p2 - c(163840) * p1 + c(2360085), 64) * q4 +
                      scalar_mul_long(c(512) * p2 + c(4797), 12288) * q3 - c(30670848) * q2 +
                      c(16777216) * q1 + c(20250624) * p2 * p2 -
                      scalar_mul_long(c(16384) * p1 - c(235911), 512) * p2 - c(45154304) * p1 +
                      c(13631488) * p0 + c(146325270));
        chi.push_back(c(110592) * q4 * q4 - scalar_mul_long(c(128) * p2 + c(1235), 1536) * q4 +
                      c(724992) * q3 - c(262144) * q2 + c(65536) * p2 * p2 + c(1062912) * p2 -
                      c(229376) * p1 + c(2450240));
        chi.push_back(scalar_mul_long(c(3920) * q4 - c(1024) * q3 - c(1152) * p2 - c(7595), -4));
        chi.push_back(scalar_mul_long(c(8) * q4 - c(31), -8));
    }
    return chi;
}

namespace detail {
// Back-substitution order for the E8 inverse: (chi index, lambda slot),
// both zero-based; lambda slots are p0,p1,p2,q0,q1,q2,q3,q4 = 0..7.
inline constexpr std::array<std::pair<int, int>, 8> e8_solve_order{
    {{7, 7}, {0, 2}, {6, 6}, {1, 1}, {5, 5}, {2, 0}, {4, 4}, {3, 3}}};
const std::array<Rat, 8>& e8_pivots();
} // namespace detail

template <class S>
std::vector<S> lambda_from_chars_t(Case cs, const std::vector<S>& chi, const S& one) {
    MWX_CHECK(static_cast<int>(chi.size()) == rank_of(cs), "chi length mismatch");
    const auto c = [&](long v) { return scalar_mul_long(one, v); };
    const S zero = one - one;
    if (cs == Case::E6) {
        const S &x1 = chi[0], &x2 = chi[1], &x3 = chi[2], &x4 = chi[3], &x5 = chi[4], &x6 = chi[5];
        const S p1 = divide_by_long(c(6) - x2, 2);
        const S p2 = divide_by_long(x1, 6);
        const S q2 = p2 * p2 - x6;
        const S p0 = x3 - c(13) * p2 * p2 + q2;
        const S q1 = x5 + c(2) * p1 * p2 - c(6) * p2;
        const S q0 = c(8) * p2 * p2 * p2 + c(2) * p0 * p2 + p1 * p1 - c(6) * p1 - x4 + c(9);
        return {p0, p1, p2, q0, q1, q2};
    }
    if (cs == Case::E7) {
        const S &x1 = chi[0], &x2 = chi[1], &x3 = chi[2], &x4 = chi[3], &x5 = chi[4], &x6 = chi[5],
                &x7 = chi[6];
        const S p2 = divide_by_long(x1 - c(25), 6);
        const S p1 = divide_by_long(c(6) * x7 - x2, 2);
        const S p0 = divide_by_long(-(c(3) * x6 - c(3) * x3 + x1 * x1 - c(2) * x1 + c(7)), 3);
        const S q3 = x7;
        const S q2 = divide_by_long(-(c(36) * x6 - x1 * x1 - c(22) * x1 + c(203)), 36);
        const S q1 = divide_by_long(c(24) * x7 + c(6) * x5 + (-x1 - c(5)) * x2, 6);
        const S q0 = divide_by_long(c(27) * x2 * x2 - c(8) * x1 * x1 * x1 - c(84) * x1 * x1 +
                                        c(120) * x1 - c(136),
                                    108) -
                     divide_by_long((x1 + c(2)) * x6, 3) - x4 + divide_by_long((x1 + c(5)) * x3, 3);
        return {p0, p1, p2, q0, q1, q2, q3};
    }
    // E8: solve the forward system one unknown at a time; each step is
    // linear in its new unknown with a constant pivot.
    std::vector<S> lam(8, zero);
    const auto& pivots = detail::e8_pivots();
    for (std::size_t k = 0; k < detail::e8_solve_order.size(); ++k) {
        const auto [ci, slot] = detail::e8_solve_order[k];
        const S b = chars_from_lambda_t(Case::E8, lam, one)[static_cast<std::size_t>(ci)];
        lam[static_cast<std::size_t>(slot)] =
            scalar_scale(chi[static_cast<std::size_t>(ci)] - b, Rat(1) / pivots[k]);
    }
    return lam;
}

template <class S>
S eps_of_chi_e7(int i, const std::vector<S>& chi, const S& one) {
    const auto c = [&](long v) { return scalar_mul_long(one, v); };
    const S &x1 = chi[0], &x2 = chi[1], &x3 = chi[2], &x4 = chi[3], &x5 = chi[4], &x6 = chi[5],
            &x7 = chi[6];
    switch (i) {
        case 1: return -x7;
        case 2: return x6 + one;
        case 3: return -(x7 + x5);
        case 4: return x6 + x4 + one;
        case 5:
            return -(x6 + x3 - x1 * x1 + x1 + one) * x7 + (x1 - one) * x5 - x2 * x3;
        case 6:
            return x1 * x7 * x7 + (x5 - (x1 + one) * x2) * x7 + x6 * x6 +
                   scalar_mul_long((x3 - x1 * x1 + x1 + one) * x6, 2) - x2 * x5 -
                   (c(2) * x1 + one) * x4 + x3 * x3 + scalar_mul_long((c(2) * x1 + one) * x3, 2) +
                   x1 * x2 * x2 - c(2) * x1 * x1 * x1 + x1 * x1 + c(2) * x1 + one;
        case 7:
            return (-(x1 + one) * x6 + c(2) * x4 - scalar_mul_long((x1 + one) * x3, 2) +
                    x1 * x1 * x1 - c(3) * x1 - one) *
                       x7 -
                   scalar_mul_long((x5 - x1 * x2) * x6, 2) - (x3 - x1 * x1 + x1 + c(2)) * x5 +
                   c(3) * x2 * x4 - (x1 + c(3)) * x2 * x3 - x2 * x2 * x2 +
                   (c(2) * x1 - one) * x1 * x2;
        default: throw input_error("eps_of_chi_e7: index 1..7");
    }
}

template <class S>
S eps_of_lambda_e7(int i, const std::vector<S>& lam, const S& one) {
    const auto c = [&](long v) { return scalar_mul_long(one, v); };
    const S &p0 = lam[0], &p1 = lam[1], &p2 = lam[2], &q0 = lam[3], &q1 = lam[4], &q2 = lam[5],
            &q3 = lam[6];
    switch (i) {
        case 1: return -q3;
        case 2: return p2 * p2 + c(12) * p2 - q2 + c(28);
        case 3: return scalar_mul_long((c(2) * p2 + c(9)) * q3, -3) - q1 + scalar_mul_long(p1 * (p2 + c(5)), 2);
        case 4:
            return c(9) * q3 * q3 - c(6) * p1 * q3 - c(2) * q2 - q0 + c(8) * p2 * p2 * p2 +
                   c(86) * p2 * p2 + scalar_mul_long((p0 + c(156)) * p2, 2) + p1 * p1 + c(10) * p0 +
                   c(378);
        case 5:
            return (c(8) * q2 - c(20) * p2 * p2 - c(174) * p2 - c(7) * p0 - c(351)) * q3 -
                   c(2) * p1 * q2 + scalar_mul_long((p2 + c(4)) * q1, 6) + c(14) * p1 * p2 * p2 +
                   c(108) * p1 * p2 + scalar_mul_long((p0 + c(101)) * p1, 2);
        case 6:
            return scalar_mul_long((c(4) * p2 + c(15)) * q3 * q3, 12) -
                   (c(5) * q1 + c(38) * p1 * p2 + c(140) * p1) * q3 + c(4) * q2 * q2 +
                   (c(16) * p2 * p2 + c(96) * p2 - c(4) * p0 + c(155)) * q2 + c(2) * p1 * q1 +
                   scalar_mul_long((c(4) * p2 + c(17)) * q0, 3) + c(28) * p2 * p2 * p2 * p2 +
                   c(360) * p2 * p2 * p2 + (c(4) * p0 + c(1765)) * p2 * p2 +
                   scalar_mul_long((c(4) * p1 * p1 + c(21) * p0 + c(1950)) * p2, 2) + c(29) * p1 * p1 +
                   p0 * p0 + c(88) * p0 + c(3276);
        case 7:
            return c(-36) * q3 * q3 * q3 + c(42) * p1 * q3 * q3 +
                   (c(4) * q2 - c(20) * q0 - c(56) * p2 * p2 * p2 - c(628) * p2 * p2 -
                    scalar_mul_long((p0 + c(168)) * p2, 14) - c(16) * p1 * p1 - c(46) * p0 - c(2925)) *
                       q3 +
                   (c(3) * q1 + c(6) * p1 * p2 + c(20) * p1) * q2 +
                   (c(21) * p2 * p2 + c(162) * p2 - p0 + c(323)) * q1 + c(6) * p1 * q0 +
                   c(42) * p1 * p2 * p2 * p2 + c(448) * p1 * p2 * p2 +
                   scalar_mul_long((p0 + c(799)) * p1 * p2, 2) + c(2) * p1 * p1 * p1 +
                   scalar_mul_long((p0 + c(316)) * p1, 6);
        default: throw input_error("eps_of_lambda_e7: index 1..7");
    }
}

template <class S>
S eta_of_chi_e7(int i, const std::vector<S>& chi, const S& one) {
    const auto c = [&](long v) { return scalar_mul_long(one, v); };
    if (i == 1) return -chi[0] + c(7);
    if (i == 2) return c(-6) * chi[0] + chi[2] + c(28);
    throw input_error("eta_of_chi_e7: index 1..2");
}

template <class S>
S eta_of_lambda_e7(int i, const std::vector<S>& lam, const S& one) {
    const auto c = [&](long v) { return scalar_mul_long(one, v); };
    const S &p0 = lam[0], &p2 = lam[2], &q2 = lam[5];
    if (i == 1) return c(-18) - c(6) * p2;
    if (i == 2) return p0 + c(72) * p2 + c(13) * p2 * p2 - q2 + c(99);
    throw input_error("eta_of_lambda_e7: index 1..2");
}

template <class S>
S e6_relation_rhs(const std::string& key, const std::vector<S>& lam, const S& one) {
    const auto c = [&](long v) { return scalar_mul_long(one, v); };
    const S &p0 = lam[0], &p1 = lam[1], &p2 = lam[2], &q0 = lam[3], &q1 = lam[4], &q2 = lam[5];
    if (key == "d1") return c(-2) * p1;
    if (key == "e1") return c(6) * p2;
    if (key == "em1") return p2 * p2 - q2;
    if (key == "e2") return c(13) * p2 * p2 + p0 - q2;
    if (key == "em2") return c(-2) * p1 * p2 + c(6) * p2 + q1;
    if (key == "e3")
        return c(8) * p2 * p2 * p2 + c(2) * p0 * p2 + p1 * p1 - c(6) * p1 - q0 + c(9);
    throw input_error("e6_relation_rhs: unknown key " + key);
}

} // namespace mwx

#endif
