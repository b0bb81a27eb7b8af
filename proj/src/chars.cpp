// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/chars.hpp"

#include <map>
#include <mutex>

namespace mwx {

WeierstrassData::WeierstrassData(Case cs_, std::vector<Rat> l) : cs(cs_), lambda(std::move(l)) {
    if (static_cast<int>(lambda.size()) != length(cs))
        throw input_error("lambda must have " + std::to_string(length(cs)) + " entries for " +
                          case_to_string(cs));
}

namespace {

// Negated copy of an orbit (the inverse monomials).
OrbitMultiset negated(const OrbitMultiset& o) {
    OrbitMultiset r;
    r.reserve(o.size());
    for (const auto& w : o) r.push_back(-w);
    std::sort(r.begin(), r.end());
    return r;
}

struct SymbolicSet {
    std::vector<LaurentZ> chi;      // chi_1..chi_n
    std::vector<LaurentZ> eps;      // [0] unused; eps_i = (-1)^i e_i of the coset / a-values
    std::vector<LaurentZ> eps_neg;  // E6 only: eps_{-1}, eps_{-2} at [1], [2]
    std::vector<LaurentZ> eta;      // E7 only: eta_1, eta_2 at [1], [2]
    LaurentZ delta1{Case::E6};      // E6 only
};

SymbolicSet build_e7() {
    const Case cs = Case::E7;
    const LaurentZ one = LaurentZ::constant(cs, Int(1));
    const auto& coset = minimal_coset(cs);

    std::vector<LaurentZ> psums;
    for (int k = 1; k <= 7; ++k) psums.push_back(LaurentZ::orbit_power_sum(cs, coset, k));
    const auto e = elementary_from_power_sums(psums, one);

    std::vector<LaurentZ> rsums;
    for (int k = 1; k <= 2; ++k) rsums.push_back(LaurentZ::orbit_power_sum(cs, roots(cs), k));
    const auto er = elementary_from_power_sums(rsums, one);

    SymbolicSet out;
    out.eps.assign(8, LaurentZ(cs));
    for (int i = 1; i <= 7; ++i) out.eps[static_cast<std::size_t>(i)] = i % 2 ? -e[static_cast<std::size_t>(i)] : e[static_cast<std::size_t>(i)];
    out.eta.assign(3, LaurentZ(cs));
    out.eta[1] = -er[1];
    out.eta[2] = er[2];

    const LaurentZ chi7 = e[1];
    const LaurentZ chi6 = e[2] - one;
    const LaurentZ chi5 = e[3] - e[1];
    const LaurentZ chi4 = e[4] - e[2];
    const LaurentZ chi1 = scalar_mul_long(one, 7) - out.eta[1];
    const LaurentZ chi3 = out.eta[2] + scalar_mul_long(chi1, 6) - scalar_mul_long(one, 28);
    // eps_5 = -(chi6+chi3-chi1^2+chi1+1) chi7 + (chi1-1) chi5 - chi2 chi3,
    // solved for chi2 by exact division; failure would contradict the
    // relation and is a hard error.
    const LaurentZ numer =
        -out.eps[5] - (chi6 + chi3 - chi1 * chi1 + chi1 + one) * chi7 + (chi1 - one) * chi5;
    const LaurentZ chi2 = exact_divide(numer, chi3);
    out.chi = {chi1, chi2, chi3, chi4, chi5, chi6, chi7};
    return out;
}

SymbolicSet build_e6() {
    const Case cs = Case::E6;
    const LaurentZ one = LaurentZ::constant(cs, Int(1));
    const auto& coset = minimal_coset(cs);
    const auto inv = negated(coset);

    std::vector<LaurentZ> ps, pneg;
    for (int k = 1; k <= 3; ++k) ps.push_back(LaurentZ::orbit_power_sum(cs, coset, k));
    for (int k = 1; k <= 2; ++k) pneg.push_back(LaurentZ::orbit_power_sum(cs, inv, k));
    const auto e = elementary_from_power_sums(ps, one);
    const auto em = elementary_from_power_sums(pneg, one);

    SymbolicSet out;
    out.eps.assign(4, LaurentZ(cs));
    for (int i = 1; i <= 3; ++i) out.eps[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
    out.eps_neg.assign(3, LaurentZ(cs));
    out.eps_neg[1] = em[1];
    out.eps_neg[2] = em[2];
    out.delta1 = LaurentZ::orbit_sum(cs, roots(cs));

    const LaurentZ six = scalar_mul_long(one, 6);
    out.chi = {out.eps[1], out.delta1 + six, out.eps[2], out.eps[3], out.eps_neg[2], out.eps_neg[1]};
    return out;
}

const SymbolicSet& symbolic_set(Case cs) {
    MWX_CHECK(cs != Case::E8, "E8 characters are not materialized as Laurent polynomials");
    static std::map<Case, SymbolicSet> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cs);
    if (it == cache.end()) it = cache.emplace(cs, cs == Case::E7 ? build_e7() : build_e6()).first;
    return it->second;
}

template <class T>
std::vector<T> chars_at_point_impl(Case cs, const TorusPoint<T>& xi) {
    MWX_CHECK(cs != Case::E8, "numeric E8 characters are outside the supported pipeline");
    const T one(1);
    const auto& coset = minimal_coset(cs);
    std::vector<T> w;
    w.reserve(coset.size());
    for (const auto& m : coset) w.push_back(eval_monomial(m, xi));

    auto power_sums = [&](const std::vector<T>& vals, int kmax) {
        std::vector<T> ps;
        std::vector<T> cur = vals;
        for (int k = 1; k <= kmax; ++k) {
            T acc(0);
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (k > 1) cur[i] *= vals[i];
                acc += cur[i];
            }
            ps.push_back(acc);
        }
        return ps;
    };

    if (cs == Case::E6) {
        const auto e = elementary_from_power_sums(power_sums(w, 3), one);
        std::vector<T> winv;
        winv.reserve(w.size());
        for (const auto& x : w) winv.push_back(one / x);
        const auto em = elementary_from_power_sums(power_sums(winv, 2), one);
        T delta1(0);
        for (const auto& a : roots(cs)) delta1 += eval_monomial(a, xi);
        return {e[1], delta1 + T(6), e[2], e[3], em[2], em[1]};
    }

    const auto e = elementary_from_power_sums(power_sums(w, 7), one);
    std::vector<T> rv;
    for (const auto& a : roots(cs)) rv.push_back(eval_monomial(a, xi));
    const auto er = elementary_from_power_sums(power_sums(rv, 2), one);
    const T chi7 = e[1];
    const T chi6 = e[2] - one;
    const T chi5 = e[3] - e[1];
    const T chi4 = e[4] - e[2];
    const T chi1 = T(7) + er[1];
    const T chi3 = er[2] + T(6) * chi1 - T(28);
    const T eps5 = -e[5];
    const T numer = -eps5 - (chi6 + chi3 - chi1 * chi1 + chi1 + one) * chi7 + (chi1 - one) * chi5;
    T chi2(0);
    if (is_zero(chi3)) {
        // Rare degenerate point: fall back to the symbolic character.
        chi2 = symbolic_set(cs).chi[1].eval(xi);
    } else {
        chi2 = numer / chi3;
    }
    return {chi1, chi2, chi3, chi4, chi5, chi6, chi7};
}

} // namespace

const std::vector<LaurentZ>& symbolic_chars(Case cs) { return symbolic_set(cs).chi; }

std::vector<Rat> chars_at_point(Case cs, const TorusPoint<Rat>& xi) {
    return chars_at_point_impl(cs, xi);
}
std::vector<Cyclo> chars_at_point(Case cs, const TorusPoint<Cyclo>& xi) {
    return chars_at_point_impl(cs, xi);
}

namespace detail {

const std::array<Rat, 8>& e8_pivots() {
    static const std::array<Rat, 8> pivots = [] {
        std::array<Rat, 8> out;
        const std::vector<Rat> zeros(8, Rat(0));
        const auto base = chars_from_lambda_t<Rat>(Case::E8, zeros, Rat(1));
        for (std::size_t k = 0; k < e8_solve_order.size(); ++k) {
            const auto [ci, slot] = e8_solve_order[k];
            std::vector<Rat> unit(8, Rat(0));
            unit[static_cast<std::size_t>(slot)] = Rat(1);
            const auto bumped = chars_from_lambda_t<Rat>(Case::E8, unit, Rat(1));
            out[k] = bumped[static_cast<std::size_t>(ci)] - base[static_cast<std::size_t>(ci)];
            MWX_CHECK(!is_zero(out[k]), "vanishing pivot in the E8 inverse");
        }
        return out;
    }();
    return pivots;
}

} // namespace detail

WeierstrassData lambda_from_chars(Case cs, const std::vector<Rat>& chi) {
    return WeierstrassData(cs, lambda_from_chars_t<Rat>(cs, chi, Rat(1)));
}

std::vector<Rat> chars_from_lambda(const WeierstrassData& w) {
    return chars_from_lambda_t<Rat>(w.cs, w.lambda, Rat(1));
}

namespace {

TorusPoint<Rat> all_ones(Case cs) {
    return TorusPoint<Rat>(cs, std::vector<Rat>(static_cast<std::size_t>(rank_of(cs)), Rat(1)), Rat(1));
}

CheckLine check_eq(const std::string& name, bool pass, const std::string& detail = "") {
    return CheckLine{name, pass, detail};
}

} // namespace

RelationReport verify_char_relations(Case cs) {
    MWX_CHECK(cs != Case::E8, "relation suite covers E6 and E7");
    RelationReport rep;
    const auto& S = symbolic_set(cs);
    const int n = rank_of(cs);

    // Weyl invariance of every character under every simple reflection.
    for (int i = 0; i < n; ++i) {
        bool inv = true;
        for (const auto& a : simple_roots(cs))
            if (S.chi[static_cast<std::size_t>(i)].apply_map(reflection(a)) != S.chi[static_cast<std::size_t>(i)]) {
                inv = false;
                break;
            }
        rep.checks.push_back(check_eq("chi_" + std::to_string(i + 1) + " weyl-invariant", inv));
    }

    // Dimensions at the all-ones point.
    const auto ones = all_ones(cs);
    for (int i = 0; i < n; ++i) {
        const Rat v = S.chi[static_cast<std::size_t>(i)].eval(ones);
        const Int d = weyl_dimension(cs, i + 1);
        rep.checks.push_back(check_eq("chi_" + std::to_string(i + 1) + "(1,...,1) = dim V_" + std::to_string(i + 1),
                                      v == Rat(d), rat_to_string(v) + " vs " + d.str()));
    }

    if (cs == Case::E7) {
        const LaurentZ one = LaurentZ::constant(cs, Int(1));
        for (int i = 1; i <= 7; ++i) {
            const LaurentZ rhs = eps_of_chi_e7(i, S.chi, one);
            rep.checks.push_back(
                check_eq("eps_" + std::to_string(i) + "(chi) identity", rhs == S.eps[static_cast<std::size_t>(i)]));
        }
        for (int i = 1; i <= 2; ++i) {
            const LaurentZ rhs = eta_of_chi_e7(i, S.chi, one);
            rep.checks.push_back(
                check_eq("eta_" + std::to_string(i) + "(chi) identity", rhs == S.eta[static_cast<std::size_t>(i)]));
        }
        return rep;
    }

    // E6: the six chi-identifications...
    {
        const LaurentZ six = LaurentZ::constant(cs, Int(6));
        rep.checks.push_back(check_eq("chi_1 = eps_1", S.chi[0] == S.eps[1]));
        rep.checks.push_back(check_eq("chi_2 = delta_1 + 6", S.chi[1] == S.delta1 + six));
        rep.checks.push_back(check_eq("chi_3 = eps_2", S.chi[2] == S.eps[2]));
        rep.checks.push_back(check_eq("chi_4 = eps_3", S.chi[3] == S.eps[3]));
        rep.checks.push_back(check_eq("chi_5 = eps_-2", S.chi[4] == S.eps_neg[2]));
        rep.checks.push_back(check_eq("chi_6 = eps_-1", S.chi[5] == S.eps_neg[1]));
    }
    // ...and the six lambda-relations, with lambda(chi) substituted in.
    {
        const Laurent one = Laurent::constant(cs, Rat(1));
        std::vector<Laurent> chi_q;
        for (const auto& c : S.chi) chi_q.push_back(c.converted<Rat>());
        const auto lam = lambda_from_chars_t<Laurent>(cs, chi_q, one);
        auto check_rel = [&](const std::string& key, const LaurentZ& lhs, const std::string& text) {
            rep.checks.push_back(
                check_eq(text, lhs.converted<Rat>() == e6_relation_rhs(key, lam, one)));
        };
        check_rel("d1", S.delta1, "delta_1 = -2 p_1");
        check_rel("e1", S.eps[1], "eps_1 = 6 p_2");
        check_rel("em1", S.eps_neg[1], "eps_-1 = p_2^2 - q_2");
        check_rel("e2", S.eps[2], "eps_2 = 13 p_2^2 + p_0 - q_2");
        check_rel("em2", S.eps_neg[2], "eps_-2 = -2 p_1 p_2 + 6 p_2 + q_1");
        check_rel("e3", S.eps[3], "eps_3 = 8 p_2^3 + 2 p_0 p_2 + p_1^2 - 6 p_1 - q_0 + 9");
    }
    return rep;
}

RelationReport verify_roundtrip(Case cs) {
    RelationReport rep;
    const int n = rank_of(cs);
    const MPolyQ one(1);

    std::vector<MPolyQ> lam_vars, chi_vars;
    for (int i = 0; i < n; ++i) {
        lam_vars.push_back(MPolyQ::var(i));
        chi_vars.push_back(MPolyQ::var(i));
    }

    const auto chi_of_lam = chars_from_lambda_t<MPolyQ>(cs, lam_vars, one);
    const auto lam_back = lambda_from_chars_t<MPolyQ>(cs, chi_of_lam, one);
    rep.checks.push_back({"lambda -> chi -> lambda is the identity", lam_back == lam_vars, ""});

    const auto lam_of_chi = lambda_from_chars_t<MPolyQ>(cs, chi_vars, one);
    const auto chi_back = chars_from_lambda_t<MPolyQ>(cs, lam_of_chi, one);
    rep.checks.push_back({"chi -> lambda -> chi is the identity", chi_back == chi_vars, ""});
    return rep;
}

} // namespace mwx
