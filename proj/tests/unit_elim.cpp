#include "doctest.h"

#include <random>

#include "mwx/elim.hpp"
#include "mwx/refdata.hpp"

using namespace mwx;

namespace {

TorusPoint<Rat> random_point(std::mt19937_64& rng, Case cs) {
    std::uniform_int_distribution<long> d(2, 19);
    std::vector<Rat> s;
    for (int i = 0; i + 1 < rank_of(cs); ++i) s.emplace_back(d(rng));
    return TorusPoint<Rat>::from_partial(cs, std::move(s), Rat(d(rng)));
}

} // namespace

TEST_CASE("root-multiset law at random torus points") {
    std::mt19937_64 rng(0xABCD01);
    for (Case cs : {Case::E6, Case::E7}) {
        for (int iter = 0; iter < 3; ++iter) {
            const auto xi = random_point(rng, cs);
            const auto roots = predicted_phi_roots(cs, xi);
            // skip points with coincident roots (the product law needs none)
            std::vector<Rat> sorted = roots;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            const auto w = lambda_from_chars(cs, chars_at_point(cs, xi));
            CHECK(build_phi(w) == poly_from_roots(roots));
        }
    }
}

TEST_CASE("eliminand degrees and extraneous-factor recipe") {
    // The two final eliminands have degrees 8 and 9 in the eliminated
    // variable for the E8 system, and the raw resultant is divisible by
    // the 22nd power of the surviving variable.
    WeierstrassData w(Case::E8, {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), Rat(17), Rat(19)});
    const ElimProbe probe = elim_probe(Case::E8, ElimVariant::phi, w);
    CHECK(probe.t1_deg_x == 8);
    CHECK(probe.t2_deg_x == 9);
    CHECK(probe.val0 >= 22);
    CHECK(probe.m_g == 2);
    CHECK(probe.residual_degree == 240);
}

TEST_CASE("E6 output shape") {
    const auto xi = TorusPoint<Rat>::from_partial(
        Case::E6, {Rat(3), Rat(5), Rat(7), Rat(11), Rat(13)}, Rat(2));
    const auto w = lambda_from_chars(Case::E6, chars_at_point(Case::E6, xi));
    const QPoly phi = build_phi(w);
    CHECK(phi.degree() == 27);
    CHECK(phi.lc() == Rat(1));
    CHECK(phi.coeff(0) == Rat(1));
    // The top and bottom coefficient bands carry the elementary symmetric
    // functions of the inverse and plain specializations respectively.
    std::vector<Rat> vals;
    for (const auto& m : minimal_coset(Case::E6)) vals.push_back(eval_monomial(m, xi));
    Rat e1(0), em1(0);
    for (const auto& v : vals) {
        e1 += v;
        em1 += Rat(1) / v;
    }
    CHECK(phi.coeff(1) == e1);
    CHECK(phi.coeff(26) == em1);
}

TEST_CASE("E7 psi leading coefficients match the printed eta formulas") {
    const Rat one(1);
    // lambda with p_2 = 1: eta_1 = -24.
    WeierstrassData w(Case::E7, {Rat(2), Rat(-1), Rat(1), Rat(3), Rat(1), Rat(2), Rat(5)});
    const QPoly psi = build_psi(w);
    REQUIRE(psi.degree() == 126);
    CHECK(psi.coeff(125) == Rat(-24));
    CHECK(psi.coeff(125) == eta_of_lambda_e7(1, w.lambda, one));
    CHECK(psi.coeff(124) == eta_of_lambda_e7(2, w.lambda, one));
}

TEST_CASE("printed eps(lambda) formulas equal pipeline coefficients") {
    const Rat one(1);
    std::mt19937_64 rng(777123);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int iter = 0; iter < 3; ++iter) {
        std::vector<Rat> lam;
        for (int i = 0; i < 7; ++i) lam.emplace_back(d(rng));
        try {
            const QPoly phi = build_phi(WeierstrassData(Case::E7, lam));
            for (int i = 1; i <= 7; ++i)
                CHECK(phi.coeff(56 - i) == eps_of_lambda_e7(i, lam, one));
            // reciprocity
            for (int i = 0; i <= 56; ++i) CHECK(phi.coeff(i) == phi.coeff(56 - i));
        } catch (const degenerate_error&) {
            // a degenerate draw is fine; the law is vacuous there
        }
    }
}

TEST_CASE("modular pipeline consistency with the exact one") {
    WeierstrassData w(Case::E8, std::vector<Rat>(8, Rat(1)));
    const QPoly g = build_phi(w);
    for (u64 p : {1000003ull, 2147483647ull}) {
        const Zp F(p);
        CHECK(build_phi_mod(w, p) == zpoly::from_qpoly(F, g));
    }
    // small primes cannot host the evaluation grid
    CHECK_THROWS_AS(build_phi_mod(w, 79), bad_prime_error);
}

TEST_CASE("degenerate inputs are reported, not absorbed") {
    // p = q = 0 for E7 collapses the section system (the curve even fails
    // to carry 56 distinct minimal sections); the pipeline must refuse.
    WeierstrassData w(Case::E7, std::vector<Rat>(7, Rat(0)));
    CHECK_THROWS_AS(build_phi(w), degenerate_error);
}

TEST_CASE("lagrange reconstruction basics") {
    const auto oracle = [](const std::vector<Rat>& x) { return x[0] * x[1]; };
    const MPolyQ rec = lagrange_reconstruct(oracle, {1, 1});
    CHECK(rec == MPolyQ::var(0) * MPolyQ::var(1));
}

TEST_CASE("psi constant term and reciprocity at the split point") {
    const auto& w = refdata::split_lambda(Case::E7);
    const QPoly psi = build_psi(w);
    REQUIRE(psi.degree() == 126);
    CHECK(psi.coeff(0) == Rat(1));
    for (int i = 0; i <= 126; ++i) CHECK(psi.coeff(i) == psi.coeff(126 - i));
    CHECK(psi.eval(Rat(1)) != Rat(0));
    CHECK(psi == poly_from_roots(predicted_psi_roots(refdata::split_xi(Case::E7))));
}
