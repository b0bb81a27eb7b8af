#include "doctest.h"

#include <random>

#include "mwx/degeneration.hpp"
#include "mwx/elim.hpp"
#include "mwx/galois.hpp"
#include "mwx/serialize.hpp"

using namespace mwx;

TEST_CASE("pi multiset basics") {
    // generic split point: no vanishing roots
    {
        const auto xi = refdata::split_xi(Case::E7);
        CHECK(nu(Case::E7, xi) == 0);
    }
    // all-ones point of E8: every root vanishes
    {
        TorusPoint<Cyclo> ones(Case::E8, std::vector<Cyclo>(8, Cyclo(1)), Cyclo(1));
        const auto pis = pi_multiset(Case::E8, ones);
        CHECK(pis.size() == 240);
        for (const auto& v : pis) CHECK(v == Cyclo(1));
        CHECK(nu(Case::E8, ones) == 120);
    }
    // row 18: exactly 24 unit values (a D_4 worth of roots)
    {
        const auto rows = table_rows(Case::E7);
        const auto it = std::find_if(rows.begin(), rows.end(),
                                     [](const DegenerationRow& r) { return r.os_type == 18; });
        REQUIRE(it != rows.end());
        int ones = 0;
        for (const auto& v : pi_multiset(Case::E7, it->xi))
            if (v == Cyclo(1)) ++ones;
        CHECK(ones == 24);
        CHECK(2 * nu(Case::E7, it->xi) == 24);
    }
}

TEST_CASE("nu is Weyl invariant") {
    std::mt19937_64 rng(0xF00D);
    std::uniform_int_distribution<long> d(2, 9);
    for (int iter = 0; iter < 10; ++iter) {
        const Case cs = iter % 2 ? Case::E7 : Case::E8;
        std::vector<Rat> s;
        for (int i = 0; i + 1 < rank_of(cs); ++i) s.emplace_back(d(rng));
        const auto xi = TorusPoint<Rat>::from_partial(cs, std::move(s), Rat(d(rng)));
        const int base = nu(cs, xi);
        for (const auto& alpha : simple_roots(cs)) {
            const LatticeMap m = reflection(alpha);
            // transport the point: new coordinates are the values of the
            // mapped basis monomials
            std::vector<Rat> ns;
            for (int i = 0; i < rank_of(cs); ++i) {
                ExpVec e = ExpVec::zero(cs);
                e.c[static_cast<std::size_t>(i)] = 1;
                if (i == rank_of(cs) - 1) continue;
                ns.push_back(eval_monomial(m.apply(e), xi));
            }
            ExpVec u = ExpVec::zero(cs);
            u.c[static_cast<std::size_t>(rank_of(cs) - 1)] = 1;
            const Rat nr = eval_monomial(m.apply(u), xi);
            // the mapped point still sits on the torus hypersurface
            const auto xi2 = TorusPoint<Rat>::from_partial(cs, std::move(ns), nr);
            CHECK(nu(cs, xi2) == base);
        }
    }
}

TEST_CASE("full degeneration tables verify") {
    {
        const auto reports = verify_all_rows(Case::E7);
        CHECK(reports.size() == 30);
        int fiber_checked = 0;
        for (const auto& r : reports) {
            INFO("row ", r.os_type);
            CHECK(r.pass);
            if (r.fiber_checked) {
                ++fiber_checked;
                CHECK(r.fiber_pass);
            }
        }
        CHECK(fiber_checked == 27); // three rows need fourth roots of unity
    }
    {
        const auto reports = verify_all_rows(Case::E8);
        CHECK(reports.size() == 20);
        for (const auto& r : reports) {
            INFO("row ", r.os_type);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("row 21 pins the fiber at infinity") {
    // The printed lattice A_1^2 + A_3 contains the inherent A_1 at t=inf;
    // the finite places carry A_1 + A_3 (14 roots), matching 2 nu.
    const auto rows = table_rows(Case::E7);
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [](const DegenerationRow& r) { return r.os_type == 21; });
    REQUIRE(it != rows.end());
    const auto rep = verify_table_row(Case::E7, *it);
    CHECK(rep.two_nu == 14);
    CHECK(rep.pass);
    CHECK(rep.fiber_checked);
    CHECK(rep.fiber_pass);
}

TEST_CASE("certificates") {
    const auto& f = refdata::big_e7_polynomial();
    const auto rep = check_certificate(f, refdata::big_certificate(Case::E7));
    CHECK(rep.all_match());
    CHECK(rep.lines.size() == 2);
    CHECK(rep.lines[0].got.to_string() == "(7)^8");
    CHECK(rep.lines[1].got.to_string() == "(3)^2(5)^4(15)^2");
    // degree-sum invariant
    for (const auto& l : rep.lines) CHECK(l.got.total_degree() == 56);
    // degree mismatch is an input error
    CHECK_THROWS_AS(check_certificate(QPoly::x(), refdata::big_certificate(Case::E7)), input_error);
}

TEST_CASE("big-e7 polynomial from the pipeline matches the stored one") {
    WeierstrassData w(Case::E7, std::vector<Rat>(7, Rat(1)));
    CHECK(build_phi(w) == refdata::big_e7_polynomial());
}

TEST_CASE("serialization round trips") {
    using io::json;
    const auto& w = refdata::split_lambda(Case::E7);
    CHECK(io::lambda_from_json(io::to_json(w)).lambda == w.lambda);

    const QPoly f{Rat(1, 2), Rat(0), Rat(-3)};
    CHECK(io::qpoly_from_json(io::to_json(f)) == f);

    const Cyclo z = Cyclo::zeta(5) + Cyclo(Rat(2, 3));
    CHECK(io::cyclo_from_json(io::to_json(z)) == z);

    const auto rows = table_rows(Case::E8);
    const auto j = io::to_json(rows[0].xi);
    const auto back = io::xi_from_json(j);
    CHECK(back.cs == Case::E8);
    for (int i = 0; i < 8; ++i) CHECK(back.s[static_cast<std::size_t>(i)] == rows[0].xi.s[static_cast<std::size_t>(i)]);
}
