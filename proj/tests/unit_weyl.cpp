#include "doctest.h"

#include <random>
#include <set>

#include "mwx/weyl.hpp"

using namespace mwx;

TEST_CASE("root counts and norms") {
    CHECK(roots(Case::E6).size() == 72);
    CHECK(roots(Case::E7).size() == 126);
    CHECK(roots(Case::E8).size() == 240);
    for (Case cs : {Case::E6, Case::E7, Case::E8})
        for (const auto& a : roots(cs)) CHECK(norm2(a) == Rat(2));
}

TEST_CASE("minuscule coset counts and norms") {
    CHECK(minimal_coset(Case::E6).size() == 27);
    CHECK(minimal_coset(Case::E7).size() == 56);
    for (const auto& w : minimal_coset(Case::E6)) CHECK(norm2(w) == Rat(4, 3));
    for (const auto& w : minimal_coset(Case::E7)) CHECK(norm2(w) == Rat(3, 2));
    CHECK_THROWS_AS(minimal_coset(Case::E8), input_error);
}

TEST_CASE("reflections preserve the pairing and are involutive") {
    std::mt19937_64 rng(424242);
    for (Case cs : {Case::E6, Case::E7, Case::E8}) {
        const auto srs = simple_roots(cs);
        const auto id = LatticeMap::identity(cs);
        for (const auto& a : srs) {
            const LatticeMap s = reflection(a);
            CHECK(s.compose(s) == id);
            CHECK(s.det() == -1);
            // Pairing preservation on random vectors.
            std::uniform_int_distribution<int> d(-3, 3);
            for (int iter = 0; iter < 10; ++iter) {
                ExpVec x = ExpVec::zero(cs), y = ExpVec::zero(cs);
                for (int i = 0; i < rank_of(cs); ++i) {
                    x.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(d(rng));
                    y.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(d(rng));
                }
                CHECK(pairing(s.apply(x), s.apply(y)) == pairing(x, y));
            }
        }
    }
}

TEST_CASE("simple reflections permute roots and cosets") {
    for (Case cs : {Case::E6, Case::E7, Case::E8}) {
        const auto& rts = roots(cs);
        std::set<std::uint64_t> keys;
        for (const auto& a : rts) keys.insert(a.pack());
        for (const auto& sr : simple_roots(cs)) {
            const LatticeMap s = reflection(sr);
            std::set<std::uint64_t> mapped;
            for (const auto& a : rts) mapped.insert(s.apply(a).pack());
            CHECK(mapped == keys);
        }
        if (cs == Case::E8) continue;
        const auto& mc = minimal_coset(cs);
        std::set<std::uint64_t> ckeys;
        for (const auto& w : mc) ckeys.insert(w.pack());
        for (const auto& sr : simple_roots(cs)) {
            const LatticeMap s = reflection(sr);
            std::set<std::uint64_t> mapped;
            for (const auto& w : mc) mapped.insert(s.apply(w).pack());
            CHECK(mapped == ckeys);
        }
    }
}

TEST_CASE("orbits of fundamental-type vectors") {
    CHECK(orbit(ExpVec::zero(Case::E7)).size() == 1);

    // v_1 in E7 generates the 56-element coset.
    {
        std::vector<int> v(7, 0);
        v[0] = 1;
        const auto orb = orbit(ExpVec::from_vu(Case::E7, v, 0));
        CHECK(orb == minimal_coset(Case::E7));
    }
    // v_1 - v_2 in E8 generates all 240 roots.
    {
        std::vector<int> v(8, 0);
        v[0] = 1;
        v[1] = -1;
        const auto orb = orbit(ExpVec::from_vu(Case::E8, v, 0));
        CHECK(orb == roots(Case::E8));
    }
    // v_1 in E6 generates the 27-element coset.
    {
        std::vector<int> v(6, 0);
        v[0] = 1;
        const auto orb = orbit(ExpVec::from_vu(Case::E6, v, 0));
        CHECK(orb == minimal_coset(Case::E6));
    }
}

TEST_CASE("E7 coset is closed under negation") {
    const auto& mc = minimal_coset(Case::E7);
    std::set<std::uint64_t> keys;
    ExpVec sum = ExpVec::zero(Case::E7);
    for (const auto& w : mc) keys.insert(w.pack());
    for (const auto& w : mc) {
        CHECK(keys.count((-w).pack()) == 1);
        sum = sum + w;
    }
    CHECK(sum == ExpVec::zero(Case::E7));
}

TEST_CASE("weyl dimensions") {
    const Int e6[] = {27, 78, 351, 2925, 351, 27};
    for (int i = 1; i <= 6; ++i) CHECK(weyl_dimension(Case::E6, i) == e6[i - 1]);

    CHECK(weyl_dimension(Case::E7, 1) == 133);
    CHECK(weyl_dimension(Case::E7, 2) == 912);
    CHECK(weyl_dimension(Case::E7, 3) == 8645);
    CHECK(weyl_dimension(Case::E7, 4) == 365750);
    CHECK(weyl_dimension(Case::E7, 5) == 27664);
    CHECK(weyl_dimension(Case::E7, 6) == 1539);
    CHECK(weyl_dimension(Case::E7, 7) == 56);

    CHECK(weyl_dimension(Case::E8, 8) == 248);
    CHECK(weyl_dimension(Case::E8, 1) == 3875);
    CHECK(weyl_dimension(Case::E8, 7) == 30380);
}

TEST_CASE("reflection in the branch node") {
    // u -> 2u - v_1 - v_2 - v_3 under reflection in u - v_1 - v_2 - v_3.
    const ExpVec alpha = simple_root(Case::E7, 2);
    const LatticeMap s = reflection(alpha);
    ExpVec u = ExpVec::zero(Case::E7);
    u.c[6] = 1;
    const ExpVec img = s.apply(u);
    const ExpVec expect = ExpVec::from_vu(Case::E7, {-1, -1, -1, 0, 0, 0, 0}, 2);
    CHECK(img == expect);
}
