#include "doctest.h"

#include <random>

#include "mwx/laurent.hpp"

using namespace mwx;

namespace {

ExpVec ev(Case cs, const std::vector<int>& v, int u) { return ExpVec::from_vu(cs, v, u); }

Laurent mono(Case cs, const std::vector<int>& v, int u, const Rat& c = Rat(1)) {
    return Laurent::monomial(ev(cs, v, u), c);
}

Laurent random_laurent(std::mt19937_64& rng, Case cs, int nterms) {
    std::uniform_int_distribution<int> dcoord(-3, 3);
    std::uniform_int_distribution<long> dcoeff(-9, 9);
    Laurent r(cs);
    for (int t = 0; t < nterms; ++t) {
        ExpVec e = ExpVec::zero(cs);
        for (int i = 0; i < rank_of(cs); ++i) e.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(dcoord(rng));
        r += Laurent::monomial(e, Rat(dcoeff(rng)));
    }
    return r;
}

TorusPoint<Rat> split_e7_point() {
    return TorusPoint<Rat>::from_partial(Case::E7, {Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), Rat(17)}, Rat(2));
}

} // namespace

TEST_CASE("cyclotomic arithmetic") {
    const Cyclo i = Cyclo::zeta(4);
    CHECK(i * i == Cyclo(Rat(-1)));
    const Cyclo z3 = Cyclo::zeta(3);
    CHECK(z3 * z3 + z3 + Cyclo(1) == Cyclo(0));
    CHECK(z3.pow(3) == Cyclo(1));
    CHECK(z3.pow(-1) == z3 * z3);
    CHECK((z3 / z3) == Cyclo(1));
    // mixed orders promote: zeta_3 * zeta_4 is a primitive 12th root
    const Cyclo w = z3 * i;
    CHECK(w.pow(12) == Cyclo(1));
    CHECK(w.pow(6) != Cyclo(1));
    CHECK((Cyclo(Rat(2)) + z3 - z3) == Cyclo(Rat(2)));
    CHECK_THROWS_AS(Cyclo::zeta(7) * Cyclo::zeta(11), input_error); // lcm 77 > 60
    CHECK_THROWS_AS(Cyclo(0).inverse(), degenerate_error);
}

TEST_CASE("torus point forces the last coordinate") {
    const auto xi = split_e7_point();
    CHECK(xi.s[6] == Rat(8, 255255));
    // s_1 evaluates to 3; s_7 to 8/255255 via the lattice relation
    std::vector<int> v(7, 0);
    v[0] = 1;
    CHECK(mono(Case::E7, v, 0).eval(xi) == Rat(3));
    v[0] = 0;
    v[6] = 1;
    CHECK(mono(Case::E7, v, 0).eval(xi) == Rat(8, 255255));
    CHECK_THROWS_AS(TorusPoint<Rat>(Case::E7,
                                    {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(2)}, Rat(1)),
                    input_error);
}

TEST_CASE("orbit sum of the E7 coset matches the listed multiset") {
    const auto xi = split_e7_point();
    // Direct rational arithmetic over {s_i, 1/s_i} and {r/(s_i s_j), s_i s_j / r}.
    Rat expect(0);
    for (int i = 0; i < 7; ++i) {
        expect += xi.s[static_cast<std::size_t>(i)];
        expect += Rat(1) / xi.s[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            const Rat sij = xi.s[static_cast<std::size_t>(i)] * xi.s[static_cast<std::size_t>(j)];
            expect += xi.r / sij + sij / xi.r;
        }
    const Laurent os = Laurent::orbit_sum(Case::E7, minimal_coset(Case::E7));
    CHECK(os.size() == 56);
    CHECK(os.eval(xi) == expect);
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937_64 rng(852);
    const auto xi = split_e7_point();
    for (int iter = 0; iter < 50; ++iter) {
        const Laurent f = random_laurent(rng, Case::E7, 6);
        const Laurent g = random_laurent(rng, Case::E7, 5);
        CHECK((f * g).eval(xi) == f.eval(xi) * g.eval(xi));
        CHECK((f + g).eval(xi) == f.eval(xi) + g.eval(xi));
    }
}

TEST_CASE("eval with cyclotomic coordinates") {
    const Cyclo I = Cyclo::zeta(4);
    // E7 row with entries I,I,I,I,2,2 and r=2: s_7 = 8/(I^4*4) = 2.
    auto xi = TorusPoint<Cyclo>::from_partial(
        Case::E7, {I, I, I, I, Cyclo(2), Cyclo(2)}, Cyclo(2));
    CHECK(xi.s[6] == Cyclo(2));
    std::vector<int> v(7, 0);
    v[0] = 1;
    v[1] = -1;
    // s_1/s_2 = 1 at this point
    CHECK(Laurent::monomial(ev(Case::E7, v, 0), Rat(1)).eval(xi) == Cyclo(1));
}

TEST_CASE("exact division") {
    // (s_1^2 - s_2^2) / (s_1 - s_2) = s_1 + s_2
    const Case cs = Case::E7;
    std::vector<int> v1(7, 0), v2(7, 0);
    v1[0] = 1;
    v2[1] = 1;
    const Laurent s1 = mono(cs, v1, 0), s2 = mono(cs, v2, 0);
    CHECK(exact_divide(s1 * s1 - s2 * s2, s1 - s2) == s1 + s2);
    CHECK_THROWS_AS(exact_divide(s1 + Laurent::constant(cs, Rat(1)), s2 + Laurent::constant(cs, Rat(1))),
                    degenerate_error);

    std::mt19937_64 rng(99331);
    int done = 0;
    while (done < 50) {
        const Laurent f = random_laurent(rng, cs, 5);
        const Laurent g = random_laurent(rng, cs, 4);
        if (g.is_zero_poly()) continue;
        ++done;
        CHECK(exact_divide(f * g, g) == f);
    }
}

TEST_CASE("newton identities") {
    const Case cs = Case::E6;
    // multiset {x, 1/x}: e_2 = 1
    std::vector<int> v(6, 0);
    v[0] = 1;
    const Laurent x = mono(cs, v, 0);
    const Laurent xinv = mono(cs, {-1, 0, 0, 0, 0, 0}, 0);
    std::vector<Laurent> p{x + xinv, x * x + xinv * xinv};
    const auto e = elementary_from_power_sums(p, Laurent::constant(cs, Rat(1)));
    CHECK(e[1] == x + xinv);
    CHECK(e[2] == Laurent::constant(cs, Rat(1)));

    // multiset of 56 ones: e_i = binomial(56, i)
    std::vector<Rat> pr(4, Rat(56));
    const auto er = elementary_from_power_sums(pr, Rat(1));
    CHECK(er[2] == Rat(1540));
    CHECK(er[3] == Rat(27720));

    // brute force oracle over random monomial multisets of size <= 8
    std::mt19937_64 rng(246810);
    std::uniform_int_distribution<int> dcoord(-2, 2);
    std::uniform_int_distribution<int> dsize(1, 8);
    for (int iter = 0; iter < 50; ++iter) {
        const int m = dsize(rng);
        std::vector<Laurent> mons;
        for (int t = 0; t < m; ++t) {
            ExpVec e2 = ExpVec::zero(cs);
            for (int i = 0; i < 6; ++i) e2.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(dcoord(rng));
            mons.push_back(Laurent::monomial(e2, Rat(1)));
        }
        std::vector<Laurent> ps;
        for (int k = 1; k <= m; ++k) {
            Laurent acc(cs);
            for (const auto& mo : mons) {
                Laurent pk = Laurent::constant(cs, Rat(1));
                for (int t = 0; t < k; ++t) pk *= mo;
                acc += pk;
            }
            ps.push_back(acc);
        }
        const auto en = elementary_from_power_sums(ps, Laurent::constant(cs, Rat(1)));
        // direct expansion of elementary symmetric functions
        for (int k = 1; k <= m; ++k) {
            Laurent direct(cs);
            std::vector<int> idx(static_cast<std::size_t>(k));
            // iterate over k-subsets
            for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                Laurent prod = Laurent::constant(cs, Rat(1));
                for (int i : idx) prod *= mons[static_cast<std::size_t>(i)];
                direct += prod;
                int pos = k - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
            }
            CHECK(en[static_cast<std::size_t>(k)] == direct);
        }
    }
}

TEST_CASE("lattice maps on laurent polynomials") {
    const Case cs = Case::E7;
    std::mt19937_64 rng(1123);
    const Laurent f = random_laurent(rng, cs, 8);
    CHECK(f.apply_map(LatticeMap::identity(cs)) == f);

    // transposition v_1 <-> v_2 fixes s_1 + s_2
    const LatticeMap s12 = reflection(simple_root(cs, 1));
    std::vector<int> v1(7, 0), v2(7, 0);
    v1[0] = 1;
    v2[1] = 1;
    const Laurent sum = mono(cs, v1, 0) + mono(cs, v2, 0);
    CHECK(sum.apply_map(s12) == sum);

    // contravariance under composition
    const LatticeMap a = reflection(simple_root(cs, 2));
    const LatticeMap b = reflection(simple_root(cs, 5));
    for (int iter = 0; iter < 10; ++iter) {
        const Laurent g = random_laurent(rng, cs, 5);
        CHECK(g.apply_map(a.compose(b)) == g.apply_map(b).apply_map(a));
    }
}

TEST_CASE("integer-coefficient laurent and conversion") {
    const Case cs = Case::E6;
    LaurentZ f = LaurentZ::orbit_sum(cs, minimal_coset(cs));
    CHECK(f.size() == 27);
    const Laurent fq = f.converted<Rat>();
    const auto xi = TorusPoint<Rat>::from_partial(
        cs, {Rat(3), Rat(5), Rat(7), Rat(11), Rat(13)}, Rat(2));
    CHECK(fq.eval(xi) == f.eval(xi));
    CHECK(divide_by_long(LaurentZ::constant(cs, Int(6)), 3) == LaurentZ::constant(cs, Int(2)));
    CHECK_THROWS_AS(divide_by_long(LaurentZ::constant(cs, Int(5)), 3), degenerate_error);
}
