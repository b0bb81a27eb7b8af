// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_SURFACES_HPP
#define MWX_SURFACES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mwx/chars.hpp"
#include "mwx/unipoly.hpp"
#include "mwx/weyl.hpp"

namespace mwx {

// Rational function in t, kept reduced with monic denominator.
struct RatFunc {
    QPoly num, den;

    RatFunc() : num{}, den{Rat(1)} {}
    RatFunc(QPoly n, QPoly d);
    explicit RatFunc(QPoly n) : num(std::move(n)), den{Rat(1)} {}
    static RatFunc constant(const Rat& c) { return RatFunc(QPoly::constant(c)); }

    bool is_zero_fn() const { return num.is_zero_poly(); }
    bool is_polynomial() const { return den.degree() == 0; }
    QPoly polynomial() const;
    Rat eval(const Rat& t) const; // throws degenerate_error on a pole

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

inline bool is_zero(const RatFunc& f) { return f.is_zero_fn(); }

// Long Weierstrass model over Q(t) with polynomial coefficients.
struct WeierstrassCurve {
    QPoly a1, a2, a3, a4, a6;

    static WeierstrassCurve family(const WeierstrassData& w); // the three ansatz families

    QPoly b2() const;
    QPoly b4() const;
    QPoly b6() const;
    QPoly b8() const;
    QPoly c4() const;
    QPoly c6() const;
    QPoly disc() const;
};

// Section with polynomial coordinates (the verified storage form).
struct SectionPoly {
    bool infinity = true;
    QPoly x, y;

    static SectionPoly zero() { return {}; }
    static SectionPoly affine(QPoly x_, QPoly y_) { return {false, std::move(x_), std::move(y_)}; }
};

// Section with rational-function coordinates (group-law arithmetic).
struct SectionRat {
    bool infinity = true;
    RatFunc x, y;

    static SectionRat zero() { return {}; }
    static SectionRat from_poly(const SectionPoly& s);
    bool operator==(const SectionRat& o) const;
};

bool verify_section(const WeierstrassCurve& c, const SectionPoly& s);
bool verify_section_rat(const WeierstrassCurve& c, const SectionRat& s);

// Completes a printed x-coordinate to a full section; the y-discriminant
// must be a polynomial square. Sign convention: the square root with
// positive leading coefficient.
SectionPoly complete_section_y(const WeierstrassCurve& c, const QPoly& x);

SectionRat point_add(const WeierstrassCurve& c, const SectionRat& p, const SectionRat& q);
SectionRat point_negate(const WeierstrassCurve& c, const SectionRat& p);
SectionRat point_multiply(const WeierstrassCurve& c, long n, const SectionRat& p);

// Smallest n <= 12 with n*s = O; nullopt = non-torsion up to that bound.
std::optional<int> torsion_order(const WeierstrassCurve& c, const SectionRat& s);

// Specialization at t = infinity into G_m x (component group), following
// the fixed sign conventions of each family. The component index is 0 on
// the identity component and 1 on the far component of the I_2 / I_3
// fiber (E7 / E6).
std::pair<Rat, int> specialize_at_infinity(Case cs, const SectionRat& s);

// --- fibers -----------------------------------------------------------------

struct FiberPlace {
    std::string place;   // monic irreducible-over-the-basis factor, or "t=inf"
    bool at_infinity = false;
    int vc4 = 0, vc6 = 0, vdisc = 0; // -1 encodes +infinity (identically zero)
    std::string kodaira; // "I0","I1",...,"II","III","IV","I0*","In*","IV*","III*","II*"
    int euler = 0;
    std::string lattice; // "A_1", "D_4", "E_8", "0", ...
    int root_count = 0;
    bool minimal = true;
};

struct FiberReport {
    std::vector<FiberPlace> fibers; // reducible/singular places only
    int euler_sum = 0;              // equals 12 exactly for a rational elliptic surface
    bool all_minimal = true;

    int new_root_count(bool exclude_infinity) const;
    std::string to_table() const;
};

FiberReport fiber_configuration(const WeierstrassCurve& c);

// Root counts of the A/D/E symbols used in fiber bookkeeping.
int lattice_root_count(const std::string& symbol); // "A_3", "D_4", "E_7", "0", sums "A_1+D_4"

// --- genericity ---------------------------------------------------------------

struct GenericityReport {
    Rat weyl_denominator; // Psi(1) for E7, Phi(1) for E8
    bool weyl_nonzero = false;
    bool additive_free = false; // A(lambda) != 0
    Rat disc_t;                 // discriminant of Delta(t)
    std::string note;
};

GenericityReport genericity_report(const WeierstrassData& w);

// Rank of the multiplicative group generated by nonzero rationals (sign
// handled as the prime -1).
int multiplicative_independence(const std::vector<Rat>& values);

} // namespace mwx

#endif
