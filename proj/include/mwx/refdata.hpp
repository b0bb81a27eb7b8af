// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_REFDATA_HPP
#define MWX_REFDATA_HPP

#include <string>
#include <vector>

#include "mwx/chars.hpp"
#include "mwx/factor.hpp"
#include "mwx/laurent.hpp"
#include "mwx/surfaces.hpp"

// Reference fixtures: the published split/big specializations, the two
// degeneration tables, the cycle-type certificates, and the torsion
// remark curves that the verification suites replay.
namespace mwx::refdata {

// Split specializations: Weierstrass data whose Mordell-Weil basis is
// defined over Q with the simplest multiplicatively independent values.
const WeierstrassData& split_lambda(Case cs); // E7 or E8
const std::vector<QPoly>& split_x_list(Case cs);
std::vector<Rat> split_specializations(Case cs); // expected basis values
TorusPoint<Rat> split_xi(Case cs);

// The explicit degree-56 polynomial at lambda = (1,...,1).
const QPoly& big_e7_polynomial();

// Degeneration tables.
struct TableRow {
    int os_type;
    std::string fibral;            // e.g. "A_1+D_4"
    std::string mw;                // opaque label
    std::vector<std::string> xi;   // s_1..s_{n-1}, r as strings
};
const std::vector<TableRow>& degeneration_table(Case cs);
Cyclo parse_scalar(const std::string& s); // rationals, I, zeta3, zeta5, zeta5^3, -I

// Frobenius cycle-type certificates for the big-Galois specializations.
struct Certificate {
    Case cs;
    std::string poly_id; // "big-e7" or "big-e8"
    std::vector<std::pair<u64, CycleType>> expected;
};
const Certificate& big_certificate(Case cs);

// Alternate-form surfaces from the torsion remarks, with their printed
// sections and fiber expectations.
struct RemarkCurve {
    std::string id; // OS type number as a string tag
    WeierstrassCurve curve;
    SectionPoly section;                  // the printed torsion section
    int torsion;                          // its order
    std::vector<std::string> fiber_types; // reducible fibers expected
};
const std::vector<RemarkCurve>& remark_curves();

} // namespace mwx::refdata

#endif
