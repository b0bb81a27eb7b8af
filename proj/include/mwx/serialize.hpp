// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_SERIALIZE_HPP
#define MWX_SERIALIZE_HPP

#include <json.hpp>

#include "mwx/degeneration.hpp"
#include "mwx/elim.hpp"
#include "mwx/galois.hpp"
#include "mwx/surfaces.hpp"

// JSON forms: rationals are decimal strings "num/den" (denominator omitted
// when 1); cyclotomic numbers are {"order": m, "coeffs": [...]}; polynomials
// are coefficient lists from degree 0 upward; Laurent polynomials are
// {"exp": [...], "coeff": ...} lists in the fixed monomial order.
namespace mwx::io {

using json = nlohmann::json;

json to_json(const Rat& x);
Rat rat_from_json(const json& j);

json to_json(const Cyclo& x);
Cyclo cyclo_from_json(const json& j);

json to_json(const QPoly& f);
QPoly qpoly_from_json(const json& j);

json to_json(const WeierstrassData& w);
WeierstrassData lambda_from_json(const json& j);

json to_json(const TorusPoint<Cyclo>& xi);
TorusPoint<Cyclo> xi_from_json(const json& j);

template <class C>
json laurent_to_json(const LaurentT<C>& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.unpacked_terms()) {
        json exps = json::array();
        for (int i = 0; i < e.rank(); ++i) exps.push_back(e.coord(i));
        terms.push_back(json{{"exp", exps}, {"coeff", coeff_to_string(c)}});
    }
    return json{{"case", case_to_string(f.case_tag())}, {"terms", terms}};
}

json orbit_to_json(const OrbitMultiset& orbit);

json to_json(const WeierstrassCurve& c);
WeierstrassCurve curve_from_json(const json& j);

json to_json(const SectionPoly& s);
SectionPoly section_from_json(const json& j);

json to_json(const FiberReport& r);
json to_json(const ElimInfo& info);
json to_json(const CertReport& r);
json to_json(const RowReport& r);
json to_json(const GenericityReport& r);
json to_json(const CycleType& ct);

json load_file(const std::string& path); // input_error on parse failure

} // namespace mwx::io

#endif
