// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/galois.hpp"

namespace mwx {

CertReport check_certificate(const QPoly& f, const refdata::Certificate& cert) {
    const int want_degree = cert.cs == Case::E7 ? 56 : 240;
    if (f.degree() != want_degree)
        throw input_error("certificate expects a polynomial of degree " + std::to_string(want_degree));
    CertReport rep;
    rep.poly_id = cert.poly_id;
    for (const auto& [p, expected] : cert.expected) {
        CertLine line;
        line.prime = p;
        line.expected = expected;
        try {
            line.got = cycle_type_mod_p(f, p);
            line.match = line.got == expected;
        } catch (const bad_prime_error& e) {
            line.error = e.what();
            line.match = false;
        }
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

} // namespace mwx
