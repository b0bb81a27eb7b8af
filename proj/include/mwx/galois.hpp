// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_GALOIS_HPP
#define MWX_GALOIS_HPP

#include <string>
#include <vector>

#include "mwx/refdata.hpp"

namespace mwx {

// Frobenius evidence: the observable cycle types are computed and
// compared; the group-theoretic inference from them is cited, not
// re-proved.
struct CertLine {
    u64 prime = 0;
    CycleType expected;
    CycleType got;
    bool match = false;
    std::string error;
};

struct CertReport {
    std::string poly_id;
    std::vector<CertLine> lines;
    bool all_match() const {
        for (const auto& l : lines)
            if (!l.match) return false;
        return !lines.empty();
    }
};

CertReport check_certificate(const QPoly& f, const refdata::Certificate& cert);

} // namespace mwx

#endif
