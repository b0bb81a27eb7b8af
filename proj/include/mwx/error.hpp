// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_ERROR_HPP
#define MWX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mwx {

// Malformed user input (bad JSON, wrong vector lengths, unknown case tag).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// A mathematically valid input on which the requested construction breaks
// down (degree drop in an elimination stage, unexpected stripping
// multiplicity, non-square polynomial, non-divisible quotient).
struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& m) : std::runtime_error(m) {}
};

// A prime of bad reduction for the object at hand.
struct bad_prime_error : std::runtime_error {
    explicit bad_prime_error(const std::string& m) : std::runtime_error(m) {}
};

// A configured resource ceiling was hit (term cap, orbit cap, size budget).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& m) : std::runtime_error(m) {}
};

// Internal invariant violation; indicates a bug, not a user problem.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

#define MWX_CHECK(cond, msg)                                                 \
    do {                                                                     \
        if (!(cond)) throw ::mwx::internal_error(std::string("check failed: ") + (msg)); \
    } while (0)

} // namespace mwx

#endif
