// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/kernels.hpp"

namespace mwx::kern {

// Reference kernels: plain 64-bit arithmetic with a hardware divide.
// Deliberately naive; the SIMD variants are checked against these.

namespace {

void axpy_scalar(u64* y, const u64* x, std::size_t n, u64 c, u64 /*csh*/, u64 p) {
    for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] + c * x[i]) % p;
}

void scale_scalar(u64* y, const u64* x, std::size_t n, u64 c, u64 /*csh*/, u64 p) {
    for (std::size_t i = 0; i < n; ++i) y[i] = (c * x[i]) % p;
}

void horner_scalar(u64* acc, const u64* x, const u64* /*xsh*/, std::size_t n, u64 c, u64 p) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = (acc[i] * x[i] + c) % p;
}

} // namespace

u64 shoup_precompute(u64 w, u64 p) { return (w << 32) / p; }

const Kernels& scalar_kernels() {
    static const Kernels k{axpy_scalar, scale_scalar, horner_scalar, "scalar"};
    return k;
}

} // namespace mwx::kern
