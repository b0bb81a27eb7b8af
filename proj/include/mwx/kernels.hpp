// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MWX_KERNELS_HPP
#define MWX_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Vector kernels for the small-prime engine (p odd prime < 2^31). These
// are the inner loops of dense polynomial arithmetic mod p: fused
// multiply-accumulate rows, scalings, and batched Horner steps. Values
// are u64 residues in [0, p). The multiplier-dependent Shoup quotient
// (floor(w * 2^32 / p)) is precomputed by the caller where the signature
// asks for it.
//
// A scalar reference implementation is always available; an AVX2 variant
// is selected at runtime when the CPU supports it. Set MWX_SIMD=scalar to
// force the reference path. The two implementations are equivalence-tested.

namespace mwx::kern {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Kernels {
    // y[i] = (y[i] + c*x[i]) mod p ; csh = floor(c * 2^32 / p)
    void (*axpy)(u64* y, const u64* x, std::size_t n, u64 c, u64 csh, u64 p);
    // y[i] = c*x[i] mod p
    void (*scale)(u64* y, const u64* x, std::size_t n, u64 c, u64 csh, u64 p);
    // acc[i] = (acc[i]*x[i] + c) mod p ; xsh[i] = floor(x[i] * 2^32 / p)
    void (*horner_step)(u64* acc, const u64* x, const u64* xsh, std::size_t n, u64 c, u64 p);
    const char* name;
};

u64 shoup_precompute(u64 w, u64 p); // floor(w * 2^32 / p), requires p < 2^31

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr if unsupported at build or run time
const Kernels& active_kernels();

} // namespace mwx::kern

#endif
