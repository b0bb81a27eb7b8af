// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define MWX_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define MWX_HAVE_AVX2_BUILD 0
#endif

namespace mwx::kern {

#if MWX_HAVE_AVX2_BUILD

namespace {

// Shoup modular multiplication on 4 x u64 lanes, all values < p < 2^31.
// q = hi32(x * wsh), r = x*w - q*p, r < 2p, then one conditional subtract.
// _mm256_mul_epu32 uses the low 32 bits of each 64-bit lane, which is
// exactly where our residues live.
inline __m256i mulmod_shoup4(__m256i x, __m256i w, __m256i wsh, __m256i p) {
    const __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(x, wsh), 32);
    const __m256i prod = _mm256_mul_epu32(x, w);
    __m256i r = _mm256_sub_epi64(prod, _mm256_mul_epu32(q, p));
    const __m256i ge = _mm256_cmpgt_epi64(p, r); // p > r (all fit in 63 bits)
    r = _mm256_sub_epi64(r, _mm256_andnot_si256(ge, p));
    return r;
}

inline __m256i addmod4(__m256i a, __m256i b, __m256i p) {
    __m256i s = _mm256_add_epi64(a, b);
    const __m256i lt = _mm256_cmpgt_epi64(p, s);
    return _mm256_sub_epi64(s, _mm256_andnot_si256(lt, p));
}

void axpy_avx2(u64* y, const u64* x, std::size_t n, u64 c, u64 csh, u64 p) {
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    const __m256i vcs = _mm256_set1_epi64x(static_cast<long long>(csh));
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        const __m256i r = addmod4(vy, mulmod_shoup4(vx, vc, vcs, vp), vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
    }
    for (; i < n; ++i) y[i] = (y[i] + c * x[i]) % p;
}

void scale_avx2(u64* y, const u64* x, std::size_t n, u64 c, u64 csh, u64 p) {
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    const __m256i vcs = _mm256_set1_epi64x(static_cast<long long>(csh));
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), mulmod_shoup4(vx, vc, vcs, vp));
    }
    for (; i < n; ++i) y[i] = (c * x[i]) % p;
}

void horner_avx2(u64* acc, const u64* x, const u64* xsh, std::size_t n, u64 c, u64 p) {
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        const __m256i vxs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xsh + i));
        const __m256i r = addmod4(mulmod_shoup4(va, vx, vxs, vp), vc, vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
    }
    for (; i < n; ++i) acc[i] = (acc[i] * x[i] + c) % p;
}

} // namespace

const Kernels* avx2_kernels() {
    static const Kernels k{axpy_avx2, scale_avx2, horner_avx2, "avx2"};
    if (__builtin_cpu_supports("avx2")) return &k;
    return nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

} // namespace mwx::kern
