#include "doctest.h"

#include <random>
#include <vector>

#include "mwx/kernels.hpp"
#include "mwx/zp.hpp"

using namespace mwx;
using namespace mwx::kern;

namespace {

std::vector<u64> random_residues(std::mt19937_64& rng, std::size_t n, u64 p) {
    std::uniform_int_distribution<u64> d(0, p - 1);
    std::vector<u64> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("simd kernels match scalar reference") {
    const Kernels& ref = scalar_kernels();
    const Kernels* simd = avx2_kernels();
    if (!simd) {
        MESSAGE("no AVX2 on this host; dispatch falls back to scalar");
        CHECK(&active_kernels() == &ref);
        return;
    }
    std::mt19937_64 rng(0xC0FFEE);
    // Primes at both ends of the small-prime range, plus tiny ones; sizes
    // cover the vector tail paths.
    for (u64 p : {3ull, 79ull, 179ull, 65537ull, 2147483647ull}) {
        std::uniform_int_distribution<u64> d(0, p - 1);
        for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 31u, 257u}) {
            auto x = random_residues(rng, n, p);
            auto y0 = random_residues(rng, n, p);
            auto y1 = y0;
            const u64 c = d(rng);
            const u64 csh = shoup_precompute(c, p);
            ref.axpy(y0.data(), x.data(), n, c, csh, p);
            simd->axpy(y1.data(), x.data(), n, c, csh, p);
            CHECK(y0 == y1);

            std::vector<u64> s0(n), s1(n);
            ref.scale(s0.data(), x.data(), n, c, csh, p);
            simd->scale(s1.data(), x.data(), n, c, csh, p);
            CHECK(s0 == s1);

            auto a0 = random_residues(rng, n, p);
            auto a1 = a0;
            std::vector<u64> xsh(n);
            for (std::size_t i = 0; i < n; ++i) xsh[i] = shoup_precompute(x[i], p);
            ref.horner_step(a0.data(), x.data(), nullptr, n, c, p);
            simd->horner_step(a1.data(), x.data(), xsh.data(), n, c, p);
            CHECK(a0 == a1);
        }
    }
}

TEST_CASE("kernel edge values") {
    const Kernels* simd = avx2_kernels();
    if (!simd) return;
    const u64 p = 2147483647ull; // largest 31-bit prime
    std::vector<u64> x(8, p - 1), y(8, p - 1);
    const u64 c = p - 1;
    const u64 csh = shoup_precompute(c, p);
    std::vector<u64> yr = y;
    scalar_kernels().axpy(yr.data(), x.data(), 8, c, csh, p);
    simd->axpy(y.data(), x.data(), 8, c, csh, p);
    CHECK(y == yr);
    for (u64 v : y) CHECK(v < p);
}
