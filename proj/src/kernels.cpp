// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mwx::kern {

const Kernels& active_kernels() {
    static const Kernels* chosen = [] {
        const char* env = std::getenv("MWX_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
        if (const Kernels* k = avx2_kernels()) return k;
        return &scalar_kernels();
    }();
    return *chosen;
}

} // namespace mwx::kern
