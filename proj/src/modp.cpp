// Copyright (c) the mwx authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mwx/modp.hpp"

namespace mwx {

namespace {
thread_local const Zp* t_field = nullptr;
}

ModScope::ModScope(u64 p) : prev_(t_field), cur_(p) { t_field = &cur_; }

ModScope::~ModScope() { t_field = prev_; }

const Zp& ModScope::field() {
    MWX_CHECK(t_field != nullptr, "no modulus scope active on this thread");
    return *t_field;
}

} // namespace mwx
