// Copyright 2026 lsrom developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace lsrom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lsrom
