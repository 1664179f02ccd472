// Copyright 2026 The orbcorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace orbcorr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orbcorr
