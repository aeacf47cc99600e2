// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace tabuq {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kManifestSchemaVersion = 1;

}  // namespace tabuq
