// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace dsearch {

// Exit codes: 0 success, 1 not found, 2 promise violation / budget or audit
// failure, 3 configuration error (bad flags, malformed input).
int run_cli(std::vector<std::string> args);

}  // namespace dsearch
