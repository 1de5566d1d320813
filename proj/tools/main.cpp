// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/cli.hpp"

int main(int argc, char** argv) {
  return dsearch::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
