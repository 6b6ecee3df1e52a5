// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "majorana_rp_cli/cli_commands.hpp"

int main(int argc, char** argv) { return majorana_rp::cli::run(argc, argv, std::cout, std::cerr); }
