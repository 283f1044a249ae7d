// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cantor_cli.hpp"

int main(int argc, char** argv) {
    return cantor::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
