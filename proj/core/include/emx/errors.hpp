// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace emx {

// Invalid or inconsistent user-facing configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// NaN/Inf fields or solver breakdown during a run (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emx
