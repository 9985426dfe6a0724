// Copyright 2026 the poibound authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace poibound
{

//! Thrown when a bound's precondition fails (e.g. eta >= 1 or theta_r >= 1).
class InapplicableError : public std::runtime_error
{
  public:
    explicit InapplicableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace poibound
