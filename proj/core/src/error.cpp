// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/error.hpp"

#include <cstdio>

namespace prda {
namespace {

std::string unreachable_message(int n_upper, double achieved, double target) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "power %.4f not reachable within the search range: power at n = %d is %.4f",
                target, n_upper, achieved);
  return buf;
}

}  // namespace

UnreachablePower::UnreachablePower(int n_upper, double achieved_power, double target_power)
    : Error(unreachable_message(n_upper, achieved_power, target_power)),
      n_upper_(n_upper),
      achieved_power_(achieved_power),
      target_power_(target_power) {}

}  // namespace prda
