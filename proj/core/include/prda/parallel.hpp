// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace prda {

/// Worker cap for parallel sections. Results never depend on it.
struct ExecutionPolicy {
  unsigned workers = 0;  // 0: hardware concurrency

  unsigned resolved() const noexcept;
};

/// Calls body(i) for every i in [0, count), spread over up to
/// policy.resolved() threads. Rethrows the first exception raised by a body.
void parallel_for(std::size_t count, const ExecutionPolicy& policy,
                  const std::function<void(std::size_t)>& body);

}  // namespace prda
