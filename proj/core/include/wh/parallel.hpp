// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WH_PARALLEL_HPP
#define WH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace wh {

/// Worker count: WH_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls fn(i) for i in [0, n) on up to thread_count() threads. Each index
/// is visited exactly once; callers write results to disjoint slots so the
/// outcome does not depend on scheduling. The first exception thrown by any
/// call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wh

#endif  // WH_PARALLEL_HPP
