// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#ifndef NILSPEC_EXEC_HPP
#define NILSPEC_EXEC_HPP

namespace nilspec {

// Execution policy for the data-parallel kernels.  Serial is the reference
// path the tests compare against; Parallel uses OpenMP when compiled in and
// falls back to the serial path otherwise.  Results are byte-identical by
// construction (deterministic merge order, no floating accumulation races).
enum class Exec { Serial, Parallel };

// Worker count for parallel regions: the OpenMP default, capped by the
// NILSPEC_THREADS environment variable when set.
int worker_count();

}  // namespace nilspec

#endif  // NILSPEC_EXEC_HPP
