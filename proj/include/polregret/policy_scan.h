// Copyright 2026 The polregret Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Data-parallel kernels over an enumerated policy class. Every exhaustive
// Π-scan in the library (optimistic argmax, regret benchmark, minimum
// visitation, version-space refinement) goes through ScanPolicies. The
// serial path is the reference the parallel path is tested against.

#ifndef POLREGRET_POLICY_SCAN_H_
#define POLREGRET_POLICY_SCAN_H_

#include <cstdint>
#include <exception>
#include <limits>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polregret {

enum class Execution {
  kSerial,
  kParallel,
  // Parallel once the scan is long enough to amortize the fork.
  kAuto,
};

inline constexpr std::int64_t kParallelGrain = 256;

inline const char* ExecutionName(Execution exec) {
  switch (exec) {
    case Execution::kSerial:
      return "serial";
    case Execution::kParallel:
      return "parallel";
    case Execution::kAuto:
      return "auto";
  }
  return "?";
}

inline bool RunsParallel(std::int64_t n, Execution exec) {
  return exec == Execution::kParallel ||
         (exec == Execution::kAuto && n >= kParallelGrain);
}

// Calls fn(i) for every i in [0, n). `fn` must be safe to call concurrently
// on distinct indices. The first exception thrown is rethrown on return.
template <class Fn>
void ParallelFor(std::int64_t n, Fn&& fn, Execution exec = Execution::kAuto) {
  if (!RunsParallel(n, exec)) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(polregret_scan_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

// out[i] = fn(i). Output is identical for every Execution value.
template <class Fn>
std::vector<double> ScanPolicies(std::int64_t n, Fn&& fn,
                                 Execution exec = Execution::kAuto) {
  std::vector<double> out(static_cast<std::size_t>(n));
  ParallelFor(n, [&](std::int64_t i) { out[i] = fn(i); }, exec);
  return out;
}

// Lowest index attaining the maximum; -1 on empty input.
inline std::int64_t ArgmaxLowestIndex(std::span<const double> values) {
  std::int64_t best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (best < 0 || values[i] > best_value) {
      best = static_cast<std::int64_t>(i);
      best_value = values[i];
    }
  }
  return best;
}

// Element of `candidates` maximizing values[idx]; lowest idx on ties.
inline std::int64_t ArgmaxOver(std::span<const double> values,
                               std::span<const std::int64_t> candidates) {
  std::int64_t best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::int64_t idx : candidates) {
    if (best < 0 || values[idx] > best_value ||
        (values[idx] == best_value && idx < best)) {
      best = idx;
      best_value = values[idx];
    }
  }
  return best;
}

}  // namespace polregret

#endif  // POLREGRET_POLICY_SCAN_H_
