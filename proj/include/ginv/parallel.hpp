#pragma once

// Data-parallel kernels used by the oracle and the claim runner, plus serial
// reference versions with the identical contract. Parallel search reduces by
// minimum index, so the winner is the globally first hit in canonical order
// regardless of thread count or schedule.

#include <cstddef>
#include <limits>
#include <vector>

namespace ginv::par {

inline constexpr std::size_t kNotFound = std::numeric_limits<std::size_t>::max();

enum class ExecMode { Parallel, Serial };

template <class Pred>
std::size_t find_first_index_serial(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return kNotFound;
}

// Block-wise scan: each block is searched in parallel with a min reduction,
// and later blocks are skipped once a hit exists. pred must be pure.
template <class Pred>
std::size_t find_first_index_parallel(std::size_t n, Pred&& pred) {
  constexpr std::size_t kBlock = 8192;
  for (std::size_t base = 0; base < n; base += kBlock) {
    const std::size_t end = base + kBlock < n ? base + kBlock : n;
    std::size_t best = kNotFound;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::size_t i = base; i < end; ++i) {
      if (i < best && pred(i)) best = i;
    }
    if (best != kNotFound) return best;
  }
  return kNotFound;
}

template <class Pred>
std::size_t find_first_index(std::size_t n, Pred&& pred, ExecMode mode = ExecMode::Parallel) {
  return mode == ExecMode::Serial ? find_first_index_serial(n, pred)
                                  : find_first_index_parallel(n, pred);
}

template <class Fn>
void for_each_index_serial(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

// Every index is visited exactly once; fn(i) must only touch slot i of any
// shared output, which keeps merged results deterministic.
template <class Fn>
void for_each_index_parallel(std::size_t n, Fn&& fn) {
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, ExecMode mode = ExecMode::Parallel) {
  if (mode == ExecMode::Serial)
    for_each_index_serial(n, fn);
  else
    for_each_index_parallel(n, fn);
}

// Collects indices where pred holds, in ascending order (deterministic merge).
template <class Pred>
std::vector<std::size_t> collect_indices(std::size_t n, Pred&& pred,
                                         ExecMode mode = ExecMode::Parallel) {
  std::vector<char> hits(n, 0);
  for_each_index(
      n, [&](std::size_t i) { hits[i] = pred(i) ? 1 : 0; }, mode);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (hits[i]) out.push_back(i);
  return out;
}

}  // namespace ginv::par
