#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ordkit {

enum class Exec { Serial, Parallel };

// Evaluate visit(i) for i in [0, n) and concatenate the returned finding
// lists in index order, so both execution policies produce byte-identical
// reports. The parallel path buffers per-index results and merges serially.
template <typename Finding>
std::vector<Finding> sweep_indices(size_t n, Exec exec,
                                   const std::function<std::vector<Finding>(size_t)>& visit) {
  std::vector<std::vector<Finding>> buckets(n);
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < (long long)n; ++i) buckets[(size_t)i] = visit((size_t)i);
  } else
#endif
  {
    (void)exec;
    for (size_t i = 0; i < n; ++i) buckets[i] = visit(i);
  }
  std::vector<Finding> out;
  for (auto& b : buckets)
    for (auto& f : b) out.push_back(std::move(f));
  return out;
}

// Pair sweep over [0,n)^2, row-major merge order.
template <typename Finding>
std::vector<Finding> sweep_pairs(size_t n, Exec exec,
                                 const std::function<std::vector<Finding>(size_t, size_t)>& visit) {
  return sweep_indices<Finding>(n, exec, [&](size_t i) {
    std::vector<Finding> row;
    for (size_t j = 0; j < n; ++j)
      for (auto& f : visit(i, j)) row.push_back(std::move(f));
    return row;
  });
}

// Triple sweep over [0,n)^3, lexicographic merge order.
template <typename Finding>
std::vector<Finding> sweep_triples(
    size_t n, Exec exec, const std::function<std::vector<Finding>(size_t, size_t, size_t)>& visit) {
  return sweep_indices<Finding>(n, exec, [&](size_t i) {
    std::vector<Finding> row;
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (auto& f : visit(i, j, k)) row.push_back(std::move(f));
    return row;
  });
}

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

}  // namespace ordkit
