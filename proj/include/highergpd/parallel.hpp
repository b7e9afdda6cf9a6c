#ifndef HIGHERGPD_PARALLEL_HPP
#define HIGHERGPD_PARALLEL_HPP

#include <cstddef>
#include <vector>

namespace hgpd {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; the serial path is kept for testing and
/// benchmarking.
enum class Exec { serial, parallel };

/// Thread count for parallel kernels. Honours HIGHERGPD_THREADS when set.
int thread_count();

/// Runs body(i) for i in [0, n) and concatenates the per-index outputs in
/// index order, so the merged result does not depend on scheduling.
template <typename T, typename Body>
std::vector<T> ordered_collect(std::size_t n, Exec exec, Body body) {
  std::vector<std::vector<T>> parts(n);
  if (exec == Exec::parallel) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
    for (long long i = 0; i < count; ++i)
      body(static_cast<std::size_t>(i), parts[static_cast<std::size_t>(i)]);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i, parts[i]);
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& p : parts)
    for (auto& x : p) out.push_back(std::move(x));
  return out;
}

}  // namespace hgpd

#endif
