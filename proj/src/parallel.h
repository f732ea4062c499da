#ifndef ACCUSCORE_SRC_PARALLEL_H_
#define ACCUSCORE_SRC_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace accuscore::internal {

// Calls fn(i) for i in [0, n) on up to `jobs` threads, strided. fn must only
// touch state owned by index i. Exceptions propagate from the first task.
template <typename Fn>
void ParallelFor(size_t n, int jobs, Fn fn) {
  if (jobs <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (size_t t = 0; t < workers; ++t) {
    tasks.push_back(std::async(std::launch::async, [&fn, t, n, workers] {
      for (size_t i = t; i < n; i += workers) fn(i);
    }));
  }
  for (auto &task : tasks) task.wait();
  for (auto &task : tasks) task.get();
}

}  // namespace accuscore::internal

#endif  // ACCUSCORE_SRC_PARALLEL_H_
