#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace pinet {

// Kernels that have an OpenMP body also keep a plain loop; tests compare the
// two bit-for-bit and bench/ times them against each other.
enum class Execution { serial, parallel };

// Runs body(i) for i in [0, n). Under Execution::parallel the iterations are
// spread over OpenMP threads and the first exception thrown is rethrown here.
template <class Body>
void for_each_index(Execution exec, std::size_t n, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace pinet
