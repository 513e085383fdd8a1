#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

namespace dqw {

// Seq is the reference path; Par runs the same loop body under OpenMP.
// Results are written into per-index slots, so both paths are bit-identical.
enum class Exec { Seq, Par };

// f(i) for i in [0, n).  Exceptions thrown by workers are captured and the
// first one (lowest index) is rethrown after the loop joins.
template <class F>
void for_indexed(std::size_t n, Exec ex, F&& f) {
  if (ex == Exec::Seq) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errs(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errs[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace dqw
