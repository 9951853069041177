#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "pong/report.hpp"

namespace pong {

// Splits [0, n) into contiguous chunks, runs work(begin, end, report) on up
// to `jobs` threads, and merges the chunk reports in index order so the
// result does not depend on the thread count. The first exception thrown
// by any chunk is rethrown after all threads finish.
template <class Work>
void run_chunked(std::size_t n, int jobs, VerificationReport& out, Work work) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs > 0 ? jobs : 1, n));
  std::vector<VerificationReport> parts(workers);
  for (auto& p : parts) p.checks = out.checks;
  for (auto& p : parts) {
    for (auto& t : p.checks) t.run = t.failed = 0;
  }
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](std::size_t w) {
    try {
      const std::size_t begin = n * w / workers;
      const std::size_t end = n * (w + 1) / workers;
      work(begin, end, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& p : parts) out.merge(p);
}

}  // namespace pong
