#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "arcs/errors.hpp"

namespace arcs {

struct JobRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const JobRange&, const JobRange&) = default;
};

/// Contiguous job ranges, one per worker, covering [0, job_count) in order.
struct Partition {
  std::vector<JobRange> assignments;
  std::vector<int> proportions;

  std::size_t job_count() const noexcept { return assignments.empty() ? 0 : assignments.back().end; }
  std::size_t workers() const noexcept { return assignments.size(); }
};

/// Worker k gets floor(job_count * p_k / 100) jobs; the remainder r goes one
/// each to the last r workers. Proportions must be positive and sum to 100.
Partition partition(std::size_t job_count, std::span<const int> proportions);

/// Near-equal integer shares summing to 100; the larger shares go last.
std::vector<int> equal_proportions(int workers);

/// Parses "10,20,30,40"; throws BadProportions.
std::vector<int> parse_proportions(const std::string& text);

enum class Balancing {
  Static,    // one thread per assigned range
  Stealing,  // workers pull fixed-size chunks from a shared counter
};

/// Runs job_fn(i) for every job index and returns the results in index
/// order, independent of worker count and balancing mode. job_fn must not
/// touch shared mutable state. If jobs throw, the exception of the lowest
/// failing index is rethrown after all workers finish.
template <class JobFn>
auto run_jobs(const Partition& part, JobFn&& job_fn, Balancing mode = Balancing::Static, std::size_t chunk = 1)
    -> std::vector<std::invoke_result_t<JobFn&, std::size_t>> {
  using Result = std::invoke_result_t<JobFn&, std::size_t>;
  const std::size_t n = part.job_count();
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(n);

  auto run_one = [&](std::size_t j) {
    try {
      slots[j].emplace(job_fn(j));
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };

  const std::size_t workers = part.workers();
  if (workers <= 1 || n == 0) {
    for (std::size_t j = 0; j < n; ++j) run_one(j);
  } else if (mode == Balancing::Static) {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (const JobRange& r : part.assignments)
      threads.emplace_back([&, r] {
        for (std::size_t j = r.begin; j < r.end; ++j) run_one(j);
      });
  } else {
    if (chunk == 0) chunk = 1;
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back([&] {
        for (;;) {
          std::size_t start = next.fetch_add(chunk);
          if (start >= n) break;
          std::size_t stop = std::min(n, start + chunk);
          for (std::size_t j = start; j < stop; ++j) run_one(j);
        }
      });
  }

  for (std::size_t j = 0; j < n; ++j)
    if (errors[j]) std::rethrow_exception(errors[j]);

  std::vector<Result> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace arcs
