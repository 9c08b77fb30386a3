#include "doctest.h"

#include <numeric>
#include <random>

#include "arcs/errors.hpp"
#include "arcs/scheduler.hpp"

using namespace arcs;

namespace {

std::vector<std::size_t> sizes(const Partition& part) {
  std::vector<std::size_t> out;
  for (const auto& r : part.assignments) out.push_back(r.size());
  return out;
}

// The rounding rule restated with plain arithmetic.
std::vector<std::size_t> expected_sizes(std::size_t n, const std::vector<int>& props) {
  std::vector<std::size_t> out;
  std::size_t used = 0;
  for (int p : props) {
    out.push_back(n * std::size_t(p) / 100);
    used += out.back();
  }
  for (std::size_t k = out.size() - (n - used); k < out.size(); ++k) ++out[k];
  return out;
}

}  // namespace

TEST_CASE("proportional split") {
  const std::vector<int> split{10, 20, 30, 40};
  CHECK(sizes(partition(100, split)) == std::vector<std::size_t>{10, 20, 30, 40});
  // floors 0,1,2,2 leave 2 jobs, which go to the last two workers.
  CHECK(sizes(partition(7, split)) == std::vector<std::size_t>{0, 1, 3, 3});
  CHECK(sizes(partition(0, split)) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(sizes(partition(1234, std::vector<int>{100})) == std::vector<std::size_t>{1234});
  CHECK(partition(7, split).job_count() == 7);
}

TEST_CASE("bad proportions") {
  CHECK_THROWS_AS(partition(10, std::vector<int>{50, 40}), Error);
  CHECK_THROWS_AS(partition(10, std::vector<int>{110, -10}), Error);
  CHECK_THROWS_AS(partition(10, std::vector<int>{}), Error);
  CHECK(parse_proportions("10,20,30,40") == std::vector<int>{10, 20, 30, 40});
  CHECK_THROWS_AS(parse_proportions("10,x"), Error);
  CHECK_THROWS_AS(parse_proportions("60,60"), Error);
  CHECK(equal_proportions(4) == std::vector<int>{25, 25, 25, 25});
  CHECK(equal_proportions(7) == std::vector<int>{14, 14, 14, 14, 14, 15, 15});
}

TEST_CASE("random partitions cover the jobs contiguously, 10000 cases") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10000; ++trial) {
    const int workers = 1 + int(rng() % 12);
    std::vector<int> props(workers, 1);
    for (int left = 100 - workers; left > 0; --left) ++props[rng() % workers];
    const std::size_t n = rng() % 5000;
    auto part = partition(n, props);
    REQUIRE(part.workers() == std::size_t(workers));
    REQUIRE(part.proportions == props);
    std::size_t next = 0, total = 0;
    for (const auto& r : part.assignments) {
      REQUIRE(r.begin == next);
      REQUIRE(r.end >= r.begin);
      next = r.end;
      total += r.size();
    }
    REQUIRE(next == n);
    REQUIRE(total == n);
    REQUIRE(sizes(part) == expected_sizes(n, props));
  }
}

TEST_CASE("run_jobs keeps index order for every mode and worker count") {
  auto job = [](std::size_t i) { return std::vector<std::size_t>{i, i * i % 97}; };
  auto serial = run_jobs(partition(1000, std::vector<int>{100}), job);
  REQUIRE(serial.size() == 1000);
  for (Balancing mode : {Balancing::Static, Balancing::Stealing})
    for (int workers : {2, 3, 4, 8})
      for (std::size_t chunk : {std::size_t(1), std::size_t(7)})
        CHECK(run_jobs(partition(1000, equal_proportions(workers)), job, mode, chunk) == serial);
  CHECK(run_jobs(partition(0, std::vector<int>{10, 20, 30, 40}), job).empty());
}

TEST_CASE("run_jobs rethrows the error of the lowest failing index") {
  auto job = [](std::size_t i) -> int {
    if (i == 900 || i == 10 || i == 500) throw std::runtime_error("job " + std::to_string(i));
    return int(i);
  };
  for (Balancing mode : {Balancing::Static, Balancing::Stealing}) {
    try {
      run_jobs(partition(1000, std::vector<int>{10, 20, 30, 40}), job, mode);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "job 10");
    }
  }
}
