#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hetcache/parallel.hpp"

using namespace hetcache;

namespace {

struct WorkerGuard {
  ~WorkerGuard() { set_worker_count(0); }
};

}  // namespace

TEST_CASE("worker count override") {
  WorkerGuard guard;
  set_worker_count(3);
  CHECK(worker_count() == 3);
  set_worker_count(1);
  CHECK(worker_count() == 1);
  set_worker_count(0);
  CHECK(worker_count() >= 1);
}

TEST_CASE("parallel_for covers every index exactly once") {
  WorkerGuard guard;
  for (int workers : {1, 2, 7}) {
    set_worker_count(workers);
    const std::size_t n = 1000;
    std::vector<std::atomic<int>> hits(n);
    parallel_for(n, [&](std::size_t i) {
      hits[i].fetch_add(1, std::memory_order_relaxed);
    });
    for (std::size_t i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
  }
}

TEST_CASE("parallel_for matches serial results in per-index slots") {
  WorkerGuard guard;
  const std::size_t n = 257;
  std::vector<double> serial(n), parallel(n);
  set_worker_count(1);
  parallel_for(n, [&](std::size_t i) {
    serial[i] = std::sin(double(i)) * std::sqrt(double(i) + 1.0);
  });
  set_worker_count(5);
  parallel_for(n, [&](std::size_t i) {
    parallel[i] = std::sin(double(i)) * std::sqrt(double(i) + 1.0);
  });
  for (std::size_t i = 0; i < n; ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("parallel_for handles empty and single-item ranges") {
  WorkerGuard guard;
  set_worker_count(4);
  int calls = 0;
  parallel_for(0, [&](std::size_t) { ++calls; });
  CHECK(calls == 0);
  parallel_for(1, [&](std::size_t i) {
    CHECK(i == 0);
    ++calls;
  });
  CHECK(calls == 1);
}

TEST_CASE("parallel_for propagates exceptions") {
  WorkerGuard guard;
  for (int workers : {1, 4}) {
    set_worker_count(workers);
    CHECK_THROWS_AS(parallel_for(100,
                                 [&](std::size_t i) {
                                   if (i == 37)
                                     throw std::runtime_error("item 37");
                                 }),
                    std::runtime_error);
  }
}
