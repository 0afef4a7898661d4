#include "fusion/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fusion {

namespace {

std::uint64_t env_or(char const* name, std::uint64_t fallback) {
  char const* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    auto v = std::stoull(raw);
    return v == 0 ? fallback : v;
  } catch (...) {
    return fallback;
  }
}

std::atomic<unsigned> g_threads{0};
std::atomic<std::uint64_t> g_budget{0};

}  // namespace

unsigned thread_count() {
  unsigned n = g_threads.load();
  return n ? n : static_cast<unsigned>(env_or("FUSIONRING_THREADS", 1));
}

void set_thread_count(unsigned n) { g_threads.store(n); }

std::uint64_t search_budget() {
  std::uint64_t n = g_budget.load();
  return n ? n : env_or("FUSIONRING_SEARCH_BUDGET", 1'000'000);
}

void set_search_budget(std::uint64_t nodes) { g_budget.store(nodes); }

void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body) {
  unsigned const workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fusion
