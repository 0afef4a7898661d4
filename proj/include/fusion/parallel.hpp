#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace fusion {

// Worker count used by table construction and pairwise scans. Defaults to
// FUSIONRING_THREADS when set, else 1. Results never depend on this value.
unsigned thread_count();
void set_thread_count(unsigned n);

// Node cap for enumeration and backtracking searches. Defaults to
// FUSIONRING_SEARCH_BUDGET when set, else 10^6.
std::uint64_t search_budget();
void set_search_budget(std::uint64_t nodes);

// Runs body(i) for i in [0, n) across thread_count() workers. Each index is
// visited exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body);

}  // namespace fusion
