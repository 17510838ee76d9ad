#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace tlimm::verify::detail {

// Applies fn to every item on up to `jobs` threads.  Results come back in
// item order so the merged output does not depend on scheduling.  The first
// exception (by item index) is rethrown after all workers finish.
template <class Item, class Fn>
auto parallel_map(const std::vector<Item>& items, int jobs, Fn fn) {
  using Result = decltype(fn(items.front()));
  std::vector<std::optional<Result>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || items.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(threads, items.size()); ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Result> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace tlimm::verify::detail
