// Runs every acceptance suite at its default size and prints one verdict line
// per criterion.  Exit status is the number of failing criteria (capped).

#include <algorithm>
#include <iostream>
#include <thread>

#include "tlimm/verify/suites.hpp"

int main() {
  namespace v = tlimm::verify;
  const int jobs = std::max(1u, std::thread::hardware_concurrency());
  int failed = 0;
  for (const auto& id : v::suite_ids()) {
    try {
      const auto report = v::run_suite(id, {.n = v::default_n(id), .jobs = jobs});
      std::cout << id << ' ' << (report.ok() ? "PASS" : "FAIL") << " n<=" << report.n << " checks=" << report.checks
                << " failures=" << report.failures.size() << '\n';
      if (!report.ok()) {
        ++failed;
        v::print(std::cout, report);
      }
    } catch (const std::exception& e) {
      ++failed;
      std::cout << id << " FAIL error: " << e.what() << '\n';
    }
  }
  std::cout << (failed == 0 ? "ALL PASS" : "SOME FAILED") << '\n';
  return std::min(failed, 10);
}
