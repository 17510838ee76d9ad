#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tlimm::verify {

struct Failure {
  std::string claim;
  std::string witness;
  std::string expected;
  std::string actual;
};

// Checks and failures gathered by one unit of work; merged in item order.
struct Tally {
  std::int64_t checks = 0;
  std::vector<Failure> failures;

  void expect(bool ok, std::string claim, std::string witness, std::string expected, std::string actual);
  void merge(Tally&& other);
};

struct Report {
  std::string suite;
  int n = 0;
  std::int64_t checks = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;  // per-n summaries such as enumeration counts
  std::chrono::duration<double> elapsed{0};

  bool ok() const noexcept { return failures.empty(); }
  void absorb(Tally&& tally);
};

// Human-readable block: a header line, the notes, then up to `max_failures` failures.
void print(std::ostream& out, const Report& report, std::size_t max_failures = 20);

}  // namespace tlimm::verify
