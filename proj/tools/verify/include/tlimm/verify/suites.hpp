#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tlimm/verify/report.hpp"

namespace tlimm::verify {

struct SuiteOptions {
  int n = 0;  // 0 selects the suite's default upper bound
  int jobs = 1;
  std::uint64_t seed = 0x5eed2024;
  std::int64_t samples = 100000;  // random pairs for the sampled part of A3
  int shape_trials = 200;         // random combinations per n for A9
};

// "A1" .. "A10" in order.
const std::vector<std::string>& suite_ids();

bool is_suite(std::string_view id);

// Largest n each suite covers by default.
int default_n(std::string_view id);

// Runs one suite for every n from its smallest meaningful size up to
// options.n.  Throws LimitError when n exceeds the configured caps and
// std::invalid_argument for an unknown id.
Report run_suite(std::string_view id, const SuiteOptions& options);

}  // namespace tlimm::verify
