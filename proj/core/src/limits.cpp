#include "tlimm/limits.hpp"

#include <cstdlib>
#include <string>

#include "tlimm/error.hpp"

namespace tlimm {

namespace {

int env_override() {
  const char* raw = std::getenv("TLIMM_MAX_N");
  if (raw == nullptr) return 0;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0 || value > 255) return 0;
  return static_cast<int>(value);
}

}  // namespace

int max_n() {
  int v = env_override();
  return v > 0 ? v : kDefaultMaxN;
}

int theta_limit() {
  int v = env_override();
  return v > 0 ? v : kDefaultThetaLimit;
}

void require_within(int n, int limit, const char* what) {
  if (n > limit) {
    throw LimitError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(limit) + " (set TLIMM_MAX_N to override)");
  }
}

}  // namespace tlimm
