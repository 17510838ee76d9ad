#include "tlimm/verify/report.hpp"

#include <iomanip>

namespace tlimm::verify {

void Tally::expect(bool ok, std::string claim, std::string witness, std::string expected, std::string actual) {
  ++checks;
  if (!ok) failures.push_back({std::move(claim), std::move(witness), std::move(expected), std::move(actual)});
}

void Tally::merge(Tally&& other) {
  checks += other.checks;
  for (auto& f : other.failures) failures.push_back(std::move(f));
}

void Report::absorb(Tally&& tally) {
  checks += tally.checks;
  for (auto& f : tally.failures) failures.push_back(std::move(f));
}

void print(std::ostream& out, const Report& report, std::size_t max_failures) {
  out << report.suite << " n<=" << report.n << " checks=" << report.checks << " failures=" << report.failures.size()
      << " elapsed=" << std::fixed << std::setprecision(3) << report.elapsed.count() << "s "
      << (report.ok() ? "PASS" : "FAIL") << '\n';
  out.unsetf(std::ios::floatfield);
  for (const auto& note : report.notes) out << "  " << note << '\n';
  for (std::size_t i = 0; i < report.failures.size() && i < max_failures; ++i) {
    const auto& f = report.failures[i];
    out << "  failure " << f.claim << " at " << f.witness << ": expected " << f.expected << ", got " << f.actual
        << '\n';
  }
  if (report.failures.size() > max_failures)
    out << "  ... " << report.failures.size() - max_failures << " more failures\n";
}

}  // namespace tlimm::verify
