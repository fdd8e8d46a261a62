#pragma once

// Seeded self-check suites over the invariants of each module.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dh/parallel.hpp"
#include "dh/settings.hpp"

namespace dh::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed metric
  double threshold = 0.0;  // passed iff measured <= threshold
  int samples = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
};

/// specfun, dhfun, xratio, analysis
const std::vector<std::string>& suite_names();

/// Runs one suite or "all". DomainError for an unknown name. Checks are
/// dispatched through `run`; results do not depend on its scheduling.
std::vector<SuiteReport> run_suites(std::string_view suite, const EvalSettings& settings = {},
                                    const ParallelFor& run = serial_for);

/// Uniform doubles from std::mt19937_64 using the top 53 bits, so sequences do
/// not depend on the standard library's distribution implementation.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dh::verify
