#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace dh {

/// Numerical knobs shared by every evaluator.
struct EvalSettings {
  /// Minimum Euler-Maclaurin split point; the effective cutoff is
  /// max(hurwitz_cutoff, ceil(1.5 |Im s|)).
  int hurwitz_cutoff = 20;
  /// Highest Bernoulli index used in the Euler-Maclaurin correction.
  int bernoulli_order = 30;
  double rel_tol = 1e-12;
  double fd_step = 1e-4;
  double newton_tol = 1e-10;
  int newton_max_iter = 60;
  std::uint64_t rng_seed = 42;

  /// Throws DomainError on a violated invariant.
  void validate() const;
};

void to_json(nlohmann::json& j, const EvalSettings& s);
/// Missing keys keep their defaults.
void from_json(const nlohmann::json& j, EvalSettings& s);

/// Reads settings from the file named by $DH_SETTINGS, or defaults.
EvalSettings settings_from_env();

}  // namespace dh
