#include "dh/settings.hpp"

#include <cstdlib>
#include <fstream>

#include "dh/types.hpp"

namespace dh {

void EvalSettings::validate() const {
  if (hurwitz_cutoff < 1) throw DomainError("hurwitz_cutoff must be >= 1");
  if (bernoulli_order < 2 || bernoulli_order > 30 || bernoulli_order % 2 != 0) {
    throw DomainError("bernoulli_order must be an even integer in [2, 30]");
  }
  if (!(rel_tol > 0.0) || !(fd_step > 0.0) || !(newton_tol > 0.0)) {
    throw DomainError("tolerances and steps must be positive");
  }
  if (newton_max_iter < 1) throw DomainError("newton_max_iter must be >= 1");
}

void to_json(nlohmann::json& j, const EvalSettings& s) {
  j = nlohmann::json{{"hurwitz_cutoff", s.hurwitz_cutoff}, {"bernoulli_order", s.bernoulli_order},
                     {"rel_tol", s.rel_tol},               {"fd_step", s.fd_step},
                     {"newton_tol", s.newton_tol},         {"newton_max_iter", s.newton_max_iter},
                     {"rng_seed", s.rng_seed}};
}

void from_json(const nlohmann::json& j, EvalSettings& s) {
  s.hurwitz_cutoff = j.value("hurwitz_cutoff", s.hurwitz_cutoff);
  s.bernoulli_order = j.value("bernoulli_order", s.bernoulli_order);
  s.rel_tol = j.value("rel_tol", s.rel_tol);
  s.fd_step = j.value("fd_step", s.fd_step);
  s.newton_tol = j.value("newton_tol", s.newton_tol);
  s.newton_max_iter = j.value("newton_max_iter", s.newton_max_iter);
  s.rng_seed = j.value("rng_seed", s.rng_seed);
}

EvalSettings settings_from_env() {
  EvalSettings settings;
  const char* path = std::getenv("DH_SETTINGS");
  if (path == nullptr || *path == '\0') return settings;
  std::ifstream in(path);
  if (!in) throw IoError(std::string("cannot open DH_SETTINGS file: ") + path);
  const auto j = nlohmann::json::parse(in);
  settings = j.get<EvalSettings>();
  settings.validate();
  return settings;
}

}  // namespace dh
