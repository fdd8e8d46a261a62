#pragma once

// Numerical evidence for the claims about zeros and |X(s)|. Reports measured
// quantities only; nothing here decides whether a claim holds.

#include <string>
#include <string_view>
#include <vector>

#include "dh/settings.hpp"
#include "dh/zeros.hpp"

namespace dh::analysis {

enum class ClaimId {
  Lemma1,
  Lemma2,
  Corollary1,
  Lemma3_part1,
  Lemma3_part2,
  Lemma3_part3,
  Puzzle1,
  Puzzle2,
  AppendixA_t,
  AppendixA_sigma,
};

std::string_view claim_name(ClaimId id);

struct NamedValue {
  std::string name;
  double value = 0.0;
};

/// One measurement: the inputs that reproduce it and what was measured.
struct Evidence {
  std::vector<NamedValue> inputs;
  std::vector<NamedValue> measured;
};

struct AuditReport {
  ClaimId claim_id = ClaimId::Lemma1;
  std::vector<Evidence> evidence;
  std::string verdict_note;
};

/// Builds one report per ClaimId, in enumeration order. On-line records feed
/// the Corollary1 and Appendix A entries; off-line records feed the rest.
std::vector<AuditReport> audit_claims(const std::vector<ZeroRecord>& zeros, const EvalSettings& settings = {});

enum class ProbeDirection { along_t, along_sigma };

struct ProbeSample {
  double radius = 0.0;
  double abs_x_plus = 0.0;   // sqrt(P/Q) at the +radius offset
  double abs_x_minus = 0.0;  // sqrt(P/Q) at the -radius offset
};

/// |X| from sqrt(P/Q) at offsets +-r from the zero along one axis.
/// DomainError when zero.residual >= 1e-8 or a radius is not positive.
std::vector<ProbeSample> limit_probe(const ZeroRecord& zero, ProbeDirection direction,
                                     const std::vector<double>& radii, const EvalSettings& settings = {});

/// Real expression audited under ClaimId::Lemma3_part2:
/// (f(s*) f_t(s) + f(s) f_t(s*)) / (2|X|) - |X| (f(1-s*) f_t(1-s) + f(1-s) f_t(1-s*)) / 2,
/// with f_t the derivative along t.
double lemma3_inequality(Complex s, const EvalSettings& settings = {});

/// Radii 1e-1, 1e-2, ..., 1e-6.
std::vector<double> default_probe_radii();

}  // namespace dh::analysis
