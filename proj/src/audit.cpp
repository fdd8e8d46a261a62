#include "dh/audit.hpp"

#include <cmath>

#include "dh/curve.hpp"
#include "dh/dhfun.hpp"
#include "dh/xratio.hpp"

namespace dh::analysis {
namespace {

using xratio::GammaFactor;

std::vector<NamedValue> at_point(Complex s) { return {{"sigma", s.real()}, {"t", s.imag()}}; }

double abs_x(Complex s) { return std::exp(xratio::log_abs_x(s)); }

AuditReport lemma1(const std::vector<ZeroRecord>& off_line, const EvalSettings& settings) {
  AuditReport r{ClaimId::Lemma1, {}, {}};
  for (const auto& z : off_line) {
    const Complex s = z.location.value();
    const double ax = abs_x(s);
    r.evidence.push_back({at_point(s),
                          {{"abs_x", ax},
                           {"abs_x_minus_1", ax - 1.0},
                           {"abs_f_s", std::abs(dhfun::f_value(s, settings))},
                           {"abs_f_1_minus_s", std::abs(dhfun::f_value(1.0 - s, settings))}}});
  }
  r.verdict_note =
      "Refined zeros located where 0 < |X| and |X| differs from 1; |f| at s and 1-s listed for each.";
  return r;
}

AuditReport lemma2(const std::vector<ZeroRecord>& off_line, double kappa) {
  AuditReport r{ClaimId::Lemma2, {}, {}};
  for (const auto& z : off_line) {
    const Complex s = z.location.value();
    r.evidence.push_back({at_point(s),
                          {{"abs_x", z.abs_x_here},
                           {"abs_t", std::abs(s.imag())},
                           {"kappa", kappa},
                           {"abs_t_over_kappa", std::abs(s.imag()) / kappa},
                           {"within_kappa", z.within_kappa ? 1.0 : 0.0},
                           {"residual", z.residual}}});
  }
  r.verdict_note = "Each off-line zero: |X| at the zero and |t| side by side with kappa.";
  return r;
}

AuditReport corollary1(const std::vector<ZeroRecord>& on_line) {
  AuditReport r{ClaimId::Corollary1, {}, {}};
  double worst = 0.0;
  for (const auto& z : on_line) {
    const Complex s = z.location.value();
    const double dev = std::abs(abs_x(s) - 1.0);
    worst = std::max(worst, dev);
    r.evidence.push_back({at_point(s), {{"abs_x_minus_1", dev}, {"residual", z.residual}}});
  }
  r.evidence.push_back({{{"count", static_cast<double>(on_line.size())}}, {{"max_abs_x_minus_1", worst}}});
  r.verdict_note = "||X| - 1| at every on-line zero; last entry is the maximum.";
  return r;
}

AuditReport lemma3_part1(const EvalSettings& settings) {
  AuditReport r{ClaimId::Lemma3_part1, {}, {}};
  constexpr double kSigmas[] = {0.25, 0.75};
  constexpr double kTs[] = {2.0, 5.0, 10.0, 20.0, 40.0, 80.0, 160.0};
  for (const double sigma : kSigmas) {
    for (const double t : kTs) {
      const Complex s(sigma, t);
      const double fs = std::abs(dhfun::f_value(s, settings));
      const double f1s = std::abs(dhfun::f_value(1.0 - s, settings));
      r.evidence.push_back({at_point(s),
                            {{"gamma_upper", xratio::gamma_modulus(s, GammaFactor::upper)},
                             {"gamma_lower", xratio::gamma_modulus(s, GammaFactor::lower)},
                             {"gamma_upper_dt", xratio::gamma_modulus_dt(s, GammaFactor::upper)},
                             {"gamma_lower_dt", xratio::gamma_modulus_dt(s, GammaFactor::lower)},
                             {"abs_x", abs_x(s)},
                             {"dlogabsx_dt", xratio::dlogabsx_dt(s)},
                             {"abs_f_s_over_abs_f_1_minus_s", fs / f1s}}});
    }
  }
  r.verdict_note =
      "Rays sigma = 0.25 and 0.75: both Gamma moduli and their t-derivatives, |X|, and |f(s)|/|f(1-s)| "
      "from direct evaluation of f.";
  return r;
}

AuditReport lemma3_part2(const std::vector<ZeroRecord>& off_line, const EvalSettings& settings) {
  AuditReport r{ClaimId::Lemma3_part2, {}, {}};
  constexpr double kOffsets[] = {0.0, 1e-3, 1e-2, 1e-1};
  for (const auto& z : off_line) {
    for (const double dt : kOffsets) {
      const Complex s = z.location.value() + Complex(0.0, dt);
      r.evidence.push_back({at_point(s),
                            {{"offset_t", dt},
                             {"inequality_expression", lemma3_inequality(s, settings)},
                             {"dabsx_dt", xratio::dabsx_dt(s)},
                             {"abs_f_s", std::abs(dhfun::f_value(s, settings))},
                             {"abs_f_1_minus_s", std::abs(dhfun::f_value(1.0 - s, settings))}}});
    }
  }
  r.verdict_note =
      "The derivative expression at each off-line zero and at points shifted upward in t, with d|X|/dt there.";
  return r;
}

AuditReport lemma3_part3(double kappa, const EvalSettings& settings) {
  AuditReport r{ClaimId::Lemma3_part3, {}, {}};
  const CurveTrace trace = trace_unit_curve({0.0, 1.0, 0.0, 1.3}, 0.05);
  for (const auto& c : trace.components) {
    const std::size_t stride = std::max<std::size_t>(1, c.vertices.size() / 6);
    for (std::size_t k = 0; k < c.vertices.size(); k += stride) {
      const Complex s = c.vertices[k].value();
      r.evidence.push_back({at_point(s),
                            {{"component_id", static_cast<double>(c.component_id)},
                             {"abs_x", abs_x(s)},
                             {"abs_f_s", std::abs(dhfun::f_value(s, settings))},
                             {"abs_f_1_minus_s", std::abs(dhfun::f_value(1.0 - s, settings))},
                             {"abs_t_over_kappa", std::abs(s.imag()) / kappa}}});
    }
  }
  r.verdict_note = "Sampled vertices of the |X| = 1 branch in the strip: |f| at s and 1-s, |t| relative to kappa.";
  return r;
}

AuditReport puzzle1(const std::vector<ZeroRecord>& off_line, const EvalSettings& settings) {
  AuditReport r{ClaimId::Puzzle1, {}, {}};
  for (const auto& z : off_line) {
    const Complex s = z.location.value();
    const Complex fs = dhfun::f_value(s, settings);
    const Complex f1s = dhfun::f_value(1.0 - s, settings);
    r.evidence.push_back({at_point(s),
                          {{"abs_f_s", std::abs(fs)},
                           {"abs_f_1_minus_s", std::abs(f1s)},
                           {"abs_f_s_minus_f_1_minus_s", std::abs(fs - f1s)}}});
  }
  r.verdict_note = "|f(s_n)| and |f(1 - s_n)| side by side for each off-line zero.";
  return r;
}

AuditReport puzzle2(const std::vector<ZeroRecord>& off_line, double kappa) {
  AuditReport r{ClaimId::Puzzle2, {}, {}};
  for (const auto& z : off_line) {
    const Complex s = z.location.value();
    r.evidence.push_back({at_point(s),
                          {{"abs_x", z.abs_x_here},
                           {"dlogabsx_dt", xratio::dlogabsx_dt(s)},
                           {"sigma_minus_half", s.real() - 0.5},
                           {"abs_t", std::abs(s.imag())},
                           {"kappa", kappa}}});
  }
  r.verdict_note = "Sign of d log|X|/dt at each off-line zero with its offset from sigma = 1/2, |t| and kappa.";
  return r;
}

AuditReport appendix(ClaimId id, ProbeDirection dir, const std::vector<ZeroRecord>& zeros,
                     const EvalSettings& settings) {
  AuditReport r{id, {}, {}};
  const auto radii = default_probe_radii();
  for (const auto& z : zeros) {
    if (!(z.residual < 1e-8)) continue;
    const Complex s = z.location.value();
    const double direct = abs_x(s);
    for (const auto& p : limit_probe(z, dir, radii, settings)) {
      auto inputs = at_point(s);
      inputs.push_back({"radius", p.radius});
      r.evidence.push_back({std::move(inputs),
                            {{"abs_x_plus", p.abs_x_plus},
                             {"abs_x_minus", p.abs_x_minus},
                             {"abs_x_direct", direct},
                             {"on_line", z.on_line ? 1.0 : 0.0}}});
    }
  }
  r.verdict_note = dir == ProbeDirection::along_t
                       ? "sqrt(P/Q) at t_n +- r for shrinking r, with |X(s_n)| from the Gamma quotient."
                       : "sqrt(P/Q) at sigma_n +- r for shrinking r, with |X(s_n)| from the Gamma quotient.";
  return r;
}

}  // namespace

std::string_view claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::Lemma1: return "Lemma1";
    case ClaimId::Lemma2: return "Lemma2";
    case ClaimId::Corollary1: return "Corollary1";
    case ClaimId::Lemma3_part1: return "Lemma3_part1";
    case ClaimId::Lemma3_part2: return "Lemma3_part2";
    case ClaimId::Lemma3_part3: return "Lemma3_part3";
    case ClaimId::Puzzle1: return "Puzzle1";
    case ClaimId::Puzzle2: return "Puzzle2";
    case ClaimId::AppendixA_t: return "AppendixA_t";
    case ClaimId::AppendixA_sigma: return "AppendixA_sigma";
  }
  return "unknown";
}

std::vector<double> default_probe_radii() { return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }

double lemma3_inequality(Complex s, const EvalSettings& settings) {
  const Complex i(0.0, 1.0);
  const Complex sc = std::conj(s);
  const Complex fs = dhfun::f_value(s, settings);
  const Complex fsc = dhfun::f_value(sc, settings);
  const Complex f1s = dhfun::f_value(1.0 - s, settings);
  const Complex f1sc = dhfun::f_value(1.0 - sc, settings);
  // d/dt of f at s, s*, 1-s, 1-s* via the chain rule on f'.
  const Complex dfs = i * dhfun::f_prime(s, settings);
  const Complex dfsc = -i * dhfun::f_prime(sc, settings);
  const Complex df1s = -i * dhfun::f_prime(1.0 - s, settings);
  const Complex df1sc = i * dhfun::f_prime(1.0 - sc, settings);
  const double ax = abs_x(s);
  const Complex expr = 0.5 * ((fsc * dfs + fs * dfsc) / ax - ax * (f1sc * df1s + f1s * df1sc));
  return expr.real();
}

std::vector<ProbeSample> limit_probe(const ZeroRecord& zero, ProbeDirection direction,
                                     const std::vector<double>& radii, const EvalSettings& settings) {
  if (!(zero.residual < 1e-8)) throw DomainError("limit_probe: zero residual must be below 1e-8");
  const double sigma = zero.location.sigma();
  const double t = zero.location.t();
  auto ratio = [&](double sg, double tt) {
    const auto v = dhfun::pq(sg, tt, settings);
    return std::sqrt(v.p / v.q);
  };
  std::vector<ProbeSample> out;
  out.reserve(radii.size());
  for (const double r : radii) {
    if (!(r > 0.0)) throw DomainError("limit_probe: radii must be positive");
    ProbeSample p{r, 0.0, 0.0};
    if (direction == ProbeDirection::along_t) {
      p.abs_x_plus = ratio(sigma, t + r);
      p.abs_x_minus = ratio(sigma, t - r);
    } else {
      p.abs_x_plus = ratio(sigma + r, t);
      p.abs_x_minus = ratio(sigma - r, t);
    }
    out.push_back(p);
  }
  return out;
}

std::vector<AuditReport> audit_claims(const std::vector<ZeroRecord>& zeros, const EvalSettings& settings) {
  std::vector<ZeroRecord> on_line;
  std::vector<ZeroRecord> off_line;
  for (const auto& z : merge_zero_records(zeros)) (z.on_line ? on_line : off_line).push_back(z);
  const double kappa = kappa_digamma_root();

  std::vector<ZeroRecord> probe_set = off_line;
  if (!on_line.empty()) probe_set.insert(probe_set.begin(), on_line.front());

  std::vector<AuditReport> out;
  out.push_back(lemma1(off_line, settings));
  out.push_back(lemma2(off_line, kappa));
  out.push_back(corollary1(on_line));
  out.push_back(lemma3_part1(settings));
  out.push_back(lemma3_part2(off_line, settings));
  out.push_back(lemma3_part3(kappa, settings));
  out.push_back(puzzle1(off_line, settings));
  out.push_back(puzzle2(off_line, kappa));
  out.push_back(appendix(ClaimId::AppendixA_t, ProbeDirection::along_t, probe_set, settings));
  out.push_back(appendix(ClaimId::AppendixA_sigma, ProbeDirection::along_sigma, probe_set, settings));
  return out;
}

}  // namespace dh::analysis
