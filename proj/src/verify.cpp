#include "dh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "dh/audit.hpp"
#include "dh/curve.hpp"
#include "dh/dhfun.hpp"
#include "dh/specfun.hpp"
#include "dh/xratio.hpp"
#include "dh/zeros.hpp"

namespace dh::verify {
namespace {

using Checks = std::vector<CheckResult>;
using Body = std::function<Checks(const EvalSettings&)>;

struct Task {
  std::string suite;
  Body body;
};

CheckResult check(std::string suite, std::string name, double measured, double threshold, int samples) {
  return {std::move(suite), std::move(name), measured <= threshold, measured, threshold, samples};
}

// Independent stream per check so tasks can run in any order.
SeededUniform stream(const EvalSettings& s, std::uint64_t salt) {
  return SeededUniform(s.rng_seed * 0x9E3779B97F4A7C15ULL + salt);
}

double rel_err(double got, double want, double floor = 1e-300) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

bool near_x_pole(Complex s, double radius) {
  if (s.real() < 1.5) return false;
  const double k = std::round(s.real() / 2.0);
  return std::abs(s - Complex(2.0 * k, 0.0)) < radius;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// ---------------------------------------------------------------- specfun

Checks specfun_identities(const EvalSettings&) {
  const std::string s = "specfun";
  Checks out;
  out.push_back(check(s, "lgamma_half", std::abs(specfun::lgamma(0.5) - std::log(std::sqrt(kPi))), 1e-14, 1));
  out.push_back(check(s, "lgamma_one", std::abs(specfun::lgamma(1.0)), 1e-14, 1));
  const double mod2 = std::exp(2.0 * specfun::lgamma(Complex(1.0, 1.0)).real());
  out.push_back(check(s, "lgamma_modulus_one_plus_i", rel_err(mod2, kPi / std::sinh(kPi)), 1e-13, 1));
  out.push_back(check(s, "digamma_one", std::abs(specfun::digamma(1.0) + kEulerGamma), 1e-14, 1));
  out.push_back(
      check(s, "digamma_half", std::abs(specfun::digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0)), 1e-14, 1));
  return out;
}

Checks lgamma_recurrence(const EvalSettings& settings) {
  auto u = stream(settings, 101);
  double worst = 0.0;
  constexpr int n = 200;
  for (int k = 0; k < n; ++k) {
    const Complex z(u(0.1, 20.0), u(-300.0, 300.0));
    const Complex d = specfun::lgamma(z + 1.0) - specfun::lgamma(z) - std::log(z);
    // Equal up to a multiple of 2 pi i on the principal branch.
    const double im = d.imag() - 2.0 * kPi * std::round(d.imag() / (2.0 * kPi));
    worst = std::max(worst, std::abs(Complex(d.real(), im)));
  }
  return {check("specfun", "lgamma_recurrence", worst, 1e-12, n)};
}

Checks lgamma_reflection(const EvalSettings& settings) {
  auto u = stream(settings, 102);
  double worst = 0.0;
  constexpr int n = 200;
  for (int k = 0; k < n; ++k) {
    const Complex z(u(0.05, 0.95), u(-20.0, 20.0));
    const double lhs = specfun::lgamma(z).real() + specfun::lgamma(1.0 - z).real();
    const double rhs = std::log(kPi) - std::log(std::abs(std::sin(kPi * z)));
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
  }
  return {check("specfun", "lgamma_reflection_modulus", worst, 1e-12, n)};
}

Checks digamma_recurrence(const EvalSettings& settings) {
  auto u = stream(settings, 103);
  double worst = 0.0;
  constexpr int n = 200;
  for (int k = 0; k < n; ++k) {
    const Complex z(u(0.1, 30.0), u(-300.0, 300.0));
    const Complex lhs = specfun::digamma(z + 1.0);
    const Complex rhs = specfun::digamma(z) + 1.0 / z;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return {check("specfun", "digamma_recurrence", worst, 1e-11, n)};
}

Checks hurwitz_shift(const EvalSettings& settings) {
  auto u = stream(settings, 104);
  double worst = 0.0;
  constexpr int n = 200;
  for (int k = 0; k < n; ++k) {
    const Complex s(u(-2.0, 6.0), u(-50.0, 50.0));
    if (std::abs(s - 1.0) < 0.05) continue;
    const double a = u(0.1, 1.0);
    const Complex z0 = specfun::hurwitz_zeta(s, a, settings);
    const Complex z1 = specfun::hurwitz_zeta_em(s, a + 1.0, settings);
    const Complex p = specfun::cpow(a, -s);
    worst = std::max(worst, std::abs(z0 - z1 - p) / (std::abs(z0) + std::abs(p)));
  }
  return {check("specfun", "hurwitz_shift_recurrence", worst, 1e-10, n)};
}

Checks hurwitz_brute(const EvalSettings& settings) {
  auto u = stream(settings, 105);
  double worst = 0.0;
  constexpr int n = 10;
  constexpr long terms = 100000;
  for (int k = 0; k < n; ++k) {
    const Complex s(3.0, u(-20.0, 20.0));
    const double a = 0.2 * (1 + k % 5);
    Complex sum = 0.0;
    for (long m = terms - 1; m >= 0; --m) sum += specfun::cpow(static_cast<double>(m) + a, -s);
    const double x = static_cast<double>(terms) + a;
    const Complex xs = specfun::cpow(x, -s);
    sum += xs * x / (s - 1.0) + 0.5 * xs + s * xs / (12.0 * x);
    worst = std::max(worst, std::abs(specfun::hurwitz_zeta(s, a, settings) - sum));
  }
  return {check("specfun", "hurwitz_bruteforce_re3", worst, 1e-10, n)};
}

// ---------------------------------------------------------------- dhfun

Checks fe_residual(const EvalSettings& settings) {
  auto u = stream(settings, 201);
  double worst = 0.0;
  int n = 0;
  while (n < 1000) {
    const Complex s(u(-10.0, 11.0), u(-50.0, 50.0));
    if (near_x_pole(s, 0.05)) continue;
    worst = std::max(worst, dhfun::functional_eq_residual(s, settings));
    ++n;
  }
  return {check("dhfun", "functional_equation", worst, 1e-9, n)};
}

Checks f_conjugate(const EvalSettings& settings) {
  auto u = stream(settings, 202);
  double worst = 0.0;
  constexpr int n = 200;
  for (int k = 0; k < n; ++k) {
    const Complex s(u(-10.0, 11.0), u(-50.0, 50.0));
    const Complex a = dhfun::f_value(std::conj(s), settings);
    const Complex b = std::conj(dhfun::f_value(s, settings));
    worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
  }
  return {check("dhfun", "conjugate_symmetry", worst, 1e-12, n)};
}

Checks f_trivial_zeros(const EvalSettings& settings) {
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n) worst = std::max(worst, std::abs(dhfun::f_value(-(2.0 * n + 1.0), settings)));
  return {check("dhfun", "trivial_zeros", worst, 1e-9, 6)};
}

Checks f_series_oracle(const EvalSettings& settings) {
  auto u = stream(settings, 203);
  double worst = 0.0;
  constexpr int n = 50;
  for (int k = 0; k < n; ++k) {
    const Complex s(u(2.0, 6.0), u(-50.0, 50.0));
    const auto series = dhfun::f_series(s, 200000);
    const auto direct = dhfun::f(s, settings);
    const double tol = series.est_abs_err + direct.est_abs_err + 1e-12 * (1.0 + std::abs(series.value));
    worst = std::max(worst, std::abs(direct.value - series.value) / tol);
  }
  return {check("dhfun", "dirichlet_series_oracle", worst, 1.0, n)};
}

Checks z_realness(const EvalSettings& settings) {
  auto u = stream(settings, 204);
  double worst = 0.0;
  constexpr int n = 200;
  for (int k = 0; k < n; ++k) {
    const auto z = dhfun::z_function(u(-200.0, 200.0), settings);
    worst = std::max(worst, std::abs(z.discarded_imag) / (1.0 + std::abs(z.value)));
  }
  return {check("dhfun", "z_function_realness", worst, 1e-8, n)};
}

Checks pq_on_line(const EvalSettings& settings) {
  auto u = stream(settings, 205);
  double worst = 0.0;
  constexpr int n = 100;
  for (int k = 0; k < n; ++k) {
    const auto v = dhfun::pq(0.5, u(-100.0, 100.0), settings);
    worst = std::max(worst, std::abs(v.p - v.q) / std::max(v.p, 1e-300));
  }
  return {check("dhfun", "pq_equal_on_line", worst, 1e-12, n)};
}

// ---------------------------------------------------------------- xratio

Checks unit_circle(const EvalSettings& settings) {
  auto u = stream(settings, 301);
  double worst = 0.0;
  constexpr int n = 1000;
  for (int k = 0; k < n; ++k) {
    const double t = u(-100.0, 100.0);
    worst = std::max(worst, std::abs(std::abs(xratio::x_of(Complex(0.5, t)).value) - 1.0));
  }
  return {check("xratio", "unit_circle_map", worst, 1e-12, n)};
}

Checks reflection(const EvalSettings& settings) {
  auto u = stream(settings, 302);
  double worst = 0.0;
  int n = 0;
  while (n < 500) {
    const xratio::MirrorPair p{u(-50.0, 50.0), u(-5.0, 5.0)};
    if (near_x_pole(p.s_plus(), 0.05) || near_x_pole(p.s_minus(), 0.05)) continue;
    worst = std::max(worst, xratio::reflection_defect(p));
    ++n;
  }
  return {check("xratio", "reflection_identity", worst, 1e-12, n)};
}

Checks reciprocity(const EvalSettings&) {
  double w3 = 0.0;
  double w5 = 0.0;
  for (int n = 0; n <= 5; ++n) {
    w3 = std::max(w3, xratio::zero_pole_reciprocity_defect(n, 1e-3));
    w5 = std::max(w5, xratio::zero_pole_reciprocity_defect(n, 1e-5));
  }
  return {check("xratio", "zero_pole_reciprocity_delta_1e-3", w3, 1e-2, 6),
          check("xratio", "zero_pole_reciprocity_delta_1e-5", w5, 1e-4, 6)};
}

Checks x_conjugate(const EvalSettings& settings) {
  auto u = stream(settings, 303);
  double worst = 0.0;
  int n = 0;
  while (n < 200) {
    const Complex s(u(-10.0, 11.0), u(-50.0, 50.0));
    if (near_x_pole(s, 0.05)) continue;
    const Complex a = xratio::x_of(std::conj(s)).value;
    const Complex b = std::conj(xratio::x_of(s).value);
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
    ++n;
  }
  return {check("xratio", "conjugate_symmetry", worst, 1e-12, n)};
}

// Seeded point away from sigma = 1/2, t = 0 and the Gamma poles.
Complex series_point(SeededUniform& u) {
  double sigma = 0.5;
  while (std::abs(sigma - 0.5) < 0.05) sigma = u(-3.0, 4.0);
  const double t = (u(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * u(0.5, 40.0);
  return {sigma, t};
}

Checks series_vs_fd(const EvalSettings& settings) {
  auto u = stream(settings, 304);
  const double h = settings.fd_step;
  constexpr int n = 200;
  double w_t = 0.0, w_sigma = 0.0, w_up = 0.0, w_lo = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex s = series_point(u);
    const Complex dt(0.0, h);
    const double fd_t = (xratio::log_abs_x(s + dt) - xratio::log_abs_x(s - dt)) / (2.0 * h);
    w_t = std::max(w_t, rel_err(xratio::dlogabsx_dt(s), fd_t));
    const double fd_s = (xratio::log_abs_x(s + h) - xratio::log_abs_x(s - h)) / (2.0 * h);
    w_sigma = std::max(w_sigma, rel_err(xratio::dsigma_logabsx(s), fd_s));
    for (const auto which : {xratio::GammaFactor::upper, xratio::GammaFactor::lower}) {
      const double fd =
          (xratio::gamma_modulus(s + dt, which) - xratio::gamma_modulus(s - dt, which)) / (2.0 * h);
      double& w = which == xratio::GammaFactor::upper ? w_up : w_lo;
      w = std::max(w, rel_err(xratio::gamma_modulus_dt(s, which), fd));
    }
  }
  return {check("xratio", "dlogabsx_dt_vs_fd", w_t, 1e-6, n),
          check("xratio", "dsigma_logabsx_vs_fd", w_sigma, 1e-6, n),
          check("xratio", "gamma_upper_dt_vs_fd", w_up, 1e-6, n),
          check("xratio", "gamma_lower_dt_vs_fd", w_lo, 1e-6, n)};
}

Checks sign_tables(const EvalSettings& settings) {
  auto u = stream(settings, 305);
  const double h = settings.fd_step;
  Checks out;
  // Quadrants of (sigma - 1/2, t).
  constexpr int kQuad[4][2] = {{-1, 1}, {1, 1}, {1, -1}, {-1, -1}};
  constexpr const char* kNames[4] = {"left_upper", "right_upper", "right_lower", "left_lower"};
  for (int q = 0; q < 4; ++q) {
    int bad_x = 0;
    int bad_gamma = 0;
    constexpr int n = 100;
    for (int k = 0; k < n; ++k) {
      const double sigma = 0.5 + kQuad[q][0] * u(0.05, 3.0);
      const double t = kQuad[q][1] * u(0.1, 40.0);
      const Complex s(sigma, t);
      const Complex dt(0.0, h);
      // d log|X| / dt carries the sign of t (1/2 - sigma).
      const int want = sign_of(t * (0.5 - sigma));
      const double fd = (xratio::log_abs_x(s + dt) - xratio::log_abs_x(s - dt)) / (2.0 * h);
      if (sign_of(xratio::dlogabsx_dt(s)) != want || sign_of(fd) != want) ++bad_x;
      // Both Gamma moduli decrease away from t = 0.
      for (const auto which : {xratio::GammaFactor::upper, xratio::GammaFactor::lower}) {
        const double fdg =
            (xratio::gamma_modulus(s + dt, which) - xratio::gamma_modulus(s - dt, which)) / (2.0 * h);
        const int want_g = -sign_of(t);
        if (sign_of(xratio::gamma_modulus_dt(s, which)) != want_g || sign_of(fdg) != want_g) ++bad_gamma;
      }
    }
    out.push_back(check("xratio", std::string("monotonicity_") + kNames[q], bad_x, 0.0, n));
    out.push_back(check("xratio", std::string("gamma_modulus_sign_") + kNames[q], bad_gamma, 0.0, n));
  }
  return out;
}

// ---------------------------------------------------------------- analysis

Checks kappa_checks(const EvalSettings&) {
  const auto k = analysis::kappa();
  return {check("analysis", "kappa_value", std::abs(k.kappa - 1.21164), 1e-3, 1),
          check("analysis", "kappa_two_methods", std::abs(k.trace_maximum - k.digamma_root), 1e-6, 1),
          check("analysis", "kappa_negative_branch", std::abs(k.negative_branch + k.kappa), 1e-6, 1)};
}

Checks curve_checks(const EvalSettings&) {
  constexpr double step = 0.02;
  const auto trace = analysis::trace_unit_curve({-6.0, 7.0, -4.0, 4.0}, step);
  double soundness = 0.0;
  double mirror = 0.0;
  std::vector<Complex> pts;
  for (const auto& c : trace.components) {
    for (const auto& v : c.vertices) {
      soundness = std::max(soundness, std::abs(xratio::log_abs_x(v.value())));
      mirror = std::max(mirror, std::abs(std::exp(xratio::log_abs_x(v.mirrored().value())) - 1.0));
      pts.push_back(v.value());
    }
  }
  // Hausdorff distance between the vertex set and its mirror image, bucketed.
  std::map<std::pair<long, long>, std::vector<Complex>> buckets;
  auto key = [&](Complex z) {
    return std::make_pair(static_cast<long>(std::floor(z.real() / step)), static_cast<long>(std::floor(z.imag() / step)));
  };
  for (const auto& p : pts) buckets[key(p)].push_back(p);
  double hausdorff = 0.0;
  for (const auto& p : pts) {
    const Complex m(1.0 - p.real(), p.imag());
    const auto [kx, ky] = key(m);
    double best = std::numeric_limits<double>::infinity();
    for (long dx = -2; dx <= 2; ++dx) {
      for (long dy = -2; dy <= 2; ++dy) {
        const auto it = buckets.find({kx + dx, ky + dy});
        if (it == buckets.end()) continue;
        for (const auto& q : it->second) best = std::min(best, std::abs(q - m));
      }
    }
    hausdorff = std::max(hausdorff, best);
  }
  const int n = static_cast<int>(pts.size());
  return {check("analysis", "curve_vertex_level", soundness, analysis::kCurveTol, n),
          check("analysis", "curve_mirror_level", mirror, 1e-8, n),
          check("analysis", "curve_mirror_hausdorff", hausdorff, 2.0 * step, n)};
}

Checks offline_zero_checks(const EvalSettings& settings) {
  const Complex quoted[4] = {{0.808517, 85.699348}, {0.650830, 114.163343}, {0.574356, 166.479306},
                             {0.724258, 176.702461}};
  double dist = 0.0, res = 0.0, paired = 0.0;
  for (const auto& q : quoted) {
    const auto r = analysis::refine_zero(Complex(std::round(q.real() * 100.0) / 100.0, std::round(q.imag() * 100.0) / 100.0),
                                         settings);
    dist = std::max(dist, std::abs(r.location.value() - q));
    res = std::max(res, r.residual);
    paired = std::max(paired, r.paired_residual);
  }
  const int c1 = analysis::count_zeros_rect({0.6, 0.95, 85.0, 86.5}, 8, settings).count;
  const int c0 = analysis::count_zeros_rect({0.6, 0.95, 86.5, 88.0}, 8, settings).count;
  return {check("analysis", "offline_zero_locations", dist, 1e-4, 4),
          check("analysis", "offline_zero_residuals", res, 1e-8, 4),
          check("analysis", "offline_zero_pairing", paired, 1e-6, 4),
          check("analysis", "count_rect_s1", std::abs(c1 - 1), 0.0, 1),
          check("analysis", "count_rect_empty", std::abs(c0), 0.0, 1)};
}

Checks survey_checks(const EvalSettings& settings) {
  const auto survey = analysis::survey_zeros({0.0, 1.0, 0.0, 120.0}, settings);
  double paired = 0.0;
  int on_line = 0;
  for (const auto& z : survey.zeros) {
    paired = std::max(paired, z.paired_residual);
    on_line += z.on_line ? 1 : 0;
  }
  const auto line = analysis::scan_critical_line(0.0, 120.0, 0.05, settings);
  const auto line_half = analysis::scan_critical_line(0.0, 120.0, 0.025, settings);
  double unit = 0.0;
  double probe = 0.0;
  for (const auto& z : line) {
    unit = std::max(unit, std::abs(z.abs_x_here - 1.0));
    for (const auto& p : analysis::limit_probe(z, analysis::ProbeDirection::along_t, analysis::default_probe_radii(),
                                               settings)) {
      probe = std::max({probe, std::abs(p.abs_x_plus - 1.0), std::abs(p.abs_x_minus - 1.0)});
    }
  }
  double grid_shift = line.size() == line_half.size() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < std::min(line.size(), line_half.size()); ++k) {
    grid_shift = std::max(grid_shift, std::abs(line[k].location.value() - line_half[k].location.value()));
  }
  const int records = static_cast<int>(survey.zeros.size());
  return {check("analysis", "survey_winding_equals_records", std::abs(survey.winding_total - records), 0.0, records),
          check("analysis", "survey_pairing", paired, 1e-6, records),
          check("analysis", "line_scan_matches_survey", std::abs(static_cast<int>(line.size()) - on_line), 0.0,
                static_cast<int>(line.size())),
          check("analysis", "line_scan_step_halved", grid_shift, 1e-7, static_cast<int>(line.size())),
          check("analysis", "line_zeros_unit_circle", unit, 1e-10, static_cast<int>(line.size())),
          check("analysis", "limit_probe_on_line", probe, 1e-9, static_cast<int>(line.size()))};
}

Checks audit_checks(const EvalSettings& settings) {
  const auto s1 = analysis::refine_zero(Complex(0.81, 85.70), settings);
  const auto reports = analysis::audit_claims({s1}, settings);
  double worst = 0.0;
  double within = 1.0;
  for (const auto& r : reports) {
    if (r.claim_id == analysis::ClaimId::Puzzle1) {
      for (const auto& m : r.evidence.front().measured) {
        if (m.name == "abs_f_s" || m.name == "abs_f_1_minus_s") worst = std::max(worst, m.value);
      }
    }
    if (r.claim_id == analysis::ClaimId::Lemma2) {
      for (const auto& m : r.evidence.front().measured) {
        if (m.name == "within_kappa") within = m.value;
      }
    }
  }
  return {check("analysis", "audit_s1_residuals", worst, 1e-6, 1),
          check("analysis", "audit_s1_outside_kappa", within, 0.0, 1)};
}

const std::vector<Task>& tasks() {
  static const std::vector<Task> all = {
      {"specfun", specfun_identities}, {"specfun", lgamma_recurrence}, {"specfun", lgamma_reflection},
      {"specfun", digamma_recurrence}, {"specfun", hurwitz_shift},     {"specfun", hurwitz_brute},
      {"dhfun", fe_residual},          {"dhfun", f_conjugate},         {"dhfun", f_trivial_zeros},
      {"dhfun", f_series_oracle},      {"dhfun", z_realness},          {"dhfun", pq_on_line},
      {"xratio", unit_circle},         {"xratio", reflection},         {"xratio", reciprocity},
      {"xratio", x_conjugate},         {"xratio", series_vs_fd},       {"xratio", sign_tables},
      {"analysis", kappa_checks},      {"analysis", curve_checks},     {"analysis", offline_zero_checks},
      {"analysis", survey_checks},     {"analysis", audit_checks},
  };
  return all;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun", "dhfun", "xratio", "analysis"};
  return names;
}

std::vector<SuiteReport> run_suites(std::string_view suite, const EvalSettings& settings, const ParallelFor& run) {
  settings.validate();
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<const Task*> selected;
  for (const auto& t : tasks()) {
    if (suite == "all" || t.suite == suite) selected.push_back(&t);
  }
  std::vector<Checks> results(selected.size());
  run(selected.size(), [&](std::size_t k) { results[k] = selected[k]->body(settings); });

  std::vector<SuiteReport> out;
  for (const auto& name : names) {
    if (suite != "all" && name != suite) continue;
    SuiteReport rep{name, {}};
    for (std::size_t k = 0; k < selected.size(); ++k) {
      if (selected[k]->suite != name) continue;
      rep.checks.insert(rep.checks.end(), results[k].begin(), results[k].end());
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace dh::verify
