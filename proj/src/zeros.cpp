#include "dh/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dh/curve.hpp"
#include "dh/dhfun.hpp"
#include "dh/xratio.hpp"

namespace dh::analysis {
namespace {

constexpr double kTrustRadius = 0.5;

// Internal signal: a contour sample fell below the boundary guard.
struct BoundaryHit {
  Complex where;
};

class ContourWalker {
 public:
  ContourWalker(const EvalSettings& settings, const CountOptions& options)
      : settings_(settings), options_(options) {}

  // Accumulated change of arg f along the straight segment a -> b.
  double edge(Complex a, Complex b, int n_base) {
    Complex za = a;
    Complex fa = eval(za);
    double total = 0.0;
    for (int k = 1; k <= n_base; ++k) {
      const Complex zb = k == n_base ? b : a + (b - a) * (static_cast<double>(k) / n_base);
      const Complex fb = eval(zb);
      total += segment(za, fa, zb, fb, 0);
      za = zb;
      fa = fb;
    }
    return total;
  }

  [[nodiscard]] int samples() const { return samples_; }

 private:
  Complex eval(Complex z) {
    if (++samples_ > options_.sample_budget) throw UndersampledError("count_zeros_rect: sample budget exhausted");
    const Complex v = dhfun::f_value(z, settings_);
    if (std::abs(v) < options_.boundary_guard) throw BoundaryHit{z};
    return v;
  }

  double segment(Complex za, Complex fa, Complex zb, Complex fb, int depth) {
    const double d = std::arg(fb / fa);
    if (std::abs(d) < 0.5 * kPi) return d;
    if (depth > 60 || std::abs(zb - za) < 1e-12) {
      throw UndersampledError("count_zeros_rect: phase step bound unattainable near " +
                              std::to_string(za.real()) + "+" + std::to_string(za.imag()) + "i");
    }
    const Complex zm = 0.5 * (za + zb);
    const Complex fm = eval(zm);
    return segment(za, fa, zm, fm, depth + 1) + segment(zm, fm, zb, fb, depth + 1);
  }

  const EvalSettings& settings_;
  const CountOptions& options_;
  int samples_ = 0;
};

int base_samples(double length, int samples_per_side, double max_step) {
  return std::max(samples_per_side, static_cast<int>(std::ceil(length / max_step)));
}

// Throws BoundaryHit.
ZeroCount wind(const Rect& r, int samples_per_side, const EvalSettings& settings, const CountOptions& options) {
  ContourWalker walker(settings, options);
  const Complex c00(r.sigma0, r.t0);
  const Complex c10(r.sigma1, r.t0);
  const Complex c11(r.sigma1, r.t1);
  const Complex c01(r.sigma0, r.t1);
  const int nw = base_samples(r.width(), samples_per_side, options.max_base_step);
  const int nh = base_samples(r.height(), samples_per_side, options.max_base_step);
  double total = walker.edge(c00, c10, nw);
  total += walker.edge(c10, c11, nh);
  total += walker.edge(c11, c01, nw);
  total += walker.edge(c01, c00, nh);
  const double turns = total / (2.0 * kPi);
  const long rounded = std::lround(turns);
  if (std::abs(turns - static_cast<double>(rounded)) > 0.05) {
    throw UndersampledError("count_zeros_rect: winding not close to an integer");
  }
  return ZeroCount{static_cast<int>(rounded), r, walker.samples(), 0};
}

Rect grow(const Rect& r, double by) { return {r.sigma0 - by, r.sigma1 + by, r.t0 - by, r.t1 + by}; }

Complex centre(const Rect& r) { return {0.5 * (r.sigma0 + r.sigma1), 0.5 * (r.t0 + r.t1)}; }

bool contains_with_margin(const Rect& r, Complex z, double margin) {
  return z.real() >= r.sigma0 - margin && z.real() <= r.sigma1 + margin && z.imag() >= r.t0 - margin &&
         z.imag() <= r.t1 + margin;
}

void locate(const Rect& r, int k, int depth, const EvalSettings& settings, std::vector<ZeroRecord>& out) {
  if (k <= 0) return;
  if (k == 1) {
    try {
      ZeroRecord rec = refine_zero(centre(r), settings);
      if (contains_with_margin(r, rec.location.value(), 1e-9)) {
        out.push_back(std::move(rec));
        return;
      }
    } catch (const ConvergenceError&) {
      // fall through to subdivision
    }
  }
  if (depth >= 12) throw ConvergenceError("survey: subdivision depth exhausted");

  const CountOptions no_perturb{.max_perturbations = 0};
  constexpr double kSplits[] = {0.5, 0.43, 0.57, 0.37};
  for (const double frac : kSplits) {
    const double xm = r.sigma0 + frac * r.width();
    const double ym = r.t0 + frac * r.height();
    const Rect quads[4] = {{r.sigma0, xm, r.t0, ym},
                           {xm, r.sigma1, r.t0, ym},
                           {r.sigma0, xm, ym, r.t1},
                           {xm, r.sigma1, ym, r.t1}};
    int counts[4] = {0, 0, 0, 0};
    try {
      for (int q = 0; q < 4; ++q) counts[q] = count_zeros_rect(quads[q], 8, settings, no_perturb).count;
    } catch (const BoundaryZeroError&) {
      continue;
    }
    if (counts[0] + counts[1] + counts[2] + counts[3] != k) continue;
    for (int q = 0; q < 4; ++q) locate(quads[q], counts[q], depth + 1, settings, out);
    return;
  }
  throw ConvergenceError("survey: no consistent subdivision found");
}

double cached_kappa() {
  static const double value = kappa_digamma_root();
  return value;
}

}  // namespace

bool record_less(const ZeroRecord& a, const ZeroRecord& b) {
  if (a.location.t() != b.location.t()) return a.location.t() < b.location.t();
  return a.location.sigma() < b.location.sigma();
}

ZeroCount count_zeros_rect(const Rect& rect, int samples_per_side, const EvalSettings& settings,
                           const CountOptions& options) {
  if (!rect.valid()) throw DomainError("count_zeros_rect: empty rectangle");
  if (samples_per_side < 1) throw DomainError("count_zeros_rect: samples_per_side must be positive");
  const double half_step =
      0.5 * std::min(rect.width() / base_samples(rect.width(), samples_per_side, options.max_base_step),
                     rect.height() / base_samples(rect.height(), samples_per_side, options.max_base_step));
  Rect current = rect;
  for (int attempt = 0;; ++attempt) {
    try {
      ZeroCount zc = wind(current, samples_per_side, settings, options);
      zc.perturbations = attempt;
      return zc;
    } catch (const BoundaryHit& hit) {
      if (attempt >= options.max_perturbations) {
        throw BoundaryZeroError("count_zeros_rect: f vanishes on the contour near " + std::to_string(hit.where.real()) +
                                "+" + std::to_string(hit.where.imag()) + "i");
      }
      current = grow(current, half_step);
    }
  }
}

ZeroRecord describe_zero(Complex z, const EvalSettings& settings) {
  ZeroRecord rec;
  rec.location = ComplexPoint(z);
  rec.residual = std::abs(dhfun::f_value(z, settings));
  rec.paired_location = rec.location.reflected();
  rec.paired_residual = std::abs(dhfun::f_value(rec.paired_location.value(), settings));
  const auto x = xratio::x_of(z);
  rec.abs_x_here = x.zero_flag ? 0.0 : std::exp(x.log_abs);
  rec.on_line = std::abs(z.real() - 0.5) < kLineTol;
  rec.within_kappa = std::abs(z.imag()) < cached_kappa();
  return rec;
}

ZeroRecord refine_zero(Complex seed, const EvalSettings& settings) {
  require_finite(seed, "refine_zero");
  std::vector<ComplexPoint> trace{ComplexPoint(seed)};
  Complex z = seed;
  Complex fz = dhfun::f_value(z, settings);
  int it = 0;
  bool converged = std::abs(fz) < settings.newton_tol;
  while (!converged && it < settings.newton_max_iter) {
    const Complex d = dhfun::f_prime(z, settings);
    if (d == Complex(0.0)) throw ConvergenceError("refine_zero: vanishing derivative");
    z -= fz / d;
    ++it;
    trace.emplace_back(z);
    if (std::abs(z - seed) > kTrustRadius) throw DivergedError("refine_zero: iterate left the trust disk");
    fz = dhfun::f_value(z, settings);
    converged = std::abs(fz) < settings.newton_tol;
  }
  if (!converged) throw ConvergenceError("refine_zero: no convergence within newton_max_iter");
  // One polishing step; kept only if it lowers |f|.
  const Complex d = dhfun::f_prime(z, settings);
  if (d != Complex(0.0)) {
    const Complex polished = z - fz / d;
    if (std::abs(dhfun::f_value(polished, settings)) < std::abs(fz)) {
      z = polished;
      ++it;
      trace.emplace_back(z);
    }
  }
  ZeroRecord rec = describe_zero(z, settings);
  rec.iterations = it;
  rec.trace = std::move(trace);
  return rec;
}

std::vector<ZeroRecord> merge_zero_records(std::vector<ZeroRecord> records) {
  std::sort(records.begin(), records.end(), record_less);
  std::vector<ZeroRecord> out;
  for (auto& r : records) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const ZeroRecord& o) {
      return std::abs(o.location.value() - r.location.value()) < 1e-7;
    });
    if (!dup) out.push_back(std::move(r));
  }
  return out;
}

std::vector<ZeroRecord> scan_critical_line(double t0, double t1, double step, const EvalSettings& settings,
                                           const ParallelFor& run) {
  if (!(t0 < t1)) throw DomainError("scan_critical_line: requires t0 < t1");
  if (!(step > 0.0)) throw DomainError("scan_critical_line: step must be positive");
  const auto n = static_cast<std::size_t>(std::ceil((t1 - t0) / step - 1e-9));
  auto grid_t = [&](std::size_t k) { return k == n ? t1 : t0 + step * static_cast<double>(k); };

  std::vector<double> z(n + 1);
  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (n + kChunk) / kChunk;
  run(chunks, [&](std::size_t c) {
    for (std::size_t k = c * kChunk; k < std::min(n + 1, (c + 1) * kChunk); ++k) {
      z[k] = dhfun::z_function(grid_t(k), settings).value;
    }
  });

  std::vector<std::pair<double, double>> brackets;
  for (std::size_t k = 0; k < n; ++k) {
    if (z[k] == 0.0) {
      brackets.emplace_back(grid_t(k), grid_t(k));
    } else if ((z[k] < 0.0) != (z[k + 1] < 0.0) && z[k + 1] != 0.0) {
      brackets.emplace_back(grid_t(k), grid_t(k + 1));
    }
  }
  if (n > 0 && z[n] == 0.0) brackets.emplace_back(grid_t(n), grid_t(n));

  std::vector<std::vector<ZeroRecord>> found(brackets.size());
  run(brackets.size(), [&](std::size_t b) {
    auto [lo, hi] = brackets[b];
    if (lo != hi) {
      const bool lo_negative = dhfun::z_function(lo, settings).value < 0.0;
      while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if ((dhfun::z_function(mid, settings).value < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
    const double root = 0.5 * (lo + hi);
    try {
      found[b].push_back(refine_zero(Complex(0.5, root), settings));
    } catch (const ConvergenceError&) {
      found[b].push_back(describe_zero(Complex(0.5, root), settings));
    }
  });
  std::vector<ZeroRecord> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  return merge_zero_records(std::move(all));
}

std::vector<Rect> plan_survey_tiles(const Rect& rect, double cell, double row_offset) {
  if (!rect.valid()) throw DomainError("plan_survey_tiles: empty rectangle");
  if (!(cell > 0.0)) throw DomainError("plan_survey_tiles: cell must be positive");
  constexpr double kSliver = 1e-9;
  std::vector<double> xs{rect.sigma0};
  const long k_lo = static_cast<long>(std::floor((rect.sigma0 - 0.5) / cell - 0.5));
  const long k_hi = static_cast<long>(std::ceil((rect.sigma1 - 0.5) / cell - 0.5));
  for (long k = k_lo; k <= k_hi; ++k) {
    const double e = 0.5 + cell * (static_cast<double>(k) + 0.5);
    if (e > rect.sigma0 + kSliver && e < rect.sigma1 - kSliver) xs.push_back(e);
  }
  xs.push_back(rect.sigma1);

  std::vector<double> ys{rect.t0};
  const double offset = std::fmod(row_offset, cell);
  for (long j = 0;; ++j) {
    const double e = rect.t0 + offset + cell * static_cast<double>(j);
    if (e >= rect.t1 - kSliver) break;
    if (e > rect.t0 + kSliver) ys.push_back(e);
  }
  ys.push_back(rect.t1);

  std::vector<Rect> tiles;
  for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) tiles.push_back({xs[i], xs[i + 1], ys[j], ys[j + 1]});
  }
  return tiles;
}

TileSurvey survey_tile(const Rect& tile, const EvalSettings& settings) {
  TileSurvey out;
  out.tile = tile;
  out.winding = count_zeros_rect(tile, 8, settings, CountOptions{.max_perturbations = 0}).count;
  locate(tile, out.winding, 0, settings, out.zeros);
  return out;
}

Survey survey_zeros(const Rect& rect, const EvalSettings& settings, const ParallelFor& run, double cell) {
  constexpr int kAttempts = 4;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const double row_offset = std::fmod(0.29 * cell * attempt, cell);
    const auto tiles = plan_survey_tiles(rect, cell, row_offset);
    std::vector<TileSurvey> results(tiles.size());
    std::vector<char> hit_boundary(tiles.size(), 0);
    run(tiles.size(), [&](std::size_t k) {
      try {
        results[k] = survey_tile(tiles[k], settings);
      } catch (const BoundaryZeroError&) {
        hit_boundary[k] = 1;
      }
    });
    if (std::any_of(hit_boundary.begin(), hit_boundary.end(), [](char c) { return c != 0; })) continue;

    Survey survey;
    survey.rect = rect;
    survey.cell = cell;
    survey.row_offset = row_offset;
    std::vector<ZeroRecord> all;
    for (const auto& r : results) {
      survey.winding_total += r.winding;
      all.insert(all.end(), r.zeros.begin(), r.zeros.end());
    }
    survey.zeros = merge_zero_records(std::move(all));
    survey.tiles = std::move(results);
    return survey;
  }
  throw BoundaryZeroError("survey_zeros: every tiling offset put a zero on a tile edge");
}

}  // namespace dh::analysis
