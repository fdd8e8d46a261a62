#include "dh/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>

#include "dh/specfun.hpp"
#include "dh/xratio.hpp"

namespace dh::analysis {
namespace {

using EdgeKey = std::uint64_t;

struct Grid {
  Rect window;
  int nx = 0;
  int ny = 0;

  [[nodiscard]] double sigma(int i) const { return window.sigma0 + window.width() * i / nx; }
  [[nodiscard]] double t(int j) const { return window.t0 + window.height() * j / ny; }
  [[nodiscard]] std::size_t node(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx + 1) + static_cast<std::size_t>(i);
  }
  [[nodiscard]] EdgeKey horizontal(int i, int j) const {
    return (static_cast<EdgeKey>(j) * static_cast<EdgeKey>(nx) + static_cast<EdgeKey>(i)) * 2u;
  }
  [[nodiscard]] EdgeKey vertical(int i, int j) const {
    return (static_cast<EdgeKey>(j) * static_cast<EdgeKey>(nx + 1) + static_cast<EdgeKey>(i)) * 2u + 1u;
  }
};

bool positive(double h) { return h > 0.0; }

// Bisection of the deflated level function along a grid edge.
template <typename Eval>
double bisect_edge(double lo, double hi, bool lo_positive, Eval&& eval) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (positive(eval(mid)) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

int grid_cells(double length, double step) {
  return std::max(1, static_cast<int>(std::ceil(length / step - 1e-9)));
}

// Segment table: pairs of cell edges (0 bottom, 1 right, 2 top, 3 left).
// Saddles (5, 10) are resolved by the cell centre.
int segments_for(int index, bool centre_positive, std::array<std::array<int, 2>, 2>& out) {
  switch (index) {
    case 1: out[0] = {3, 0}; return 1;
    case 2: out[0] = {0, 1}; return 1;
    case 3: out[0] = {3, 1}; return 1;
    case 4: out[0] = {1, 2}; return 1;
    case 5:
      if (centre_positive) {
        out[0] = {0, 1};
        out[1] = {2, 3};
      } else {
        out[0] = {3, 0};
        out[1] = {1, 2};
      }
      return 2;
    case 6: out[0] = {0, 2}; return 1;
    case 7: out[0] = {3, 2}; return 1;
    case 8: out[0] = {2, 3}; return 1;
    case 9: out[0] = {0, 2}; return 1;
    case 10:
      if (centre_positive) {
        out[0] = {3, 0};
        out[1] = {1, 2};
      } else {
        out[0] = {0, 1};
        out[1] = {2, 3};
      }
      return 2;
    case 11: out[0] = {1, 2}; return 1;
    case 12: out[0] = {1, 3}; return 1;
    case 13: out[0] = {0, 1}; return 1;
    case 14: out[0] = {3, 0}; return 1;
    default: return 0;
  }
}

int boundary_sign_changes(const std::vector<double>& ring) {
  int changes = 0;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    if (positive(ring[k]) != positive(ring[(k + 1) % ring.size()])) ++changes;
  }
  return changes;
}

std::vector<Complex> singularities_in(const Rect& w) {
  std::vector<Complex> out;
  for (double x = std::ceil(w.sigma0); x <= w.sigma1; x += 1.0) {
    const Complex s(x, 0.0);
    if (w.t0 <= 0.0 && w.t1 >= 0.0 && (xratio::is_pole(s) || xratio::is_trivial_zero(s))) {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

std::size_t CurveTrace::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.vertices.size();
  return n;
}

CurveTrace trace_unit_curve(const Rect& window, double step, const ParallelFor& run) {
  if (!window.valid()) throw DomainError("trace_unit_curve: empty window");
  if (!(step > 0.0)) throw DomainError("trace_unit_curve: step must be positive");

  Grid grid{window, grid_cells(window.width(), step), grid_cells(window.height(), step)};
  const int nx = grid.nx;
  const int ny = grid.ny;

  std::vector<double> values(static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1));
  run(static_cast<std::size_t>(ny + 1), [&](std::size_t row) {
    const int j = static_cast<int>(row);
    const double t = grid.t(j);
    for (int i = 0; i <= nx; ++i) values[grid.node(i, j)] = xratio::deflated_log_abs_x(grid.sigma(i), t);
  });

  // Edge crossings, refined by bisection. Indexed by row so rows run independently.
  std::vector<std::optional<double>> h_cross(static_cast<std::size_t>(nx) * (ny + 1));
  std::vector<std::optional<double>> v_cross(static_cast<std::size_t>(nx + 1) * ny);
  run(static_cast<std::size_t>(ny + 1), [&](std::size_t row) {
    const int j = static_cast<int>(row);
    const double t = grid.t(j);
    for (int i = 0; i < nx; ++i) {
      const bool pa = positive(values[grid.node(i, j)]);
      if (pa != positive(values[grid.node(i + 1, j)])) {
        h_cross[static_cast<std::size_t>(j) * nx + i] = bisect_edge(
            grid.sigma(i), grid.sigma(i + 1), pa, [t](double x) { return xratio::deflated_log_abs_x(x, t); });
      }
    }
    if (j == ny) return;
    for (int i = 0; i <= nx; ++i) {
      const bool pa = positive(values[grid.node(i, j)]);
      if (pa != positive(values[grid.node(i, j + 1)])) {
        const double x = grid.sigma(i);
        v_cross[static_cast<std::size_t>(j) * (nx + 1) + i] = bisect_edge(
            grid.t(j), grid.t(j + 1), pa, [x](double y) { return xratio::deflated_log_abs_x(x, y); });
      }
    }
  });

  auto crossing_point = [&](EdgeKey key) -> Complex {
    const auto idx = static_cast<std::size_t>(key / 2u);
    if (key % 2u == 0u) {
      const int j = static_cast<int>(idx / static_cast<std::size_t>(nx));
      return {*h_cross[idx], grid.t(j)};
    }
    const int i = static_cast<int>(idx % static_cast<std::size_t>(nx + 1));
    return {grid.sigma(i), *v_cross[idx]};
  };

  // Cell segments, one list per row, concatenated in row order.
  std::vector<std::vector<std::array<EdgeKey, 2>>> row_segments(static_cast<std::size_t>(ny));
  run(static_cast<std::size_t>(ny), [&](std::size_t row) {
    const int j = static_cast<int>(row);
    auto& segs = row_segments[row];
    for (int i = 0; i < nx; ++i) {
      const int index = (positive(values[grid.node(i, j)]) ? 1 : 0) |
                        (positive(values[grid.node(i + 1, j)]) ? 2 : 0) |
                        (positive(values[grid.node(i + 1, j + 1)]) ? 4 : 0) |
                        (positive(values[grid.node(i, j + 1)]) ? 8 : 0);
      if (index == 0 || index == 15) continue;
      bool centre_positive = false;
      if (index == 5 || index == 10) {
        centre_positive = positive(xratio::deflated_log_abs_x(0.5 * (grid.sigma(i) + grid.sigma(i + 1)),
                                                             0.5 * (grid.t(j) + grid.t(j + 1))));
      }
      const std::array<EdgeKey, 4> edges = {grid.horizontal(i, j), grid.vertical(i + 1, j),
                                            grid.horizontal(i, j + 1), grid.vertical(i, j)};
      std::array<std::array<int, 2>, 2> pairs{};
      const int n = segments_for(index, centre_positive, pairs);
      for (int k = 0; k < n; ++k) segs.push_back({edges[pairs[k][0]], edges[pairs[k][1]]});
    }
  });

  std::vector<std::array<EdgeKey, 2>> segments;
  for (auto& r : row_segments) segments.insert(segments.end(), r.begin(), r.end());

  std::map<EdgeKey, std::vector<std::size_t>> incident;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    incident[segments[k][0]].push_back(k);
    incident[segments[k][1]].push_back(k);
  }

  CurveTrace trace;
  trace.window = window;
  trace.step = step;
  trace.nx = nx;
  trace.ny = ny;
  const bool meets_line = window.sigma0 <= 0.5 && window.sigma1 >= 0.5;

  std::vector<bool> used(segments.size(), false);
  auto walk = [&](EdgeKey start) {
    CurvePolyline poly;
    poly.component_id = static_cast<int>(trace.components.size());
    poly.excludes_line = meets_line;
    EdgeKey node = start;
    poly.vertices.emplace_back(crossing_point(node));
    for (;;) {
      std::optional<std::size_t> next;
      for (std::size_t k : incident[node]) {
        if (!used[k]) {
          next = k;
          break;
        }
      }
      if (!next) break;
      used[*next] = true;
      node = segments[*next][0] == node ? segments[*next][1] : segments[*next][0];
      if (node == start) {
        poly.closed = true;
        break;
      }
      poly.vertices.emplace_back(crossing_point(node));
    }
    trace.components.push_back(std::move(poly));
  };

  for (const auto& [key, segs] : incident) {
    if (segs.size() == 1 && !used[segs.front()]) walk(key);
  }
  for (const auto& [key, segs] : incident) {
    for (std::size_t k : segs) {
      if (!used[k]) walk(key);
    }
  }

  // Cells touching a zero or pole of X: subdivide once and compare crossing counts.
  for (const Complex sing : singularities_in(window)) {
    const double fi = (sing.real() - window.sigma0) / window.width() * nx;
    const double fj = (0.0 - window.t0) / window.height() * ny;
    const int i_lo = std::clamp(static_cast<int>(std::ceil(fi)) - 1, 0, nx - 1);
    const int i_hi = std::clamp(static_cast<int>(std::floor(fi)), 0, nx - 1);
    const int j_lo = std::clamp(static_cast<int>(std::ceil(fj)) - 1, 0, ny - 1);
    const int j_hi = std::clamp(static_cast<int>(std::floor(fj)), 0, ny - 1);
    for (int j = j_lo; j <= j_hi; ++j) {
      for (int i = i_lo; i <= i_hi; ++i) {
        const double xs[3] = {grid.sigma(i), 0.5 * (grid.sigma(i) + grid.sigma(i + 1)), grid.sigma(i + 1)};
        const double ys[3] = {grid.t(j), 0.5 * (grid.t(j) + grid.t(j + 1)), grid.t(j + 1)};
        const std::vector<double> corners = {values[grid.node(i, j)], values[grid.node(i + 1, j)],
                                             values[grid.node(i + 1, j + 1)], values[grid.node(i, j + 1)]};
        const std::array<std::pair<int, int>, 8> ring_idx = {
            {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};
        std::vector<double> ring;
        for (const auto& [a, b] : ring_idx) ring.push_back(xratio::deflated_log_abs_x(xs[a], ys[b]));
        const bool resolved = boundary_sign_changes(ring) == boundary_sign_changes(corners);
        trace.degenerate_cells.push_back(DegenerateCell{i, j, sing, resolved});
      }
    }
  }
  return trace;
}

double kappa_digamma_root() {
  const double target = std::log(kPi / 5.0);
  auto g = [target](double t) { return target - specfun::digamma(Complex(0.75, 0.5 * t)).real(); };
  double lo = 0.0;
  double hi = 4.0;
  const bool lo_positive = g(lo) > 0.0;
  if (lo_positive == (g(hi) > 0.0)) throw ConvergenceError("kappa: digamma bracket [0, 4] has no sign change");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((g(mid) > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// Largest sign * t over the traced vertices, zoomed around the extremum until
// the cell side reaches final_step.
std::pair<double, Complex> zoomed_extremum(const CurveTrace& coarse, double sign, double final_step,
                                           const ParallelFor& run, int& levels) {
  double best_value = -std::numeric_limits<double>::infinity();
  Complex best;
  auto scan = [&](const CurveTrace& trace) {
    for (const auto& c : trace.components) {
      for (const auto& v : c.vertices) {
        if (sign * v.t() > best_value) {
          best_value = sign * v.t();
          best = v.value();
        }
      }
    }
  };
  scan(coarse);
  if (!std::isfinite(best_value)) throw ConvergenceError("kappa: no curve found in the strip");
  double step = coarse.step;
  levels = 0;
  while (step > final_step * 1.0001) {
    step *= 0.1;
    const double half = 10.0 * step;
    const Rect zoom{std::max(0.0, best.real() - half), std::min(1.0, best.real() + half), best.imag() - half,
                    best.imag() + half};
    scan(trace_unit_curve(zoom, step, run));
    ++levels;
  }
  return {sign * best_value, best};
}

}  // namespace

KappaResult kappa(const ParallelFor& run) {
  constexpr double kCoarseStep = 0.01;
  constexpr double kFinalStep = 1e-5;
  const Rect strip{0.0, 1.0, -2.0, 2.0};

  KappaResult result;
  const CurveTrace coarse = trace_unit_curve(strip, kCoarseStep, run);
  int levels = 0;
  const auto [t_max, argmax] = zoomed_extremum(coarse, 1.0, kFinalStep, run, levels);
  const auto [t_min, argmin] = zoomed_extremum(coarse, -1.0, kFinalStep, run, levels);
  result.kappa = t_max;
  result.trace_maximum = t_max;
  result.argmax = argmax;
  result.negative_branch = t_min;
  result.zoom_levels = levels;
  result.digamma_root = kappa_digamma_root();
  return result;
}

}  // namespace dh::analysis
