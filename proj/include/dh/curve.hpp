#pragma once

// Marching-squares extraction of the level set |X(s)| = 1 and the strip height bound kappa.

#include <vector>

#include "dh/parallel.hpp"
#include "dh/types.hpp"

namespace dh::analysis {

/// Level-set tolerance on |log|X|| for refined vertices.
inline constexpr double kCurveTol = 1e-10;

struct CurvePolyline {
  int component_id = 0;
  std::vector<ComplexPoint> vertices;
  bool closed = false;
  /// True when the window meets sigma = 1/2 and that component was divided out.
  bool excludes_line = false;
};

/// A grid cell containing a zero or pole of X.
struct DegenerateCell {
  int i = 0;
  int j = 0;
  Complex singularity;
  /// The once-subdivided cell showed the same crossing count as its corners.
  bool resolved = true;
};

struct CurveTrace {
  Rect window;
  double step = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<CurvePolyline> components;
  std::vector<DegenerateCell> degenerate_cells;

  [[nodiscard]] std::size_t vertex_count() const;
};

/// Traces |X| = 1 over `window` with cells of side ~step. The critical line is
/// removed by classifying on log|X| / (sigma - 1/2). Rows are sampled through
/// `run`; output is independent of how `run` schedules them.
CurveTrace trace_unit_curve(const Rect& window, double step, const ParallelFor& run = serial_for);

struct KappaResult {
  double kappa = 0.0;           // primary: zoomed curve maximum of |t| in 0 <= sigma <= 1
  double trace_maximum = 0.0;   // same as kappa
  double digamma_root = 0.0;    // Re psi(3/4 + it/2) = ln(pi/5), t > 0
  double negative_branch = 0.0; // minimum t on the traced curve (expected -kappa)
  Complex argmax;               // vertex attaining the maximum
  int zoom_levels = 0;
};

/// Root t > 0 of d/dsigma log|X|(1/2 + it) = 0 by bisection. ConvergenceError
/// if the bracket [0, 4] fails.
double kappa_digamma_root();

/// Both kappa estimates. `run` schedules trace rows.
KappaResult kappa(const ParallelFor& run = serial_for);

}  // namespace dh::analysis
