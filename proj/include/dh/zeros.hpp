#pragma once

// Zero counting by boundary winding, Newton refinement, critical-line scanning
// and exhaustive rectangle surveys.

#include <vector>

#include "dh/parallel.hpp"
#include "dh/settings.hpp"
#include "dh/types.hpp"

namespace dh::analysis {

/// |sigma - 1/2| below this marks a zero as on the critical line.
inline constexpr double kLineTol = 1e-6;

struct ZeroRecord {
  ComplexPoint location;
  double residual = 0.0;  // |f(location)|
  int iterations = 0;
  ComplexPoint paired_location;  // 1 - location
  double paired_residual = 0.0;  // |f(1 - location)|
  double abs_x_here = 0.0;       // |X(location)|
  bool on_line = false;
  bool within_kappa = false;
  std::vector<ComplexPoint> trace;  // Newton iterates, seed first
};

/// Orders by t, then sigma.
bool record_less(const ZeroRecord& a, const ZeroRecord& b);

struct ZeroCount {
  int count = 0;
  Rect rect_used;      // the contour actually integrated (may be perturbed)
  int samples = 0;
  int perturbations = 0;
};

struct CountOptions {
  /// Retries with the rectangle grown by half a sample step; 0 disables.
  int max_perturbations = 3;
  /// |f| below this on the contour counts as a boundary zero.
  double boundary_guard = 1e-7;
  /// Longest contour step before adaptive refinement.
  double max_base_step = 0.05;
  int sample_budget = 2'000'000;
};

/// Winding number of f around the boundary of `rect`, counter-clockwise.
ZeroCount count_zeros_rect(const Rect& rect, int samples_per_side, const EvalSettings& settings = {},
                           const CountOptions& options = {});

/// Newton iteration with f and f'. DivergedError when an iterate leaves the
/// disk of radius 0.5 around the seed; ConvergenceError after newton_max_iter.
ZeroRecord refine_zero(Complex seed, const EvalSettings& settings = {});

/// Fills the pairing/flag fields of a record located at `z`.
ZeroRecord describe_zero(Complex z, const EvalSettings& settings = {});

/// Sign changes of Z(t) on the grid t0 + k*step, bisected and Newton-polished.
std::vector<ZeroRecord> scan_critical_line(double t0, double t1, double step, const EvalSettings& settings = {},
                                           const ParallelFor& run = serial_for);

/// Tiles used by survey_zeros: columns of width `cell` centred so that
/// sigma = 1/2 lies mid-column, rows of height `cell` starting at t0 + row_offset.
std::vector<Rect> plan_survey_tiles(const Rect& rect, double cell, double row_offset = 0.0);

struct TileSurvey {
  Rect tile;
  int winding = 0;
  std::vector<ZeroRecord> zeros;
};

/// Counts zeros in one tile (no contour perturbation) and refines each one,
/// subdividing left-bottom first when Newton leaves the cell or count > 1.
TileSurvey survey_tile(const Rect& tile, const EvalSettings& settings = {});

struct Survey {
  Rect rect;
  double cell = 0.25;
  double row_offset = 0.0;
  int winding_total = 0;  // sum over tiles
  std::vector<TileSurvey> tiles;
  std::vector<ZeroRecord> zeros;  // distinct records sorted by t, then sigma
};

/// Exhaustive subdivision survey. If a tile edge hits a zero the tiling rows are
/// shifted and the survey restarted (up to 3 times).
Survey survey_zeros(const Rect& rect, const EvalSettings& settings = {}, const ParallelFor& run = serial_for,
                    double cell = 0.25);

/// Deduplicates (distance < 1e-7) and sorts.
std::vector<ZeroRecord> merge_zero_records(std::vector<ZeroRecord> records);

}  // namespace dh::analysis
