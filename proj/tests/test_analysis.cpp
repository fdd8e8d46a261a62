#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dh/audit.hpp"
#include "dh/curve.hpp"
#include "dh/dhfun.hpp"
#include "dh/xratio.hpp"
#include "dh/zeros.hpp"

using dh::Complex;
using dh::Rect;
namespace an = dh::analysis;

namespace {

const Complex kOffLine[4] = {{0.808517, 85.699348}, {0.650830, 114.163343}, {0.574356, 166.479306}, {0.724258, 176.702461}};

// Max over a of min over b of |a - b|, brute force.
double directed_hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (const auto& p : a) {
    double best = INFINITY;
    for (const auto& q : b) best = std::min(best, std::abs(p - q));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Complex> vertices(const an::CurveTrace& trace) {
  std::vector<Complex> out;
  for (const auto& c : trace.components)
    for (const auto& v : c.vertices) out.push_back(v.value());
  return out;
}

// Sign changes of Z on a fine grid, an oracle for on-line zero counts.
int z_sign_changes(double t0, double t1, double h) {
  int n = 0;
  double prev = dh::dhfun::z_function(t0).value;
  for (double t = t0 + h; t <= t1; t += h) {
    const double cur = dh::dhfun::z_function(t).value;
    if ((prev < 0) != (cur < 0)) ++n;
    prev = cur;
  }
  return n;
}

}  // namespace

TEST(Curve, StripTraceAttainsKappa) {
  const auto trace = an::trace_unit_curve({0.0, 1.0, -2.0, 2.0}, 0.01);
  double tmax = 0.0;
  for (const auto& c : trace.components) {
    EXPECT_TRUE(c.excludes_line);
    for (const auto& v : c.vertices) {
      tmax = std::max(tmax, std::abs(v.t()));
      EXPECT_LT(std::abs(dh::xratio::log_abs_x(v.value())), an::kCurveTol);
    }
  }
  EXPECT_NEAR(tmax, 1.21164, 1e-3);
}

TEST(Curve, ConsecutiveVerticesWithinOneCell) {
  constexpr double step = 0.01;
  const auto trace = an::trace_unit_curve({0.0, 1.0, -2.0, 2.0}, step);
  for (const auto& c : trace.components) {
    for (std::size_t k = 1; k < c.vertices.size(); ++k) {
      EXPECT_LE(std::abs(c.vertices[k].value() - c.vertices[k - 1].value()), std::sqrt(2.0) * step * (1 + 1e-9));
    }
  }
}

TEST(Curve, FigureWindowIsMirrorSymmetric) {
  constexpr double step = 0.01;
  const auto trace = an::trace_unit_curve({-6.0, 7.0, -4.0, 4.0}, step);
  int closed = 0;
  for (const auto& c : trace.components) closed += c.closed ? 1 : 0;
  EXPECT_GE(closed, 4);
  double mirror_level = 0.0;
  std::vector<Complex> pts = vertices(trace);
  std::vector<Complex> mirrored;
  for (const auto& p : pts) {
    mirrored.emplace_back(1.0 - p.real(), p.imag());
    mirror_level = std::max(mirror_level, std::abs(std::exp(dh::xratio::log_abs_x(mirrored.back())) - 1.0));
  }
  EXPECT_LT(mirror_level, 1e-8);
  // Subsample for the quadratic Hausdorff check.
  std::vector<Complex> a, b;
  for (std::size_t k = 0; k < pts.size(); k += 7) a.push_back(mirrored[k]);
  EXPECT_LE(directed_hausdorff(a, pts), 2 * step);
}

TEST(Kappa, BothMethodsAndQuotedValue) {
  const auto k = an::kappa();
  EXPECT_NEAR(k.kappa, 1.21164, 1e-3);
  EXPECT_NEAR(k.trace_maximum, k.digamma_root, 1e-6);
  EXPECT_NEAR(k.negative_branch, -k.kappa, 1e-6);
  EXPECT_NEAR(an::kappa_digamma_root(), k.digamma_root, 0.0);
  // The root solves d/dsigma log|X| = 0 on the line.
  EXPECT_LT(std::abs(dh::xratio::dsigma_logabsx(Complex(0.5, k.digamma_root))), 1e-10);
}

TEST(Count, RectangleAroundS1) { EXPECT_EQ(an::count_zeros_rect({0.6, 0.95, 85.0, 86.5}, 8).count, 1); }

TEST(Count, EmptyRectangleHasPositiveFloor) {
  EXPECT_EQ(an::count_zeros_rect({0.6, 0.95, 86.5, 88.0}, 8).count, 0);
  double floor = INFINITY;
  for (double s = 0.6; s <= 0.95; s += 0.005)
    for (double t = 86.5; t <= 88.0; t += 0.005) floor = std::min(floor, std::abs(dh::dhfun::f_value(Complex(s, t))));
  EXPECT_GT(floor, 1e-3);
}

TEST(Count, NearRealAxisMatchesLineSignChanges) {
  const int count = an::count_zeros_rect({0.0, 1.0, -0.5, 0.5}, 8).count;
  EXPECT_EQ(count, z_sign_changes(-0.5, 0.5, 1e-3));
}

TEST(Count, WindingAgreesWithLineScanOnStrip) {
  // [0.45, 0.55] x [0, 40] holds only on-line zeros.
  const int count = an::count_zeros_rect({0.45, 0.55, 0.0, 40.0}, 8).count;
  EXPECT_EQ(count, z_sign_changes(0.0, 40.0, 1e-3));
}

TEST(Count, BoundaryZeroIsPerturbedThenReported) {
  const auto s1 = an::refine_zero(kOffLine[0]);
  const double t = s1.location.t();
  const Rect r{0.6, 0.95, t, t + 1.0};  // bottom edge passes through s1
  const auto counted = an::count_zeros_rect(r, 8);
  EXPECT_GE(counted.perturbations, 1);
  EXPECT_EQ(counted.count, 1);
  EXPECT_THROW(an::count_zeros_rect(r, 8, {}, {.max_perturbations = 0}), dh::BoundaryZeroError);
}

TEST(Refine, ReproducesQuotedOffLineZeros) {
  for (const auto& q : kOffLine) {
    const auto r = an::refine_zero(Complex(std::round(q.real() * 100) / 100, std::round(q.imag() * 100) / 100));
    EXPECT_LT(std::abs(r.location.value() - q), 1e-4) << q;
    EXPECT_LT(r.residual, 1e-8);
    EXPECT_LT(r.paired_residual, 1e-6);
    EXPECT_FALSE(r.on_line);
    EXPECT_FALSE(r.within_kappa);
    EXPECT_EQ(r.paired_location.value(), 1.0 - r.location.value());
    EXPECT_GT(r.abs_x_here, 0.0);
    EXPECT_NE(std::abs(r.abs_x_here - 1.0), 0.0);
    EXPECT_EQ(r.trace.size(), static_cast<std::size_t>(r.iterations) + 1);
  }
}

TEST(Refine, DivergesFromFarSeed) { EXPECT_THROW(an::refine_zero(3.0), dh::DivergedError); }

TEST(Refine, IterationCapRaisesConvergenceError) {
  dh::EvalSettings strict;
  strict.newton_tol = 1e-300;
  strict.newton_max_iter = 2;
  EXPECT_THROW(an::refine_zero(Complex(0.8, 85.7), strict), dh::ConvergenceError);
}

TEST(Scan, UnitIntervalIsEmptyLikeTheCount) {
  EXPECT_TRUE(an::scan_critical_line(0.0, 1.0, 0.05).empty());
  EXPECT_EQ(an::count_zeros_rect({0.0, 1.0, 0.0, 1.0}, 8).count, 0);
}

TEST(Scan, RecordsOnUnitCircleAndGridIndependent) {
  const auto a = an::scan_critical_line(0.0, 40.0, 0.05);
  const auto b = an::scan_critical_line(0.0, 40.0, 0.025);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_GT(a.size(), 0u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_TRUE(a[k].on_line);
    EXPECT_LT(std::abs(a[k].abs_x_here - 1.0), 1e-10);
    EXPECT_LT(std::abs(a[k].location.value() - b[k].location.value()), 1e-9);
    if (k > 0) EXPECT_TRUE(an::record_less(a[k - 1], a[k]));
  }
  EXPECT_EQ(static_cast<int>(a.size()), z_sign_changes(0.0, 40.0, 1e-3));
}

TEST(Survey, TilesCoverRectangleWithLineMidColumn) {
  const Rect r{0.0, 1.0, 0.0, 2.0};
  const auto tiles = an::plan_survey_tiles(r, 0.25);
  double area = 0.0;
  bool line_interior = false;
  for (const auto& t : tiles) {
    area += t.width() * t.height();
    if (t.sigma0 < 0.5 && t.sigma1 > 0.5) line_interior = std::abs(0.5 * (t.sigma0 + t.sigma1) - 0.5) < 1e-12;
  }
  EXPECT_NEAR(area, 2.0, 1e-12);
  EXPECT_TRUE(line_interior);
  EXPECT_EQ(tiles.size(), 5u * 8u);
  EXPECT_EQ(an::plan_survey_tiles(r, 0.25, 0.1).front().t1, 0.1);
}

TEST(Survey, WindingEqualsRecordsOnStrip) {
  const auto survey = an::survey_zeros({0.0, 1.0, 0.0, 120.0});
  EXPECT_EQ(survey.winding_total, static_cast<int>(survey.zeros.size()));
  int off = 0;
  for (const auto& z : survey.zeros) {
    EXPECT_LT(z.paired_residual, 1e-6);
    off += z.on_line ? 0 : 1;
  }
  // s1 and s2 with their mirror images 1 - conj(s).
  EXPECT_EQ(off, 4);
  for (const auto& tile : survey.tiles) EXPECT_EQ(tile.winding, static_cast<int>(tile.zeros.size()));
}

TEST(Survey, ThreadedMatchesSerial) {
  const Rect r{0.0, 1.0, 80.0, 120.0};
  const auto a = an::survey_zeros(r);
  const auto b = an::survey_zeros(r, {}, dh::threaded_for(4));
  ASSERT_EQ(a.zeros.size(), b.zeros.size());
  for (std::size_t k = 0; k < a.zeros.size(); ++k) EXPECT_EQ(a.zeros[k].location.value(), b.zeros[k].location.value());
}

TEST(Merge, DeduplicatesAndSorts) {
  const auto z1 = an::describe_zero(Complex(0.5, 20.0));
  const auto z2 = an::describe_zero(Complex(0.5, 10.0));
  const auto z3 = an::describe_zero(Complex(0.5 + 1e-9, 20.0));
  const auto merged = an::merge_zero_records({z1, z2, z3});
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0].location.t(), 10.0);
}

TEST(LimitProbe, OnLineZeroStaysOnUnitCircle) {
  const auto line = an::scan_critical_line(0.0, 30.0, 0.05);
  ASSERT_FALSE(line.empty());
  for (const auto& z : line) {
    for (const auto& p : an::limit_probe(z, an::ProbeDirection::along_t, an::default_probe_radii())) {
      EXPECT_LT(std::abs(p.abs_x_plus - 1.0), 1e-9);
      EXPECT_LT(std::abs(p.abs_x_minus - 1.0), 1e-9);
    }
  }
}

TEST(LimitProbe, OffLineZeroConvergesToDirectRatio) {
  const auto s1 = an::refine_zero(kOffLine[0]);
  const double direct = std::abs(dh::xratio::x_of(s1.location.value()).value);
  const auto probe = an::limit_probe(s1, an::ProbeDirection::along_t, an::default_probe_radii());
  double prev = INFINITY;
  for (const auto& p : probe) {
    const double dev = std::abs(p.abs_x_plus - direct);
    EXPECT_LT(dev, prev);
    prev = dev;
  }
  EXPECT_LT(prev, 1e-5);
  EXPECT_GT(std::abs(direct - 1.0), 0.5);
}

TEST(LimitProbe, LargestRadiusFollowsMonotoneSign) {
  // Right of the line and above the axis, |X| decreases in t.
  const auto s1 = an::refine_zero(kOffLine[0]);
  const double direct = std::abs(dh::xratio::x_of(s1.location.value()).value);
  const auto p = an::limit_probe(s1, an::ProbeDirection::along_t, {0.5}).front();
  EXPECT_LT(p.abs_x_plus, direct);
  EXPECT_GT(p.abs_x_minus, direct);
}

TEST(LimitProbe, RejectsUnrefinedRecord) {
  const auto rough = an::describe_zero(Complex(0.8, 85.7));
  EXPECT_THROW(an::limit_probe(rough, an::ProbeDirection::along_t, {0.1}), dh::DomainError);
}

TEST(Audit, ReportsEveryClaimInOrder) {
  const auto s1 = an::refine_zero(kOffLine[0]);
  const auto onl = an::scan_critical_line(10.0, 20.0, 0.05);
  std::vector<an::ZeroRecord> zeros = onl;
  zeros.push_back(s1);
  const auto reports = an::audit_claims(zeros);
  ASSERT_EQ(reports.size(), 10u);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    EXPECT_EQ(static_cast<std::size_t>(reports[k].claim_id), k);
    EXPECT_FALSE(reports[k].evidence.empty()) << an::claim_name(reports[k].claim_id);
    EXPECT_FALSE(reports[k].verdict_note.empty());
    for (const auto& e : reports[k].evidence) EXPECT_FALSE(e.inputs.empty());
  }
}

TEST(Audit, S1MeasurementsSideBySide) {
  const auto s1 = an::refine_zero(kOffLine[0]);
  const auto reports = an::audit_claims({s1});
  auto value = [](const an::Evidence& e, const std::string& name) {
    for (const auto& m : e.measured)
      if (m.name == name) return m.value;
    ADD_FAILURE() << "missing " << name;
    return std::nan("");
  };
  const auto& lemma2 = reports[static_cast<int>(an::ClaimId::Lemma2)].evidence.front();
  EXPECT_EQ(value(lemma2, "within_kappa"), 0.0);
  EXPECT_NEAR(value(lemma2, "abs_t"), 85.699, 1e-3);
  EXPECT_NEAR(value(lemma2, "kappa"), 1.2116, 1e-4);
  const auto& puzzle1 = reports[static_cast<int>(an::ClaimId::Puzzle1)].evidence.front();
  EXPECT_LT(value(puzzle1, "abs_f_s"), 1e-6);
  EXPECT_LT(value(puzzle1, "abs_f_1_minus_s"), 1e-6);
}

TEST(Audit, CorollaryOverOnLineZeros) {
  const auto reports = an::audit_claims(an::scan_critical_line(0.0, 60.0, 0.05));
  const auto& c = reports[static_cast<int>(an::ClaimId::Corollary1)];
  for (const auto& e : c.evidence) {
    for (const auto& m : e.measured) {
      if (m.name == "abs_x_minus_1" || m.name == "max_abs_x_minus_1") EXPECT_LT(m.value, 1e-10);
    }
  }
}

TEST(Audit, InequalityExpressionVanishesAtZero) {
  const auto s1 = an::refine_zero(kOffLine[0]);
  EXPECT_LT(std::abs(an::lemma3_inequality(s1.location.value())), 1e-10);
  EXPECT_NE(an::lemma3_inequality(s1.location.value() + Complex(0.0, 0.1)), 0.0);
}
