#include <gtest/gtest.h>

#include <cmath>

#include "dh/dhfun.hpp"
#include "dh/verify.hpp"
#include "dh/xratio.hpp"
#include "oracles.hpp"

using dh::Complex;
namespace xr = dh::xratio;
using xr::GammaFactor;

namespace {

constexpr double kH = 1e-4;

double fd_t(double (*g)(Complex), Complex s) { return (g(s + Complex(0, kH)) - g(s - Complex(0, kH))) / (2 * kH); }

double log_abs(Complex s) { return xr::log_abs_x(s); }
double gamma_up(Complex s) { return xr::gamma_modulus(s, GammaFactor::upper); }
double gamma_lo(Complex s) { return xr::gamma_modulus(s, GammaFactor::lower); }

void expect_rel(double got, double want, double tol) { EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << got << " vs " << want; }

}  // namespace

TEST(XOf, SpecialValues) {
  EXPECT_LT(std::abs(xr::x_of(0.5).value - 1.0), 1e-14);
  EXPECT_LT(std::abs(xr::x_of(0.0).value - std::sqrt(5.0) / dh::kPi), 1e-14);
  EXPECT_LT(std::abs(xr::x_of(1.0).value - dh::kPi / std::sqrt(5.0)), 1e-14);
}

TEST(XOf, OffAxisAgainstOracleGammaQuotient) {
  const Complex s(0.3, 2.0);
  EXPECT_LT(std::abs(xr::x_of(s).value - oracle::x_ratio(s)), 1e-13);
  EXPECT_LT(std::abs(xr::x_of(s).value - Complex(1.05516403017605965040311718829, 0.298557303762811007062703574662)),
            1e-13);
}

TEST(XOf, LogModulusConsistent) {
  for (const Complex s : {Complex(0.3, 2.0), Complex(-7.0, 30.0), Complex(9.5, -12.0)}) {
    const auto v = xr::x_of(s);
    expect_rel(std::exp(v.log_abs), std::abs(v.value), 1e-12);
  }
}

TEST(XOf, LogModulusLargeHeightNoOverflow) {
  EXPECT_TRUE(std::isfinite(xr::x_of(Complex(-30.0, 1e4)).log_abs));
}

TEST(XOf, ConjugateSymmetry) {
  const Complex s(-2.2, 17.0);
  EXPECT_LT(std::abs(xr::x_of(std::conj(s)).value - std::conj(xr::x_of(s).value)), 1e-12 * std::abs(xr::x_of(s).value));
}

TEST(XOf, ZerosAndPoles) {
  for (int n = 0; n <= 5; ++n) {
    const auto z = xr::x_of(-(2.0 * n + 1.0));
    EXPECT_TRUE(z.zero_flag) << n;
    EXPECT_EQ(z.value, Complex(0.0));
    EXPECT_THROW(xr::x_of(2.0 * n + 2.0), dh::PoleError) << n;
  }
}

TEST(XOf, FunctionalEquationOracle) {
  const Complex s(0.25, 9.0);
  const Complex ratio = dh::dhfun::f_value(s) / dh::dhfun::f_value(1.0 - s);
  EXPECT_LT(std::abs(xr::x_of(s).value - ratio), 1e-12);
}

TEST(Reflection, ListedPairs) {
  EXPECT_LT(xr::reflection_defect({7.0, 0.0}), 1e-13);
  EXPECT_LT(xr::reflection_defect({3.3, 0.4}), 1e-12);
  // Real-axis pair 1/2 +- 5.5 sits exactly on the zero -5 and the pole 6; step off by delta.
  EXPECT_LT(xr::reflection_defect({0.0, 5.5 - 1e-3}), 1e-10);
}

TEST(Reflection, SeededGrid) {
  dh::verify::SeededUniform u(21);
  for (int k = 0; k < 300; ++k) {
    const xr::MirrorPair p{u(-50.0, 50.0), u(-5.0, 5.0)};
    EXPECT_LT(xr::reflection_defect(p), 1e-12);
  }
}

TEST(UnitCircle, CriticalLine) {
  dh::verify::SeededUniform u(22);
  for (int k = 0; k < 1000; ++k) {
    const double t = u(-100.0, 100.0);
    ASSERT_LT(std::abs(std::abs(xr::x_of(Complex(0.5, t)).value) - 1.0), 1e-12) << t;
  }
}

TEST(TrivialZeros, Lists) {
  EXPECT_EQ(xr::trivial_zeros(3), (std::vector<Complex>{-1.0, -3.0, -5.0}));
  EXPECT_EQ(xr::poles(3), (std::vector<Complex>{2.0, 4.0, 6.0}));
}

TEST(TrivialZeros, ReciprocityLimit) {
  EXPECT_LT(xr::zero_pole_reciprocity_defect(2, 1e-3), 1e-2);
  EXPECT_LT(xr::zero_pole_reciprocity_defect(2, 1e-5), 1e-4);
  // Independent evaluation of the same product through the oracle quotient.
  const double d = 1e-3;
  const Complex prod = oracle::x_ratio(-5.0 + d) * oracle::x_ratio(6.0 - d);
  EXPECT_LT(std::abs(prod - 1.0), 1e-2);
}

TEST(DlogAbsXdt, ZeroOnLine) { EXPECT_EQ(xr::dlogabsx_dt(Complex(0.5, 3.0)), 0.0); }

TEST(DlogAbsXdt, PositiveLeftOfLineAbove) { EXPECT_GT(xr::dlogabsx_dt(Complex(0.3, 2.0)), 0.0); }

TEST(DlogAbsXdt, MatchesFiniteDifference) {
  const Complex s(0.3, 2.0);
  expect_rel(xr::dlogabsx_dt(s), fd_t(log_abs, s), 1e-6);
}

TEST(DlogAbsXdt, ScaledFormMatchesModulusDerivative) {
  const Complex s(0.2, 4.0);
  auto absx = [](Complex z) { return std::exp(xr::log_abs_x(z)); };
  const double fd = (absx(s + Complex(0, kH)) - absx(s - Complex(0, kH))) / (2 * kH);
  expect_rel(xr::dabsx_dt(s), fd, 1e-6);
}

TEST(DlogAbsXdt, SignTableAllQuadrants) {
  dh::verify::SeededUniform u(23);
  for (const int qs : {-1, 1}) {
    for (const int qt : {-1, 1}) {
      for (int k = 0; k < 100; ++k) {
        const Complex s(0.5 + qs * u(0.05, 3.0), qt * u(0.1, 40.0));
        const double fd = fd_t(log_abs, s);
        const double want = (0.5 - s.real()) * s.imag() > 0 ? 1.0 : -1.0;
        EXPECT_GT(want * fd, 0.0) << s;
        EXPECT_GT(want * xr::dlogabsx_dt(s), 0.0) << s;
      }
    }
  }
}

TEST(DsigmaLogAbsX, OnRealAxisAtHalf) {
  const double want = -std::log(5.0 / dh::kPi) - oracle::digamma_series(0.75).real();
  EXPECT_NEAR(xr::dsigma_logabsx(0.5), want, 1e-11);
}

TEST(DsigmaLogAbsX, VanishesAtKappaHeight) { EXPECT_LT(std::abs(xr::dsigma_logabsx(Complex(0.5, 1.21164))), 1e-4); }

TEST(DsigmaLogAbsX, MatchesFiniteDifference) {
  const Complex s(0.2, 5.0);
  const double fd = (xr::log_abs_x(s + kH) - xr::log_abs_x(s - kH)) / (2 * kH);
  expect_rel(xr::dsigma_logabsx(s), fd, 1e-7);
}

TEST(GammaModulusDt, ZeroAtRealAxis) {
  EXPECT_EQ(xr::gamma_modulus_dt(Complex(0.3, 0.0), GammaFactor::upper), 0.0);
  EXPECT_EQ(xr::gamma_modulus_dt(Complex(0.3, 0.0), GammaFactor::lower), 0.0);
}

TEST(GammaModulusDt, MatchesFiniteDifference) {
  for (const Complex s : {Complex(0.3, 2.0), Complex(0.3, -2.0), Complex(-2.7, 11.0), Complex(3.6, -0.8)}) {
    expect_rel(xr::gamma_modulus_dt(s, GammaFactor::upper), fd_t(gamma_up, s), 1e-6);
    expect_rel(xr::gamma_modulus_dt(s, GammaFactor::lower), fd_t(gamma_lo, s), 1e-6);
  }
}

TEST(GammaModulusDt, SignsByHalfPlane) {
  EXPECT_GT(xr::gamma_modulus_dt(Complex(0.3, -2.0), GammaFactor::upper), 0.0);
  EXPECT_LT(xr::gamma_modulus_dt(Complex(0.3, 2.0), GammaFactor::upper), 0.0);
  EXPECT_GT(xr::gamma_modulus_dt(Complex(0.3, -2.0), GammaFactor::lower), 0.0);
  EXPECT_LT(xr::gamma_modulus_dt(Complex(0.3, 2.0), GammaFactor::lower), 0.0);
}

TEST(GammaModulus, AgainstOracle) {
  const Complex s(0.3, 2.0);
  expect_rel(gamma_up(s), std::exp(oracle::lgamma(1.0 - 0.5 * s).real()), 1e-13);
  expect_rel(gamma_lo(s), std::exp(oracle::lgamma(0.5 * (1.0 + s)).real()), 1e-13);
}

TEST(Deflated, SignStableAcrossLine) {
  // log|X|/(sigma - 1/2) is continuous through sigma = 1/2.
  const double t = 0.7;
  const double on = xr::deflated_log_abs_x(0.5, t);
  EXPECT_NEAR(on, xr::dsigma_logabsx(Complex(0.5, t)), 1e-12);
  EXPECT_NEAR(xr::deflated_log_abs_x(0.5 + 1e-4, t), on, 1e-6);
  EXPECT_NEAR(xr::deflated_log_abs_x(0.5 - 1e-4, t), on, 1e-6);
  EXPECT_NEAR(xr::deflated_log_abs_x(0.5 + 2e-3, t), xr::log_abs_x(Complex(0.5 + 2e-3, t)) / 2e-3, 1e-12);
}
