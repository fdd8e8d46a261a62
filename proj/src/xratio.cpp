#include "dh/xratio.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "dh/specfun.hpp"

namespace dh::xratio {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_integer(double x) { return x == std::floor(x); }

int default_terms(Complex s) {
  return std::max(50, static_cast<int>(std::ceil(10.0 * (std::abs(s.imag()) + std::abs(s.real())))));
}

// sum_{m > n_max} g(m) for g(x) = 1/((2x + b)^2 + t^2): the integral over
// [n_max + 1/2, inf) plus the first midpoint correction g'(n_max + 1/2)/24.
double tail_integral(int n_max, double b, double t) {
  const double lower = 2.0 * n_max + 1.0 + b;
  const double at = std::abs(t);
  const double q = lower * lower + t * t;
  const double correction = lower / (6.0 * q * q);
  if (at == 0.0) return 1.0 / (2.0 * lower) - correction;
  return std::atan2(at, lower) / (2.0 * at) - correction;
}

// sum_{m >= 1} 1 / ((2m + b)^2 + t^2), truncated at n_max plus the tail integral.
double shifted_sum(double b, double t, int n_max) {
  double acc = 0.0;
  for (int m = n_max; m >= 1; --m) {
    const double u = 2.0 * m + b;
    acc += 1.0 / (u * u + t * t);
  }
  return acc + tail_integral(n_max, b, t);
}

}  // namespace

bool is_trivial_zero(Complex s) {
  const double x = s.real();
  return s.imag() == 0.0 && x <= -1.0 && is_integer(x) && std::fmod(-x, 2.0) == 1.0;
}

bool is_pole(Complex s) {
  const double x = s.real();
  return s.imag() == 0.0 && x >= 2.0 && is_integer(x) && std::fmod(x, 2.0) == 0.0;
}

Complex log_x(Complex s) {
  require_finite(s, "log_x");
  if (is_pole(s)) throw PoleError("X has a pole at s = " + std::to_string(s.real()), s);
  if (is_trivial_zero(s)) throw PoleError("log X is singular at the zero s = " + std::to_string(s.real()), s);
  return (0.5 - s) * kLogFiveOverPi + specfun::lgamma(1.0 - 0.5 * s) - specfun::lgamma(0.5 * (1.0 + s));
}

RatioValue x_of(Complex s) {
  require_finite(s, "x_of");
  if (is_pole(s)) throw PoleError("X has a pole at s = " + std::to_string(s.real()), s);
  if (is_trivial_zero(s)) {
    return RatioValue{s, Complex(0.0), -kInf, std::numeric_limits<double>::quiet_NaN(), true};
  }
  const Complex lx = log_x(s);
  return RatioValue{s, std::exp(lx), lx.real(), lx.imag(), false};
}

double log_abs_x(Complex s) {
  if (is_pole(s)) return kInf;
  if (is_trivial_zero(s)) return -kInf;
  return log_x(s).real();
}

double reflection_defect(const MirrorPair& pair) {
  const Complex sp = pair.s_plus();
  const Complex sm = pair.s_minus();
  const Complex a = log_x(sp) + log_x(std::conj(sm));
  const Complex b = log_x(sm) + log_x(std::conj(sp));
  return std::max(std::abs(specfun::expm1(a)), std::abs(specfun::expm1(b)));
}

std::vector<Complex> trivial_zeros(int count) {
  if (count < 1) throw DomainError("trivial_zeros: count must be >= 1");
  std::vector<Complex> out;
  for (int n = 0; n < count; ++n) out.emplace_back(-(2.0 * n + 1.0), 0.0);
  return out;
}

std::vector<Complex> poles(int count) {
  if (count < 1) throw DomainError("poles: count must be >= 1");
  std::vector<Complex> out;
  for (int n = 0; n < count; ++n) out.emplace_back(2.0 * n + 2.0, 0.0);
  return out;
}

double zero_pole_reciprocity_defect(int n, double delta) {
  const Complex near_zero(-(2.0 * n + 1.0) + delta, 0.0);
  const Complex near_pole(2.0 * n + 2.0 - delta, 0.0);
  return std::abs(specfun::expm1(log_x(near_zero) + log_x(near_pole)));
}

double dlogabsx_dt(Complex s, int n_max) {
  require_finite(s, "dlogabsx_dt");
  const double sigma = s.real();
  const double t = s.imag();
  if (n_max <= 0) n_max = default_terms(s);
  const double c = 8.0 * t * (0.5 - sigma);
  if (c == 0.0) return 0.0;
  double acc = 0.0;
  for (int n = n_max; n >= 1; --n) {
    const double u = 2.0 * n + sigma - 1.0;
    const double v = 2.0 * n - sigma;
    acc += (n - 0.25) / ((u * u + t * t) * (v * v + t * t));
  }
  const double tail = t * (tail_integral(n_max, sigma - 1.0, t) - tail_integral(n_max, -sigma, t));
  return c * acc + tail;
}

double dabsx_dt(Complex s, int n_max) {
  const RatioValue x = x_of(s);
  if (x.zero_flag) return 0.0;
  return std::exp(x.log_abs) * dlogabsx_dt(s, n_max);
}

double dsigma_logabsx(Complex s) {
  require_finite(s, "dsigma_logabsx");
  const Complex psi_sum = specfun::digamma(1.0 - 0.5 * s) + specfun::digamma(0.5 * (1.0 + s));
  return -kLogFiveOverPi - 0.5 * psi_sum.real();
}

double gamma_modulus(Complex s, GammaFactor which) {
  const Complex z = which == GammaFactor::upper ? 1.0 - 0.5 * s : 0.5 * (1.0 + s);
  return std::exp(specfun::lgamma(z).real());
}

double gamma_modulus_dt(Complex s, GammaFactor which, int n_max) {
  require_finite(s, "gamma_modulus_dt");
  const double sigma = s.real();
  const double t = s.imag();
  if (n_max <= 0) n_max = default_terms(s);
  if (t == 0.0) return 0.0;
  // upper: |sigma + it - 2n|^2 = (2n - sigma)^2 + t^2; lower: (2n + sigma - 1)^2 + t^2
  const double b = which == GammaFactor::upper ? -sigma : sigma - 1.0;
  return -t * gamma_modulus(s, which) * shifted_sum(b, t, n_max);
}

double deflated_log_abs_x(double sigma, double t) {
  const double u = sigma - 0.5;
  const Complex s(sigma, t);
  if (is_pole(s)) return kInf;
  if (is_trivial_zero(s)) return kInf;  // -inf / (sigma - 1/2) with sigma < 1/2
  constexpr double kBand = 1e-3;
  if (std::abs(u) >= kBand) return log_x(s).real() / u;
  // log|X| is odd in u, so log|X|/u = int_0^1 d_sigma log|X|(1/2 + u x) dx.
  // Four-point Gauss-Legendre on [0, 1].
  static constexpr std::array<double, 4> kNodes = {0.069431844202973712, 0.33000947820757187,
                                                   0.66999052179242813, 0.93056815579702629};
  static constexpr std::array<double, 4> kWeights = {0.17392742256872693, 0.32607257743127307,
                                                     0.32607257743127307, 0.17392742256872693};
  double acc = 0.0;
  for (std::size_t i = 0; i < kNodes.size(); ++i) {
    acc += kWeights[i] * dsigma_logabsx(Complex(0.5 + u * kNodes[i], t));
  }
  return acc;
}

}  // namespace dh::xratio
