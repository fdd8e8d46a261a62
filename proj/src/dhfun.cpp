#include "dh/dhfun.hpp"

#include <cmath>
#include <limits>

#include "dh/specfun.hpp"
#include "dh/xratio.hpp"

namespace dh::dhfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLn5 = std::log(5.0);

CoefficientTable make_table() {
  const double sqrt5 = std::sqrt(5.0);
  const double xi = (std::sqrt(10.0 - 2.0 * sqrt5) - 2.0) / (sqrt5 - 1.0);
  return CoefficientTable{xi, {0.0, 1.0, xi, -xi, -1.0}};
}

struct Combination {
  Complex value;      // sum_r a(r) zeta_reg(s, r/5)
  double magnitude;   // sum_r |a(r) zeta_reg(s, r/5)|
};

// The 1/(s-1) parts cancel identically because sum_r a(r) = 0; pair them so
// the cancelling terms meet first.
Combination kernel(Complex s, const EvalSettings& settings) {
  const auto& c = coefficients();
  std::array<Complex, 4> reg;
  if (s.real() < 0.0) {
    const auto all = specfun::hurwitz_zeta_regular_rational(s, 5, settings);
    for (int r = 0; r < 4; ++r) reg[r] = all[r];
  } else {
    for (int r = 1; r <= 4; ++r) reg[r - 1] = specfun::hurwitz_zeta_regular(s, r / 5.0, settings);
  }
  const Complex value = (reg[0] - reg[3]) + c.xi * (reg[1] - reg[2]);
  const double magnitude =
      std::abs(reg[0]) + std::abs(reg[3]) + c.xi * (std::abs(reg[1]) + std::abs(reg[2]));
  return {value, magnitude};
}

}  // namespace

const CoefficientTable& coefficients() {
  static const CoefficientTable table = make_table();
  return table;
}

FnValue f_series(Complex s, long n_terms) {
  require_finite(s, "f_series");
  if (!(s.real() > 1.0)) throw DomainError("f_series: requires Re s > 1");
  if (n_terms < 1) throw DomainError("f_series: n_terms must be positive");
  const auto& c = coefficients();
  Complex acc = 0.0;
  // Smallest terms first.
  for (long n = n_terms; n >= 1; --n) {
    const double an = c(n);
    if (an == 0.0) continue;
    acc += an * std::exp(-s * std::log(static_cast<double>(n)));
  }
  const double sigma = s.real();
  const double tail = 4.0 * std::pow(static_cast<double>(n_terms), 1.0 - sigma) / (sigma - 1.0);
  return FnValue{s, acc, tail, false};
}

FnValue f(Complex s, const EvalSettings& settings) {
  require_finite(s, "f");
  const Combination k = kernel(s, settings);
  const Complex scale = specfun::cpow(5.0, -s);
  const Complex value = scale * k.value;
  const int n_split = specfun::hurwitz_split_point(s, settings);
  const double err = 16.0 * kEps * std::sqrt(static_cast<double>(n_split)) * std::abs(scale) * k.magnitude;
  bool warn = false;
  if (std::abs(s - 1.0) < 0.1 && std::abs(k.value) > 0.0) {
    warn = kEps * k.magnitude / std::abs(k.value) > 1e6 * settings.rel_tol;
  }
  return FnValue{s, value, err, warn};
}

Complex f_value(Complex s, const EvalSettings& settings) { return f(s, settings).value; }

Complex f_prime(Complex s, const EvalSettings& settings) {
  require_finite(s, "f_prime");
  const double h = settings.fd_step;
  auto central = [&](double step) {
    return (kernel(s + step, settings).value - kernel(s - step, settings).value) / (2.0 * step);
  };
  const Complex d_half = central(0.5 * h);
  const Complex d_full = central(h);
  const Complex dkernel = (4.0 * d_half - d_full) / 3.0;
  const Complex value = kernel(s, settings).value;
  return specfun::cpow(5.0, -s) * (dkernel - kLn5 * value);
}

double functional_eq_residual(Complex s, const EvalSettings& settings) {
  require_finite(s, "functional_eq_residual");
  if (xratio::is_pole(s)) throw PoleError("functional_eq_residual: X has a pole here", s);
  const Complex fs = f_value(s, settings);
  const Complex fr = f_value(1.0 - s, settings);
  const auto x = xratio::x_of(s);
  const Complex rhs = x.zero_flag ? Complex(0.0) : x.value * fr;
  return std::abs(fs - rhs) / (std::abs(fs) + std::abs(fr) + 1e-300);
}

double theta(double t) {
  // X(1/2 + it) = exp(i theta) with |X| = 1 on the line.
  return xratio::log_x(Complex(0.5, t)).imag();
}

ZValue z_function(double t, const EvalSettings& settings) {
  if (!std::isfinite(t)) throw DomainError("z_function: t must be finite");
  const double th = theta(t);
  const Complex rotated = std::polar(1.0, -0.5 * th) * f_value(Complex(0.5, t), settings);
  const bool warn = std::abs(rotated.imag()) > 1e-8 * (1.0 + std::abs(rotated.real()));
  return ZValue{rotated.real(), rotated.imag(), th, warn};
}

PQValue pq(double sigma, double t, const EvalSettings& settings) {
  const Complex s(sigma, t);
  require_finite(s, "pq");
  const Complex p = f_value(s, settings) * f_value(std::conj(s), settings);
  const Complex q = f_value(1.0 - s, settings) * f_value(1.0 - std::conj(s), settings);
  const bool warn = std::abs(p.imag()) > 1e-10 * std::abs(p.real()) + 1e-300 ||
                    std::abs(q.imag()) > 1e-10 * std::abs(q.real()) + 1e-300;
  return PQValue{p.real(), q.real(), p.imag(), q.imag(), warn};
}

}  // namespace dh::dhfun
