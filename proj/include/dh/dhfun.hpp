#pragma once

// The Davenport-Heilbronn function: the period-5 Dirichlet series
//   f(s) = sum_n a(n) n^{-s},  a = [1, xi, -xi, -1, 0] for n = 1, 2, 3, 4, 0 (mod 5)
// continued to the whole plane through Hurwitz zeta.

#include <array>
#include <utility>

#include "dh/settings.hpp"
#include "dh/types.hpp"

namespace dh::dhfun {

/// Dirichlet coefficients indexed by n mod 5.
struct CoefficientTable {
  double xi;
  std::array<double, 5> a;  // a[n % 5]

  [[nodiscard]] double operator()(long n) const { return a[static_cast<std::size_t>(n % 5)]; }
};

/// xi = (sqrt(10 - 2 sqrt 5) - 2) / (sqrt 5 - 1).
const CoefficientTable& coefficients();

struct FnValue {
  Complex at;
  Complex value;
  double est_abs_err = 0.0;
  /// Set when the pole-cancelling combination near s = 1 lost more than
  /// 1e6 * rel_tol in relative accuracy.
  bool accuracy_warning = false;
};

/// Partial Dirichlet sum over n = 1..n_terms. Re s > 1 only.
FnValue f_series(Complex s, long n_terms);

/// f(s) for any finite s.
FnValue f(Complex s, const EvalSettings& settings = {});

/// Convenience: f(s).value
Complex f_value(Complex s, const EvalSettings& settings = {});

/// f'(s) from central differences of the Hurwitz kernel with one Richardson step.
Complex f_prime(Complex s, const EvalSettings& settings = {});

/// |f(s) - X(s) f(1-s)| / (|f(s)| + |f(1-s)| + 1e-300). PoleError at s = 2, 4, 6, ...
double functional_eq_residual(Complex s, const EvalSettings& settings = {});

struct ZValue {
  double value;           // Re(e^{-i theta/2} f(1/2 + it))
  double discarded_imag;  // the imaginary part that should vanish
  double theta;
  bool accuracy_warning;  // |imag| > 1e-8 (1 + |value|)
};

/// theta(t) = arg X(1/2 + it) on the continuous branch.
double theta(double t);

/// Rotated critical-line form; real up to rounding.
ZValue z_function(double t, const EvalSettings& settings = {});

struct PQValue {
  double p;  // f(s) f(s*)
  double q;  // f(1-s) f(1-s*)
  double p_imag;
  double q_imag;
  bool accuracy_warning;
};

/// P = |f(s)|^2 and Q = |f(1-s)|^2 computed as products of f values.
PQValue pq(double sigma, double t, const EvalSettings& settings = {});

}  // namespace dh::dhfun
