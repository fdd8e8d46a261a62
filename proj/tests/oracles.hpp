#pragma once

// Reference computations kept apart from the library code paths.

#include <cmath>
#include <complex>

namespace oracle {

using CL = std::complex<long double>;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;
inline constexpr long double kGammaL = 0.577215664901532860606512090082402431L;

/// Principal log Gamma in long double: shift until Re z >= 40, then Stirling
/// with Bernoulli terms through B_24.
inline std::complex<double> lgamma(std::complex<double> z_in) {
  CL z(z_in.real(), z_in.imag());
  CL shift = 0.0L;
  while (z.real() < 40.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  static constexpr long double kB[] = {1.0L / 6,          -1.0L / 30,     1.0L / 42,         -1.0L / 30,
                                       5.0L / 66,         -691.0L / 2730, 7.0L / 6,          -3617.0L / 510,
                                       43867.0L / 798,    -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730};
  CL acc = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * kPiL);
  CL zpow = z;
  const CL z2 = z * z;
  for (int k = 1; k <= 12; ++k) {
    acc += kB[k - 1] / (static_cast<long double>(2 * k) * (2 * k - 1) * zpow);
    zpow *= z2;
  }
  const CL r = acc - shift;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

/// psi(z) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+z)) summed to n = terms with
/// the remainder psi(terms+1+z) - psi(terms+2) from its leading asymptotics.
inline std::complex<double> digamma_series(std::complex<double> z_in, long terms = 1000000) {
  const CL z(z_in.real(), z_in.imag());
  CL acc = -kGammaL;
  for (long n = terms; n >= 0; --n) acc += 1.0L / (n + 1.0L) - 1.0L / (static_cast<long double>(n) + z);
  const CL a = static_cast<long double>(terms) + 1.0L + z;
  const long double b = terms + 2.0L;
  acc += std::log(a) - std::log(CL(b)) - 0.5L / a + 0.5L / b - 1.0L / (12.0L * a * a) + 1.0L / (12.0L * b * b);
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// zeta(s, a) for Re s > 1: direct sum of `terms` terms plus a three-term
/// Euler-Maclaurin remainder.
inline std::complex<double> hurwitz_brute(std::complex<double> s_in, double a, long terms = 200000) {
  const CL s(s_in.real(), s_in.imag());
  CL acc = 0.0L;
  for (long n = terms - 1; n >= 0; --n) acc += std::exp(-s * std::log(static_cast<long double>(n) + a));
  const long double x = static_cast<long double>(terms) + a;
  const CL xs = std::exp(-s * std::log(x));
  acc += xs * x / (s - 1.0L) + 0.5L * xs + s * xs / (12.0L * x) - s * (s + 1.0L) * (s + 2.0L) * xs / (720.0L * x * x * x);
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// sum_{n <= terms} a(n) n^{-s} with the period-5 pattern [1, xi, -xi, -1, 0].
/// terms is rounded to a whole number of periods, so the remainder is O(terms^{-sigma}).
inline std::complex<double> dirichlet(std::complex<double> s_in, long terms = 200000) {
  const long double xi =
      (std::sqrt(10.0L - 2.0L * std::sqrt(5.0L)) - 2.0L) / (std::sqrt(5.0L) - 1.0L);
  const long double coef[5] = {0.0L, 1.0L, xi, -xi, -1.0L};
  const CL s(s_in.real(), s_in.imag());
  terms -= terms % 5;
  CL acc = 0.0L;
  for (long n = terms; n >= 1; --n) {
    const long double c = coef[n % 5];
    if (c != 0.0L) acc += c * std::exp(-s * std::log(static_cast<long double>(n)));
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// The same ratio of Gamma factors, through the oracle log Gamma.
inline std::complex<double> x_ratio(std::complex<double> s) {
  const std::complex<double> l = (0.5 - s) * std::log(5.0 / static_cast<double>(kPiL)) + lgamma(1.0 - 0.5 * s) -
                                 lgamma(0.5 * (1.0 + s));
  return std::exp(l);
}

}  // namespace oracle
