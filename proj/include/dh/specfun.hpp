#pragma once

// Complex special-function kernel: log-gamma, digamma, Hurwitz zeta, real-base power.
// Accuracy targets assume IEEE double throughout.

#include <vector>

#include "dh/settings.hpp"
#include "dh/types.hpp"

namespace dh::specfun {

/// Principal log Gamma (the branch with lgamma(z+1) = lgamma(z) + log z and
/// real values on the positive axis). Continuous along vertical lines that
/// avoid the non-positive real axis. Throws PoleError at z = 0, -1, -2, ...
Complex lgamma(Complex z);

/// psi(z) = Gamma'(z)/Gamma(z). Throws PoleError at non-positive integers.
Complex digamma(Complex z);

/// Hurwitz zeta zeta(s, a) for a in (0, 1], continued to all s != 1.
///
/// Re s >= 0 is summed by Euler-Maclaurin. For Re s < 0 with rational
/// a = p/q (q <= 64) Hurwitz's formula reflects onto Re(1-s) > 1; other a
/// fall back to Euler-Maclaurin, which loses digits when Re s is very
/// negative and |Im s| is small.
Complex hurwitz_zeta(Complex s, double a, const EvalSettings& settings = {});

/// Euler-Maclaurin evaluator for any a > 0 (no reflection, no range check on a).
Complex hurwitz_zeta_em(Complex s, double a, const EvalSettings& settings = {});

/// zeta(s, a) - 1/(s - 1): the entire part of Hurwitz zeta. Defined at s = 1,
/// where it equals -psi(a).
Complex hurwitz_zeta_regular(Complex s, double a, const EvalSettings& settings = {});

/// Regular parts zeta(s, m/q) - 1/(s-1) for m = 1..q, sharing one reflection
/// when Re s < 0.
std::vector<Complex> hurwitz_zeta_regular_rational(Complex s, int q,
                                                   const EvalSettings& settings = {});

/// Effective Euler-Maclaurin split point used at s.
int hurwitz_split_point(Complex s, const EvalSettings& settings);

/// b^s = exp(s ln b) for real b > 0.
Complex cpow(double b, Complex s);

/// exp(w) - 1 without cancellation for small |w|.
Complex expm1(Complex w);

/// B_{2k} for k = 0..15.
double bernoulli_even(int k);

}  // namespace dh::specfun
