#pragma once

// The meromorphic ratio X(s) = (5/pi)^{1/2-s} Gamma(1 - s/2) / Gamma((1+s)/2),
// for which f(s) = X(s) f(1-s). Zeros at -1, -3, -5, ...; poles at 2, 4, 6, ...

#include <vector>

#include "dh/settings.hpp"
#include "dh/types.hpp"

namespace dh::xratio {

/// ln(5/pi)
inline const double kLogFiveOverPi = std::log(5.0 / kPi);

struct RatioValue {
  Complex at;
  Complex value;     // X(s); 0 when zero_flag
  double log_abs;    // log|X(s)|; -inf when zero_flag
  double arg_cont;   // Im log X on the continuous branch; NaN when zero_flag
  bool zero_flag = false;
};

/// Offset pair s+- = 1/2 +- epsilon + i t around s0 = 1/2 + i t.
struct MirrorPair {
  double s0_t;
  double epsilon;

  [[nodiscard]] Complex s_plus() const { return {0.5 + epsilon, s0_t}; }
  [[nodiscard]] Complex s_minus() const { return {0.5 - epsilon, s0_t}; }
};

[[nodiscard]] bool is_trivial_zero(Complex s);
[[nodiscard]] bool is_pole(Complex s);

/// log X(s) (principal lgamma branches). PoleError at poles and zeros of X.
Complex log_x(Complex s);

/// PoleError at s = 2n+2; zero_flag at s = -(2n+1).
RatioValue x_of(Complex s);

/// log|X(s)| extended to -inf at zeros and +inf at poles; never throws for finite s.
double log_abs_x(Complex s);

/// max(|X(s+) X(s-*) - 1|, |X(s-) X(s+*) - 1|)
double reflection_defect(const MirrorPair& pair);

std::vector<Complex> trivial_zeros(int count);
std::vector<Complex> poles(int count);

/// |X(-(2n+1) + delta) X(2n+2 - delta) - 1| for real delta.
double zero_pole_reciprocity_defect(int n, double delta);

/// d/dt log|X(s)| as the rational series (the |X|-scaled series divided by |X|).
/// n_max = 0 picks max(50, ceil(10 (|t| + |sigma|))). The sum beyond n_max is
/// replaced by the midpoint integral of the summand.
double dlogabsx_dt(Complex s, int n_max = 0);

/// d/dt |X(s)| in the original |X|-weighted form. Zero at zeros of X; PoleError at poles.
double dabsx_dt(Complex s, int n_max = 0);

/// d/dsigma log|X(s)| = -ln(5/pi) - Re[psi(1 - s/2) + psi((1+s)/2)] / 2.
double dsigma_logabsx(Complex s);

enum class GammaFactor { upper, lower };  // upper: Gamma(1 - s/2); lower: Gamma((1+s)/2)

/// d/dt |Gamma(.)| = -t |Gamma(.)| sum_n 1/|sigma + it - 2n|^2 (upper) or
/// 1/|sigma + it + 2n - 1|^2 (lower). Same n_max and tail rule as dlogabsx_dt.
double gamma_modulus_dt(Complex s, GammaFactor which, int n_max = 0);

/// |Gamma(1 - s/2)| or |Gamma((1+s)/2)|
double gamma_modulus(Complex s, GammaFactor which);

/// log|X| with the critical line divided out: log|X| / (sigma - 1/2) away from
/// the line, dsigma_logabsx on it. Sign-stable; inf at zeros/poles of X.
double deflated_log_abs_x(double sigma, double t);

}  // namespace dh::xratio
