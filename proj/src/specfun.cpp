#include "dh/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

namespace dh::specfun {
namespace {

constexpr std::array<double, 16> kBernoulliEven = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// B_{2k} / (2k)!
constexpr std::array<double, 16> em_coefficients() {
  std::array<double, 16> c{};
  double fact = 1.0;
  for (int k = 0; k < 16; ++k) {
    if (k > 0) fact *= static_cast<double>((2 * k - 1) * (2 * k));
    c[k] = kBernoulliEven[k] / fact;
  }
  return c;
}
constexpr std::array<double, 16> kEmCoeff = em_coefficients();

constexpr double kLn2Pi = 1.8378770664093454835606594728112353;
constexpr double kLn2 = 0.69314718055994530941723212145817657;

// Shift target for the asymptotic series; |w| >= 10 keeps ten terms below 1e-19.
constexpr double kAsymptoticMin = 10.0;
constexpr int kAsymptoticTerms = 10;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex stirling_lgamma(Complex w) {
  Complex series = 0.0;
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex pw = inv;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    series += kBernoulliEven[k] / static_cast<double>(2 * k * (2 * k - 1)) * pw;
    pw *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * kLn2Pi + series;
}

Complex asymptotic_digamma(Complex w) {
  Complex series = 0.0;
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex pw = inv2;
  for (int k = 1; k <= kAsymptoticTerms; ++k) {
    series += kBernoulliEven[k] / static_cast<double>(2 * k) * pw;
    pw *= inv2;
  }
  return std::log(w) - 0.5 * inv - series;
}

// Euler-Maclaurin for zeta(s, a) - 1/(s-1); a > 0 arbitrary.
Complex em_regular(Complex s, double a, const EvalSettings& settings) {
  const int n_split = hurwitz_split_point(s, settings);
  Complex head = 0.0;
  for (int n = 0; n < n_split; ++n) {
    head += std::exp(-s * std::log(static_cast<double>(n) + a));
  }
  const double x = static_cast<double>(n_split) + a;
  const double lx = std::log(x);
  const Complex x_pow = std::exp(-s * lx);  // x^{-s}

  // (x^{1-s} - 1)/(s - 1), finite at s = 1.
  const Complex w = (1.0 - s) * lx;
  const Complex integral = (w == Complex(0.0)) ? Complex(-lx) : -lx * expm1(w) / w;

  Complex tail = integral + 0.5 * x_pow;
  Complex pochhammer = s;  // (s)_{2k-1}
  Complex xk = x_pow / x;  // x^{-s-2k+1}
  const double inv_x2 = 1.0 / (x * x);
  const int k_max = settings.bernoulli_order / 2;
  for (int k = 1; k <= k_max; ++k) {
    tail += kEmCoeff[k] * pochhammer * xk;
    pochhammer *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    xk *= inv_x2;
  }
  return head + tail;
}

// sin(pi x) and cos(pi x) with exact zeros at integers and half-integers.
double sinpi(double x) {
  double r = std::fmod(x, 2.0);  // exact
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cospi(double x) { return sinpi(x + 0.5); }

// sin(pi w) * exp(-pi |Im w|), finite for any Im w. Re w must be exactly reduced
// by the caller where exact zeros matter.
Complex scaled_sinpi(Complex w) {
  const double y = kPi * w.imag();
  const double decay = std::exp(-2.0 * std::abs(y));
  const double ch = 0.5 * (1.0 + decay);
  const double sh = std::copysign(0.5 * (1.0 - decay), y);
  return {sinpi(w.real()) * ch, cospi(w.real()) * sh};
}

// Hurwitz's formula for zeta(s, m/q), m = 1..q, from zeta(1-s, r/q).
// Requires Re(1 - s) > 1 so every right-hand value is away from its pole.
std::vector<Complex> reflect_rational(Complex s, int q, const EvalSettings& settings) {
  const Complex w = 1.0 - s;
  std::vector<Complex> reg(static_cast<std::size_t>(q));
  for (int r = 1; r <= q; ++r) {
    reg[r - 1] = em_regular(w, static_cast<double>(r) / q, settings);
  }
  // sin(pi s/2 + 2 pi r m / q) = sin(pi (s/2 + 2 (r m mod q)/q)); reduce s/2 mod 2 exactly.
  const double half_sigma = std::fmod(0.5 * s.real(), 2.0);
  const double half_t = 0.5 * s.imag();
  const double scale = kPi * std::abs(half_t);
  const Complex log_pref =
      kLn2 + lgamma(w) - w * std::log(2.0 * kPi * static_cast<double>(q)) + scale;
  const Complex pref = std::exp(log_pref);

  std::vector<Complex> out(static_cast<std::size_t>(q));
  for (int m = 1; m <= q; ++m) {
    Complex acc = 0.0;
    for (int r = 1; r <= q; ++r) {
      const double shift = 2.0 * static_cast<double>((static_cast<long>(r) * m) % q) / q;
      acc += scaled_sinpi(Complex(half_sigma + shift, half_t)) * reg[r - 1];
    }
    if (m == q) {
      // sum_r sin(pi s/2 + 2 pi r) = q sin(pi s/2); the other m cancel exactly.
      acc += static_cast<double>(q) * scaled_sinpi(Complex(half_sigma, half_t)) / (w - 1.0);
    }
    out[m - 1] = pref * acc;
  }
  return out;
}

// Returns q in [1, 64] with a*q integral, or 0.
int rational_denominator(double a) {
  for (int q = 1; q <= 64; ++q) {
    const double aq = a * q;
    if (std::abs(aq - std::round(aq)) <= 1e-13 * q) return q;
  }
  return 0;
}

void check_hurwitz_args(Complex s, double a) {
  require_finite(s, "hurwitz_zeta");
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("hurwitz_zeta: a must lie in (0, 1], got " + std::to_string(a));
  }
}

}  // namespace

double bernoulli_even(int k) {
  if (k < 0 || k >= static_cast<int>(kBernoulliEven.size())) {
    throw DomainError("bernoulli_even: index out of range");
  }
  return kBernoulliEven[static_cast<std::size_t>(k)];
}

Complex expm1(Complex w) {
  if (std::abs(w) < 0.5) {
    // Horner on sum_{k>=1} w^k / k!
    Complex acc = 1.0;
    for (int k = 20; k >= 2; --k) acc = 1.0 + acc * w / static_cast<double>(k);
    return w * acc;
  }
  return std::exp(w) - 1.0;
}

Complex lgamma(Complex z) {
  require_finite(z, "lgamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("lgamma: pole at z = " + std::to_string(static_cast<long>(z.real())), z);
  }
  // Shift-counting keeps the branch continuous: each log is principal.
  Complex shifted = z;
  Complex log_product = 0.0;
  while (shifted.real() < kAsymptoticMin) {
    log_product += std::log(shifted);
    shifted += 1.0;
  }
  return stirling_lgamma(shifted) - log_product;
}

Complex digamma(Complex z) {
  require_finite(z, "digamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("digamma: pole at z = " + std::to_string(static_cast<long>(z.real())), z);
  }
  Complex shifted = z;
  Complex recip_sum = 0.0;
  while (shifted.real() < kAsymptoticMin) {
    recip_sum += 1.0 / shifted;
    shifted += 1.0;
  }
  return asymptotic_digamma(shifted) - recip_sum;
}

int hurwitz_split_point(Complex s, const EvalSettings& settings) {
  const int by_height = static_cast<int>(std::ceil(1.5 * std::abs(s.imag())));
  return std::max(settings.hurwitz_cutoff, by_height);
}

Complex hurwitz_zeta_em(Complex s, double a, const EvalSettings& settings) {
  require_finite(s, "hurwitz_zeta_em");
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta_em: a must be positive");
  if (s == Complex(1.0)) throw PoleError("hurwitz_zeta: pole at s = 1", s);
  return em_regular(s, a, settings) + 1.0 / (s - 1.0);
}

Complex hurwitz_zeta_regular(Complex s, double a, const EvalSettings& settings) {
  check_hurwitz_args(s, a);
  if (s.real() < 0.0) {
    if (const int q = rational_denominator(a); q > 0) {
      const int m = static_cast<int>(std::lround(a * q));
      return reflect_rational(s, q, settings)[static_cast<std::size_t>(m - 1)] - 1.0 / (s - 1.0);
    }
  }
  return em_regular(s, a, settings);
}

Complex hurwitz_zeta(Complex s, double a, const EvalSettings& settings) {
  check_hurwitz_args(s, a);
  if (s == Complex(1.0)) throw PoleError("hurwitz_zeta: pole at s = 1", s);
  if (s.real() < 0.0) {
    if (const int q = rational_denominator(a); q > 0) {
      const int m = static_cast<int>(std::lround(a * q));
      return reflect_rational(s, q, settings)[static_cast<std::size_t>(m - 1)];
    }
  }
  return em_regular(s, a, settings) + 1.0 / (s - 1.0);
}

std::vector<Complex> hurwitz_zeta_regular_rational(Complex s, int q, const EvalSettings& settings) {
  require_finite(s, "hurwitz_zeta_regular_rational");
  if (q < 1) throw DomainError("hurwitz_zeta_regular_rational: q must be positive");
  std::vector<Complex> out;
  if (s.real() < 0.0) {
    out = reflect_rational(s, q, settings);
    const Complex pole = 1.0 / (s - 1.0);
    for (auto& v : out) v -= pole;
  } else {
    out.reserve(static_cast<std::size_t>(q));
    for (int m = 1; m <= q; ++m) out.push_back(em_regular(s, static_cast<double>(m) / q, settings));
  }
  return out;
}

Complex cpow(double b, Complex s) {
  if (!(b > 0.0)) throw DomainError("cpow: base must be positive");
  require_finite(s, "cpow");
  return std::exp(s * std::log(b));
}

}  // namespace dh::specfun
