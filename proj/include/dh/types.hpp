#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dh {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown at a pole of Gamma, psi, zeta or X. `location` is the offending argument.
struct PoleError : std::domain_error {
  PoleError(const std::string& what, Complex where)
      : std::domain_error(what), location(where) {}
  Complex location;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Newton left its trust disk around the seed.
struct DivergedError : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

/// f vanished (to the guard) on a counting contour even after perturbation.
struct BoundaryZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The phase-step bound could not be met inside the sample budget.
struct UndersampledError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A point s = sigma + i t. Both components are finite.
class ComplexPoint {
 public:
  ComplexPoint() = default;
  ComplexPoint(double sigma, double t) : sigma_(sigma), t_(t) {
    if (!std::isfinite(sigma) || !std::isfinite(t)) {
      throw DomainError("ComplexPoint components must be finite");
    }
  }
  explicit ComplexPoint(Complex s) : ComplexPoint(s.real(), s.imag()) {}

  [[nodiscard]] double sigma() const { return sigma_; }
  [[nodiscard]] double t() const { return t_; }
  [[nodiscard]] Complex value() const { return {sigma_, t_}; }

  [[nodiscard]] ComplexPoint conj() const { return {sigma_, -t_}; }
  /// 1 - s
  [[nodiscard]] ComplexPoint reflected() const { return {1.0 - sigma_, -t_}; }
  /// 1 - s*
  [[nodiscard]] ComplexPoint mirrored() const { return {1.0 - sigma_, t_}; }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  double sigma_ = 0.0;
  double t_ = 0.0;
};

/// Axis-aligned rectangle [sigma0, sigma1] x [t0, t1].
struct Rect {
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  double t0 = 0.0;
  double t1 = 0.0;

  [[nodiscard]] double width() const { return sigma1 - sigma0; }
  [[nodiscard]] double height() const { return t1 - t0; }
  [[nodiscard]] bool contains(Complex s) const {
    return s.real() >= sigma0 && s.real() <= sigma1 && s.imag() >= t0 && s.imag() <= t1;
  }
  [[nodiscard]] bool valid() const { return sigma1 > sigma0 && t1 > t0; }
};

inline void require_finite(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(who) + ": argument must be finite");
  }
}

}  // namespace dh
