#include "diskarg/disk_geometry.hpp"

#include <numbers>

#include "diskarg/errors.hpp"

namespace diskarg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::at_zero: return "at-zero";
    case ErrorKind::degenerate_denominator: return "degenerate-denominator";
    case ErrorKind::tail_bound_exceeded: return "tail-bound-exceeded";
    case ErrorKind::nonconvergent_quadrature: return "nonconvergent-quadrature";
    case ErrorKind::real_zero_in_base: return "real-zero-in-base";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

double wrap_angle(double theta) noexcept {
  constexpr double pi = std::numbers::pi;
  if (theta > -pi && theta <= pi) return theta;
  double t = std::remainder(theta, 2.0 * pi);
  if (t <= -pi) t += 2.0 * pi;
  return t;
}

BoundaryPoint::BoundaryPoint(double theta) : theta_(wrap_angle(theta)) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::invalid_argument, "boundary angle must be finite");
}

cplx a_kernel(cplx z, cplx xi) noexcept {
  return (1.0 - std::norm(xi)) / (1.0 - z * std::conj(xi));
}

bool in_stolz(cplx z, const StolzRegion& region) {
  const cplx zeta = region.vertex.value();
  const double r = std::abs(z);
  if (r >= 1.0) return false;
  if (std::abs(1.0 - z * std::conj(zeta)) > region.sigma * (1.0 - r)) return false;
  return !region.truncated || std::abs(z - zeta) < 0.5;
}

double gpv_ratio(cplx z, cplx zeta) {
  const double den = std::abs(1.0 - std::conj(z) * zeta);
  if (den < 1e-300) {
    throw Error(ErrorKind::degenerate_denominator, "|1 - conj(z) zeta| vanishes");
  }
  return std::abs(1.0 - zeta) / den;
}

EuclideanDisk pseudo_disk(cplx z, double s) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorKind::invalid_argument, "pseudo_disk needs 0 < s < 1");
  const double s2 = s * s;
  const double r2 = std::norm(z);
  const double den = 1.0 - s2 * r2;
  return {(1.0 - s2) * z / den, (1.0 - r2) * s / den};
}

}  // namespace diskarg
