#pragma once

#include <cmath>
#include <complex>

namespace diskarg {

using cplx = std::complex<double>;

/// A point e^{i theta} of the unit circle, stored by its angle so that the
/// modulus is exactly one. The angle is normalised to (-pi, pi].
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  explicit BoundaryPoint(double theta);

  double theta() const noexcept { return theta_; }
  cplx value() const noexcept { return {std::cos(theta_), std::sin(theta_)}; }

 private:
  double theta_ = 0.0;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta) noexcept;

/// Non-tangential approach region {z : |1 - z conj(vertex)| <= sigma (1 - |z|)},
/// optionally intersected with the disk |z - vertex| < 1/2.
struct StolzRegion {
  BoundaryPoint vertex;
  double sigma = 2.0;
  bool truncated = true;
};

/// (1 - |xi|^2) / (1 - z conj(xi)).
cplx a_kernel(cplx z, cplx xi) noexcept;

bool in_stolz(cplx z, const StolzRegion& region);

/// |1 - zeta| / |1 - conj(z) zeta|. Throws degenerate_denominator when the
/// denominator drops below 1e-300.
double gpv_ratio(cplx z, cplx zeta);

struct EuclideanDisk {
  cplx center;
  double radius = 0.0;
};

/// The pseudohyperbolic disk {w : |(z - w)/(1 - conj(z) w)| < s} as a
/// euclidean disk.
EuclideanDisk pseudo_disk(cplx z, double s);

}  // namespace diskarg
