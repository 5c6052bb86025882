#pragma once

#include <functional>
#include <span>
#include <vector>

#include "diskarg/disk_geometry.hpp"
#include "diskarg/measures.hpp"

namespace diskarg {

struct FracResult {
  double value = 0.0;
  double error = 0.0;  ///< quadrature error estimate, already divided by Gamma(gamma)
  int nodes_used = 0;
};

struct RlOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_panels = 4000;
  int nodes = 10;
};

/// Riemann-Liouville integral (1/Gamma(gamma)) int_0^r (r - x)^{gamma - 1} h(x) dx
/// for gamma in (0, 1] and r in (0, 1). Throws nonconvergent_quadrature when
/// the tolerance is not met within max_panels.
FracResult rl_integral(const std::function<double(double)>& h, double gamma, double r,
                       const RlOptions& opts = {});

enum class SampleKind { grid, radial, ray_plus, ray_minus };

struct StolzSample {
  cplx z;
  double offset = 0.0;  ///< arg z - arg vertex
  SampleKind kind = SampleKind::grid;
};

struct StolzGridOptions {
  int angles = 65;            ///< Chebyshev-Lobatto angles across the aperture (0: none)
  bool special_rays = true;   ///< radial direction and arg(1 - z conj(vertex)) = +-pi/4
};

/// Points of the circle |z| = r inside the region: Chebyshev-spaced angular
/// offsets across the aperture plus the special directions. Empty when the
/// circle misses the region.
std::vector<StolzSample> stolz_angles(const StolzRegion& region, double r,
                                      const StolzGridOptions& opts = {});

struct LevelSup {
  double radius = 0.0;
  double sup = 0.0;    ///< max |D^{-gamma} F| over evaluated points
  cplx argmax;
  int evaluated = 0;
  int skipped = 0;     ///< points on a cut
  int failures = 0;    ///< quadrature or tail-certification failures
  double sup_special = 0.0;  ///< max over the special directions only
};

struct SupOptions {
  StolzGridOptions grid;
  RlOptions quad{1e-6, 1e-10, 4000, 10};
  /// Absolute error allowed in each evaluation of arg f (tail plus dropped zeros).
  double arg_tol = 1e-5;
};

/// Per-radius suprema of |D^{-gamma} F(x e^{i arg z})| evaluated at x = |z|
/// for grid points z. gamma = 0 uses |F(z)|. Points where skip(z) holds are
/// counted and left out.
std::vector<LevelSup> sup_frac(const std::function<double(cplx)>& f, const std::function<bool(cplx)>& skip,
                               const StolzRegion& region, double gamma, std::span<const double> radii,
                               const SupOptions& opts = {});

/// sup_frac applied to arg f of the spec; points on a cut are skipped.
std::vector<LevelSup> sup_frac_arg(const BoundedFunctionSpec& spec, const StolzRegion& region, double gamma,
                                   std::span<const double> radii, const SupOptions& opts = {});

/// D^{-gamma} |1 - x zeta|^{-alpha} at r times |1 - r zeta|^{alpha - gamma}.
double kernel_bound_ratio(cplx zeta, double alpha, double gamma, double r, const RlOptions& opts = {});

struct ConvergenceClass {
  double value = 0.0;
  /// Share of the value coming from the last dyadic band [1 - 2(1 - r_max), r_max].
  double last_band_fraction = 0.0;
};

/// int_0^{r_max} (1 - x)^{gamma - 1} |arg f(x)| dx.
ConvergenceClass convergence_class_integral(const BoundedFunctionSpec& spec, double gamma, double r_max,
                                            const RlOptions& opts = {});

}  // namespace diskarg
