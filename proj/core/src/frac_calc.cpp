#include "diskarg/frac_calc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diskarg/errors.hpp"
#include "diskarg/herglotz.hpp"
#include "diskarg/quadrature.hpp"

namespace diskarg {

namespace {

constexpr double pi = std::numbers::pi;

QuadOptions quad_options(const RlOptions& opts, double floor) {
  QuadOptions q;
  q.nodes = opts.nodes;
  q.rel_tol = opts.rel_tol;
  q.abs_tol = opts.abs_tol;
  q.max_panels = opts.max_panels;
  q.grading_floor = floor;
  return q;
}

}  // namespace

FracResult rl_integral(const std::function<double(double)>& h, double gamma, double r, const RlOptions& opts) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw Error(ErrorKind::invalid_argument, "gamma must lie in (0, 1]");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::invalid_argument, "r must lie in (0, 1)");
  // Integrands built from disk functions vary on the scale 1 - x near x = r.
  const double floor = std::min(r, 1.0 - r) / 8.0;
  const QuadResult q = integrate_power_weight(h, 0.0, r, r, gamma - 1.0, quad_options(opts, floor));
  if (!q.converged) {
    throw Error(ErrorKind::nonconvergent_quadrature, "fractional integral did not reach tolerance");
  }
  const double inv_gamma = std::exp(-std::lgamma(gamma));
  return {q.value * inv_gamma, q.error * inv_gamma, q.evaluations};
}

std::vector<StolzSample> stolz_angles(const StolzRegion& region, double r, const StolzGridOptions& opts) {
  if (!(region.sigma > 1.0)) throw Error(ErrorKind::invalid_argument, "aperture sigma must exceed 1");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::invalid_argument, "radius must lie in (0, 1)");
  if (opts.angles < 0) throw Error(ErrorKind::invalid_argument, "grid angle count must be non-negative");
  // |1 - r e^{i phi}|^2 <= sigma^2 (1 - r)^2  <=>  cos phi >= c.
  double c = (1.0 + r * r - region.sigma * region.sigma * (1.0 - r) * (1.0 - r)) / (2.0 * r);
  if (region.truncated) c = std::max(c, (0.75 + r * r) / (2.0 * r));
  std::vector<StolzSample> out;
  if (c > 1.0) return out;
  const double half_width = std::acos(std::max(c, -1.0));
  const double theta0 = region.vertex.theta();
  auto push = [&](double offset, SampleKind kind) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      const cplx z = std::polar(r, theta0 + offset);
      if (in_stolz(z, region)) {
        out.push_back({z, offset, kind});
        return;
      }
      offset *= 1.0 - 1e-12;
    }
  };
  const int n = opts.angles;
  for (int k = 0; k < n; ++k) {
    const double offset = n == 1 ? 0.0 : half_width * std::cos(pi * k / (n - 1));
    push(offset, SampleKind::grid);
  }
  if (opts.special_rays) {
    push(0.0, SampleKind::radial);
    // 1 - z conj(vertex) = t e^{+-i pi/4} with |z| = r.
    const double disc = 4.0 * r * r - 2.0;
    if (disc >= 0.0) {
      const double t = 0.5 * (std::sqrt(2.0) - std::sqrt(disc));
      for (const double sign : {1.0, -1.0}) {
        const cplx w = 1.0 - t * std::polar(1.0, sign * pi / 4.0);
        push(std::arg(w), sign > 0 ? SampleKind::ray_plus : SampleKind::ray_minus);
      }
    }
  }
  return out;
}

std::vector<LevelSup> sup_frac(const std::function<double(cplx)>& f, const std::function<bool(cplx)>& skip,
                               const StolzRegion& region, double gamma, std::span<const double> radii,
                               const SupOptions& opts) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw Error(ErrorKind::invalid_argument, "gamma must lie in [0, 1)");
  std::vector<LevelSup> out;
  out.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw Error(ErrorKind::invalid_argument, "radii must increase strictly");
    }
    LevelSup level;
    level.radius = radii[i];
    for (const StolzSample& s : stolz_angles(region, radii[i], opts.grid)) {
      if (skip && skip(s.z)) {
        ++level.skipped;
        continue;
      }
      double v;
      try {
        if (gamma == 0.0) {
          v = std::abs(f(s.z));
        } else {
          const cplx dir = s.z / std::abs(s.z);
          v = std::abs(rl_integral([&](double x) { return f(x * dir); }, gamma, radii[i], opts.quad).value);
        }
      } catch (const Error&) {
        ++level.failures;
        continue;
      }
      ++level.evaluated;
      if (v > level.sup) {
        level.sup = v;
        level.argmax = s.z;
      }
      if (s.kind != SampleKind::grid) level.sup_special = std::max(level.sup_special, v);
    }
    out.push_back(level);
  }
  return out;
}

std::vector<LevelSup> sup_frac_arg(const BoundedFunctionSpec& spec, const StolzRegion& region, double gamma,
                                   std::span<const double> radii, const SupOptions& opts) {
  spec.validate();
  const auto f = [&](cplx z) { return arg_f(spec, z, opts.arg_tol, true); };
  const auto skip = [&](cplx z) {
    for (const cplx a : spec.zeros.zeros()) {
      if (on_cut(z, a)) return true;
    }
    return false;
  };
  return sup_frac(f, skip, region, gamma, radii, opts);
}

double kernel_bound_ratio(cplx zeta, double alpha, double gamma, double r, const RlOptions& opts) {
  if (!(gamma >= 0.0 && gamma < alpha)) throw Error(ErrorKind::invalid_argument, "need 0 <= gamma < alpha");
  if (!(std::abs(zeta) <= 1.0)) throw Error(ErrorKind::invalid_argument, "zeta must lie in the closed disk");
  if (gamma == 0.0) return 1.0;
  const auto h = [&](double x) { return std::pow(std::abs(1.0 - x * zeta), -alpha); };
  return rl_integral(h, gamma, r, opts).value * std::pow(std::abs(1.0 - r * zeta), alpha - gamma);
}

ConvergenceClass convergence_class_integral(const BoundedFunctionSpec& spec, double gamma, double r_max,
                                            const RlOptions& opts) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorKind::invalid_argument, "gamma must lie in (0, 1)");
  if (!(r_max > 0.0 && r_max < 1.0)) throw Error(ErrorKind::invalid_argument, "r_max must lie in (0, 1)");
  const auto h = [&](double x) { return std::abs(arg_f(spec, cplx{x, 0.0})); };
  const double split = std::max(0.0, 1.0 - 2.0 * (1.0 - r_max));
  const QuadOptions q = quad_options(opts, 0.0);
  const QuadResult head = integrate_power_weight(h, 0.0, split, 1.0, gamma - 1.0, q);
  const QuadResult band = integrate_power_weight(h, split, r_max, 1.0, gamma - 1.0, q);
  if (!head.converged || !band.converged) {
    throw Error(ErrorKind::nonconvergent_quadrature, "convergence-class integral did not reach tolerance");
  }
  ConvergenceClass out;
  out.value = head.value + band.value;
  out.last_band_fraction = out.value > 0.0 ? band.value / out.value : 0.0;
  return out;
}

}  // namespace diskarg
