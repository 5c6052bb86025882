#include "diskarg/herglotz.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "diskarg/errors.hpp"
#include "diskarg/summation.hpp"

namespace diskarg {

namespace {

constexpr double pi = std::numbers::pi;

void check_disk(cplx z) {
  if (!(std::norm(z) < 1.0)) throw Error(ErrorKind::invalid_argument, "point must lie in the open disk");
}

// |e^{it} - z|^2 = (1 - r)^2 + 4 r sin^2((t - phi)/2), accurate near the circle.
double dist2(double t, double r, double phi) {
  const double s = std::sin(0.5 * (t - phi));
  return (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;
}

// Antiderivative of the Poisson kernel (1 - r^2)/|e^{it} - z|^2 in u = t - phi,
// continuous on (-2 pi, 2 pi).
double poisson_primitive(double u, double r) {
  return 2.0 * std::atan2((1.0 + r) * std::sin(0.5 * u), (1.0 - r) * std::cos(0.5 * u));
}

}  // namespace

cplx h_psi(cplx z, const BoundaryMeasure& m) {
  check_disk(z);
  const double r = std::abs(z);
  const double phi = std::arg(z);
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  CompensatedSum re;
  CompensatedSum im;
  for (const Atom& a : m.atoms()) {
    const double d2 = dist2(a.theta, r, phi);
    re += a.mass * one_minus_r2 / d2;
    im += a.mass * 2.0 * r * std::sin(phi - a.theta) / d2;
  }
  const auto bp = m.breakpoints();
  if (!bp.empty()) {
    double prev_prim = poisson_primitive(bp[0] - phi, r);
    double prev_log = std::log(dist2(bp[0], r, phi));
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
      const double prim = poisson_primitive(bp[i + 1] - phi, r);
      const double lg = std::log(dist2(bp[i + 1], r, phi));
      const double rho = m.density(i);
      if (rho != 0.0) {
        re += rho * (prim - prev_prim);
        // Im kernel = -d/dt log|e^{it} - z|^2.
        im += -rho * (lg - prev_log);
      }
      prev_prim = prim;
      prev_log = lg;
    }
  }
  return {re.value(), im.value()};
}

double h_psi_imag(cplx z, const BoundaryMeasure& m) {
  check_disk(z);
  const double r = std::abs(z);
  const double phi = std::arg(z);
  CompensatedSum im;
  for (const Atom& a : m.atoms()) {
    im += a.mass * 2.0 * r * std::sin(phi - a.theta) / dist2(a.theta, r, phi);
  }
  const auto bp = m.breakpoints();
  if (!bp.empty()) {
    double prev_log = std::log(dist2(bp[0], r, phi));
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
      const double lg = std::log(dist2(bp[i + 1], r, phi));
      const double rho = m.density(i);
      if (rho != 0.0) im += -rho * (lg - prev_log);
      prev_log = lg;
    }
  }
  return im.value();
}

cplx g_psi(cplx z, const HerglotzSpec& spec) {
  return std::exp(-h_psi(z, spec.measure) / (2.0 * pi) + cplx{0.0, spec.phase});
}

double arg_g(cplx z, const HerglotzSpec& spec) {
  return -h_psi_imag(z, spec.measure) / (2.0 * pi) + spec.phase;
}

BoundaryMeasure atom_measure() { return BoundaryMeasure::point_mass(0.0, 2.0 * pi); }

BoundaryMeasure power_law_measure(double alpha, int depth, double tol) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::invalid_argument, "alpha must lie in [0, 1)");
  if (depth < 1 || depth > 1000 || !(tol > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "power_law_measure needs depth >= 1 and tol > 0");
  }
  const double beta = 1.0 - alpha;
  // Positive half: 0, pi 2^-depth, ..., pi/2, pi with each octave [t, 2t]
  // split into n equal pieces, n chosen from the interpolation error bound
  // alpha (1 - alpha) t^{-1-alpha} h^2 / 8 <= tol.
  std::vector<double> half{0.0};
  for (int k = depth; k >= 1; --k) {
    const double t = pi * std::ldexp(1.0, -k);
    const double curvature = alpha * beta * std::pow(t, -1.0 - alpha);
    int n = 1;
    if (curvature > 0.0) n = std::max(1, static_cast<int>(std::ceil(t * std::sqrt(curvature / (8.0 * tol)))));
    for (int j = 0; j < n; ++j) half.push_back(t + t * j / n);
  }
  half.push_back(pi);
  std::vector<double> bps;
  std::vector<double> vals;
  bps.reserve(2 * half.size());
  for (std::size_t i = half.size(); i-- > 1;) {
    bps.push_back(-half[i]);
    vals.push_back(-std::pow(half[i], beta));
  }
  for (const double t : half) {
    bps.push_back(t);
    vals.push_back(t == 0.0 ? 0.0 : std::pow(t, beta));
  }
  return BoundaryMeasure({}, std::move(bps), std::move(vals));
}

cplx log_f(const BoundedFunctionSpec& spec, cplx z, double tol) {
  spec.validate();
  if (spec.origin_order > 0 && z == cplx{}) throw Error(ErrorKind::at_zero, "log f at the origin zero");
  cplx out = std::log(spec.scale);
  if (spec.origin_order > 0) out += static_cast<double>(spec.origin_order) * std::log(z);
  out += product_log(spec.zeros, z, tol).value;
  // B~ = B / prod |a_n| over the materialised zeros.
  CompensatedSum shift;
  for (std::size_t n = 0; n < spec.zeros.size(); ++n) shift += -0.5 * std::log(spec.zeros.abs2(n));
  out += shift.value();
  out += -h_psi(z, spec.boundary) / (2.0 * pi) + cplx{0.0, spec.phase};
  return out;
}

double arg_f(const BoundedFunctionSpec& spec, cplx z, double tol, bool truncate, int* cut_count) {
  double out = spec.phase;
  if (spec.origin_order > 0) {
    if (z == cplx{}) throw Error(ErrorKind::at_zero, "arg f at the origin zero");
    out += spec.origin_order * std::arg(z);
  }
  const ProductArg pa = truncate ? product_arg_truncated(spec.zeros, z, tol) : product_arg(spec.zeros, z, tol);
  if (cut_count) *cut_count = pa.cut_count;
  out += pa.value;
  if (!spec.boundary.empty()) out += -h_psi_imag(z, spec.boundary) / (2.0 * pi);
  return out;
}

}  // namespace diskarg
