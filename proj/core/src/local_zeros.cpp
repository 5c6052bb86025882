#include "diskarg/local_zeros.hpp"

#include <algorithm>
#include <cmath>

#include "diskarg/errors.hpp"
#include "diskarg/herglotz.hpp"
#include "diskarg/summation.hpp"

namespace diskarg {

namespace {

constexpr double kAtZeroTol = 1e-14;

void check_h(double h) {
  if (!(h > 0.0 && h < 1.0)) throw Error(ErrorKind::invalid_argument, "h must lie in (0, 1)");
}

}  // namespace

LocalCount local_count(const ZeroSequence& zs, cplx z, double h) {
  check_h(h);
  if (!(std::norm(z) < 1.0)) throw Error(ErrorKind::invalid_argument, "point must lie in the open disk");
  const double gap = 1.0 - std::abs(z);
  const double radius = h * gap;
  // A tail zero in the disk would need 1 - |a| >= (1 - h)(1 - |z|).
  if (zs.tail().kind != TailKind::none && zs.tail().max_term() >= (1.0 - h) * gap) {
    throw Error(ErrorKind::tail_bound_exceeded, "tail zeros may lie in the local disk");
  }
  LocalCount out;
  CompensatedSum sum;
  for (const cplx a : zs.zeros()) {
    const double d = std::abs(a - z);
    if (d <= kAtZeroTol * gap) throw Error(ErrorKind::at_zero, "point coincides with a zero");
    if (d <= radius) {
      ++out.n;
      sum += std::log(radius / d);
    }
  }
  out.N = sum.value();
  return out;
}

cplx L_value(const BoundedFunctionSpec& spec, cplx z, double h, double tol) {
  const LocalCount lc = local_count(spec.zeros, z, h);
  return log_f(spec, z, tol) + lc.N;
}

TsujiCheck tsuji_bound_check(const ZeroSequence& zs, cplx z) {
  if (!(std::norm(z) < 1.0)) throw Error(ErrorKind::invalid_argument, "point must lie in the open disk");
  const double r = std::abs(z);
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  CompensatedSum lhs;
  CompensatedSum rhs;
  TsujiCheck out;
  const auto zeros = zs.zeros();
  for (std::size_t n = 0; n < zeros.size(); ++n) {
    const cplx a = zeros[n];
    if (a == z) throw Error(ErrorKind::at_zero, "point coincides with a zero");
    const double den2 = std::norm(1.0 - z * std::conj(a));
    const double A = zs.deficit2(n) / std::sqrt(den2);
    if (!(A < 0.5)) continue;
    // -log|b| = -log|a| - log rho, 1 - rho^2 = (1 - |a|^2)(1 - |z|^2)/|1 - z conj(a)|^2.
    const double gap = zs.deficit2(n) * one_minus_r2 / den2;
    lhs += -0.5 * std::log1p(-zs.deficit2(n)) - 0.5 * std::log1p(-gap);
    rhs += 2.0 * A;
    ++out.terms;
  }
  out.lhs = lhs.value();
  out.rhs = rhs.value();
  return out;
}

double kernel_mass(const ZeroSequence& zs, cplx z) {
  CompensatedSum sum;
  const auto zeros = zs.zeros();
  for (std::size_t n = 0; n < zeros.size(); ++n) {
    sum += zs.deficit2(n) / std::abs(1.0 - z * std::conj(zeros[n]));
  }
  return sum.value();
}

double lower_bound_constant(double h) {
  check_h(h);
  const double inner = std::log(2.0 * (2.0 + h) / (h * (1.0 - h))) * (2.0 + h) / (1.0 - h);
  const double outer = 4.0 * std::log((4.0 + 2.0 * h) / (h * (1.0 - h)));
  return std::max({inner, 2.0, outer});
}

}  // namespace diskarg
