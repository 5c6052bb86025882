#pragma once

#include "diskarg/blaschke.hpp"
#include "diskarg/measures.hpp"

namespace diskarg {

struct LocalCount {
  int n = 0;      ///< zeros with |a - z| <= h (1 - |z|)
  double N = 0.0; ///< sum of log(h (1 - |z|) / |z - a|) over those zeros
};

/// Throws at_zero when z is within 1e-14 (1 - |z|) of a zero, and
/// tail_bound_exceeded when tail zeros could reach the disk.
LocalCount local_count(const ZeroSequence& zs, cplx z, double h);

/// log f(z) + N_z(h).
cplx L_value(const BoundedFunctionSpec& spec, cplx z, double h, double tol = 1e-12);

struct TsujiCheck {
  double lhs = 0.0;  ///< sum of -log|b(z, a)| over factors with |A(z, a)| < 1/2
  double rhs = 0.0;  ///< twice the sum of |A(z, a)| over the same factors
  int terms = 0;
};

TsujiCheck tsuji_bound_check(const ZeroSequence& zs, cplx z);

/// Sum of |A(z, a_n)| over the materialised zeros.
double kernel_mass(const ZeroSequence& zs, cplx z);

/// A constant C(h) with Re L(z, h, B) >= -C(h) sum |A(z, a_n)| for |z| >= 1/2,
/// from the elementary bounds on each factor inside and outside the
/// pseudohyperbolic disk of radius h/(2 + h).
double lower_bound_constant(double h);

}  // namespace diskarg
