#pragma once

#include "diskarg/blaschke.hpp"
#include "diskarg/measures.hpp"

namespace diskarg {

struct HerglotzSpec {
  BoundaryMeasure measure;
  double phase = 0.0;
};

/// Integral of (e^{it} + z) / (e^{it} - z) against the measure. Atoms are
/// summed directly; on each linear piece of the distribution function the
/// kernel has a closed-form antiderivative, so no quadrature is involved.
cplx h_psi(cplx z, const BoundaryMeasure& m);

/// Im h_psi alone (one logarithm per breakpoint, no arctangents).
double h_psi_imag(cplx z, const BoundaryMeasure& m);

/// exp(-h_psi / (2 pi) + i phase).
cplx g_psi(cplx z, const HerglotzSpec& spec);

/// -Im h_psi / (2 pi) + phase.
double arg_g(cplx z, const HerglotzSpec& spec);

/// Point mass 2 pi at t = 0, so that g = exp(-(1 + z)/(1 - z)).
BoundaryMeasure atom_measure();

/// Piecewise-linear approximation of psi*(t) = sign(t) |t|^{1 - alpha}.
/// Breakpoints are geometric toward t = 0 down to pi 2^-depth (the first
/// segment [0, pi 2^-depth] is linear) and subdivided so that the linear
/// interpolation error on every segment stays below tol.
BoundaryMeasure power_law_measure(double alpha, int depth = 48, double tol = 1e-5);

/// log f = log C + p log z + log B~(z) + log g(z) on the cut disk, with
/// B~ normalised over the materialised zeros.
cplx log_f(const BoundedFunctionSpec& spec, cplx z, double tol = 1e-12);

/// Im log f. With truncate, materialised zeros whose combined contribution is
/// certified below tol are skipped (see product_arg_truncated).
double arg_f(const BoundedFunctionSpec& spec, cplx z, double tol = 1e-12, bool truncate = false,
             int* cut_count = nullptr);

}  // namespace diskarg
