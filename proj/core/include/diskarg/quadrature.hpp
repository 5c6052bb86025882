#pragma once

#include <functional>
#include <vector>

namespace diskarg {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1-t)^alpha (1+t)^beta on [-1, 1],
/// computed with the Golub-Welsch eigenvalue method.
GaussRule gauss_jacobi(int n, double alpha, double beta);

/// Gauss-Legendre rule on [-1, 1]; rules are cached per node count.
const GaussRule& gauss_legendre(int n);

/// Hurwitz zeta sum_{k>=0} (a+k)^{-s}, s > 1, a > 0.
double hurwitz_zeta(double s, double a);

struct QuadOptions {
  int nodes = 10;             ///< Gauss nodes per panel
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_panels = 4000;
  /// Initial geometric grading toward the weight singularity stops once the
  /// panel nearest to it is shorter than this (in the distance-to-singularity
  /// variable). Zero picks a default of 2^-8 of the interval.
  double grading_floor = 0.0;
  /// Also grade the initial mesh toward the lower endpoint.
  bool grade_lower = false;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int panels = 0;
  bool converged = true;
};

/// Integral of (c - x)^exponent * h(x) over [lo, hi] with c >= hi and
/// exponent > -1. Panels are graded geometrically (ratio 1/2) toward x = c.
/// A panel touching the singularity integrates the weight exactly with a
/// Gauss-Jacobi rule; the rest use Gauss-Legendre. Panels are then bisected
/// adaptively, worst error first, until the error estimate meets
/// max(abs_tol, rel_tol*|I|) or max_panels is hit (converged = false).
QuadResult integrate_power_weight(const std::function<double(double)>& h, double lo, double hi,
                                  double c, double exponent, const QuadOptions& opts = {});

/// Same integral on a fixed graded mesh with a fixed node count and no
/// adaptivity. Used where a refinement sequence is wanted explicitly.
double integrate_power_weight_fixed(const std::function<double(double)>& h, double lo, double hi,
                                    double c, double exponent, int nodes, double grading_floor);

}  // namespace diskarg
