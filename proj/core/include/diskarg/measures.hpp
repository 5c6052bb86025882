#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskarg/blaschke.hpp"
#include "diskarg/disk_geometry.hpp"

namespace diskarg {

struct Atom {
  double theta = 0.0;
  double mass = 0.0;
};

/// Non-negative measure on the circle: point masses plus a continuous part
/// given by a non-decreasing piecewise-linear distribution function psi* on
/// [-pi, pi]. Outside [breakpoints.front(), breakpoints.back()] the
/// continuous part carries no mass.
class BoundaryMeasure {
 public:
  BoundaryMeasure() = default;
  BoundaryMeasure(std::vector<Atom> atoms, std::vector<double> breakpoints,
                  std::vector<double> values);

  static BoundaryMeasure point_mass(double theta, double mass);
  /// Constant density on [-pi, pi] with the given total mass.
  static BoundaryMeasure uniform(double total_mass);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }

  std::size_t segment_count() const noexcept {
    return breakpoints_.empty() ? 0 : breakpoints_.size() - 1;
  }
  /// Density of the continuous part on segment i.
  double density(std::size_t i) const;

  double atom_mass() const;
  double continuous_mass() const;
  double total_mass() const { return atom_mass() + continuous_mass(); }
  bool empty() const noexcept { return atoms_.empty() && continuous_mass() == 0.0; }

  /// psi*(t) - psi*(-pi) for the continuous part.
  double cdf(double t) const;
  /// Continuous mass of [lo, hi] with -pi <= lo <= hi <= pi.
  double continuous_mass_between(double lo, double hi) const;
  /// Mass (atoms and continuous part) of {e^{it} : |e^{it} - zeta| <= tau}.
  double ball_mass(const BoundaryPoint& zeta, double tau) const;

  BoundaryMeasure scaled(double factor) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Zero part (mass 1 - |a_n| at a_n) together with a boundary measure.
struct CompleteMeasure {
  ZeroSequence zeros;
  BoundaryMeasure boundary;

  double total_mass() const { return blaschke_sum(zeros) + boundary.total_mass(); }
};

/// f = C z^p B~(z) g_psi(z) with g_psi = exp(-(1/2pi) h_psi + i C').
struct BoundedFunctionSpec {
  double scale = 1.0;
  int origin_order = 0;
  ZeroSequence zeros;
  BoundaryMeasure boundary;
  double phase = 0.0;

  void validate() const;
  CompleteMeasure complete_measure() const { return {zeros, boundary}; }
};

/// lambda of the closed disk of radius tau about zeta. Tail zeros have no
/// known location and are counted only once the ball covers the whole disk
/// (tau >= 2).
double complete_measure_ball(const CompleteMeasure& lambda, const BoundaryPoint& zeta, double tau);

struct FrostmanSum {
  double value = 0.0;       ///< materialised sum plus the tail estimate
  double partial = 0.0;     ///< materialised zeros only
  double tail_bound = 0.0;  ///< worst-case tail contribution (included in value)
};

/// sum (1 - |a_k|) / |zeta0 - a_k|^{1 - gamma}. The tail term uses
/// |zeta0 - a_k| >= 1 - |a_k|; this is exact when tail zeros approach zeta0
/// radially and an upper bound otherwise.
FrostmanSum frostman_sum(const ZeroSequence& zs, const BoundaryPoint& zeta0, double gamma);

struct FrostmanOptions {
  double rel_change = 1e-6;  ///< successive refinements must agree to this
  double growth = 0.10;      ///< a refinement "grows" when it adds more than this fraction
  int growth_runs = 3;       ///< consecutive growing refinements that certify divergence
  double ceiling = 1e12;
  int max_refinements = 8;
};

struct FrostmanResult {
  double value = 0.0;
  bool divergent = false;
  std::string certificate;  ///< reason for divergence, empty otherwise
  double zero_part = 0.0;
  double boundary_part = 0.0;
  double tail_bound = 0.0;
  int refinements = 0;
  bool converged = true;
};

/// Integral of dlambda / |zeta0 - zeta|^{1 - gamma} over the closed disk.
/// Divergence is certified exactly for an atom at zeta0 and for a positive
/// density at zeta0 when gamma = 0; otherwise the boundary integral is
/// refined (Gauss nodes doubled per panel) until it settles, keeps growing,
/// or exceeds the ceiling.
FrostmanResult frostman_integral(const CompleteMeasure& lambda, const BoundaryPoint& zeta0,
                                 double gamma, const FrostmanOptions& opts = {});

/// Applies the same settle/grow rule across a family of measures indexed by
/// mesh depth (first, first + step, ...), for measures that discretise a
/// singular law.
FrostmanResult frostman_integral_refined(const std::function<CompleteMeasure(int)>& family,
                                         const BoundaryPoint& zeta0, double gamma, int first_depth,
                                         int step, int last_depth, const FrostmanOptions& opts = {});

using ZeroSelector = std::function<bool(std::size_t index, cplx zero)>;

/// Splits f into g h. The first factor keeps the selected zeros, the tail,
/// C, p and C', and boundary_fraction of the boundary measure; the second
/// takes the rest.
std::pair<BoundedFunctionSpec, BoundedFunctionSpec> divisor_split(const BoundedFunctionSpec& spec,
                                                                  const ZeroSelector& selector,
                                                                  double boundary_fraction);

/// chi < psi: every chi atom sits on a psi atom of no smaller mass and the
/// continuous chi increments never exceed the psi increments on the merged
/// partition.
bool dominates(const BoundaryMeasure& chi, const BoundaryMeasure& psi);

std::vector<double> modulus_of_continuity(const CompleteMeasure& lambda, const BoundaryPoint& zeta0,
                                          std::span<const double> taus);

/// The Frostman integral rewritten as the Stieltjes integral of
/// tau^{gamma - 1} against the modulus of continuity, evaluated by parts.
/// Needs gamma in (0, 1) and a measure without mass at zeta0.
double frostman_via_modulus(const CompleteMeasure& lambda, const BoundaryPoint& zeta0, double gamma,
                            int points_per_octave = 16);

}  // namespace diskarg
