#include "diskarg/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "diskarg/errors.hpp"
#include "diskarg/quadrature.hpp"
#include "diskarg/summation.hpp"

namespace diskarg {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kVertexTol = 1e-12;

double chord(double theta, double theta0) { return 2.0 * std::abs(std::sin(0.5 * (theta - theta0))); }

void check_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw Error(ErrorKind::invalid_argument, "gamma must lie in [0, 1)");
}

// Integral of |e^{it} - e^{i theta0}|^{gamma - 1} over t in [a, b] with a fixed
// Gauss rule of the given size per panel.
double kernel_integral(double a, double b, double theta0, double gamma, int nodes) {
  const double e = gamma - 1.0;
  // Distance-variable integrand: (2 sin(d/2) / d)^{gamma-1}, evaluated at x = -d.
  const auto smooth = [e](double x) {
    const double d = -x;
    if (d == 0.0) return 1.0;
    return std::pow(2.0 * std::sin(0.5 * d) / d, e);
  };
  const double s_lo = a - theta0;
  const double s_hi = b - theta0;
  static constexpr double kSplits[] = {-2.0 * pi, -pi, 0.0, pi, 2.0 * pi};
  static constexpr double kSingular[] = {-2.0 * pi, 0.0, 0.0, 2.0 * pi};
  CompensatedSum acc;
  for (int piece = 0; piece < 4; ++piece) {
    const double p_lo = std::max(s_lo, kSplits[piece]);
    const double p_hi = std::min(s_hi, kSplits[piece + 1]);
    if (!(p_hi > p_lo)) continue;
    const double d1 = std::abs(p_lo - kSingular[piece]);
    const double d2 = std::abs(p_hi - kSingular[piece]);
    const double d_lo = std::min(d1, d2);
    const double d_hi = std::max(d1, d2);
    acc += integrate_power_weight_fixed(smooth, -d_hi, -d_lo, 0.0, e, nodes, 0.0);
  }
  return acc.value();
}

bool segment_touches(double a, double b, double theta0) {
  const double t = wrap_angle(theta0);
  if (t >= a - kVertexTol && t <= b + kVertexTol) return true;
  // theta0 = pi is the same boundary point as -pi.
  return std::abs(t - pi) <= kVertexTol && a <= -pi + kVertexTol;
}

}  // namespace

BoundaryMeasure::BoundaryMeasure(std::vector<Atom> atoms, std::vector<double> breakpoints,
                                 std::vector<double> values)
    : atoms_(std::move(atoms)), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  for (Atom& a : atoms_) {
    if (!std::isfinite(a.theta) || !(a.mass > 0.0) || !std::isfinite(a.mass)) {
      throw Error(ErrorKind::invalid_argument, "atoms need a finite angle and positive finite mass");
    }
    a.theta = wrap_angle(a.theta);
  }
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return x.theta < y.theta; });
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i].theta == atoms_[i - 1].theta) {
      throw Error(ErrorKind::invalid_argument, "atoms must sit at distinct angles");
    }
  }
  if (breakpoints_.size() != values_.size()) {
    throw Error(ErrorKind::invalid_argument, "cdf breakpoints and values differ in length");
  }
  if (breakpoints_.size() == 1) {
    throw Error(ErrorKind::invalid_argument, "cdf needs at least two breakpoints");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    double& t = breakpoints_[i];
    if (!std::isfinite(t) || !std::isfinite(values_[i]) || t < -pi - 1e-12 || t > pi + 1e-12) {
      throw Error(ErrorKind::invalid_argument, "cdf breakpoints must lie in [-pi, pi]");
    }
    t = std::clamp(t, -pi, pi);
    if (i > 0 && !(t > breakpoints_[i - 1])) {
      throw Error(ErrorKind::invalid_argument, "cdf breakpoints must increase strictly");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw Error(ErrorKind::invalid_argument, "cdf values must be non-decreasing");
    }
  }
}

BoundaryMeasure BoundaryMeasure::point_mass(double theta, double mass) {
  return BoundaryMeasure({{theta, mass}}, {}, {});
}

BoundaryMeasure BoundaryMeasure::uniform(double total_mass) {
  return BoundaryMeasure({}, {-pi, pi}, {-0.5 * total_mass, 0.5 * total_mass});
}

double BoundaryMeasure::density(std::size_t i) const {
  return (values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
}

double BoundaryMeasure::atom_mass() const {
  CompensatedSum sum;
  for (const Atom& a : atoms_) sum += a.mass;
  return sum.value();
}

double BoundaryMeasure::continuous_mass() const {
  return values_.empty() ? 0.0 : values_.back() - values_.front();
}

double BoundaryMeasure::cdf(double t) const {
  if (breakpoints_.empty() || t <= breakpoints_.front()) return 0.0;
  if (t >= breakpoints_.back()) return continuous_mass();
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  const double w = (t - breakpoints_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
  return (values_[i] - values_.front()) + w * (values_[i + 1] - values_[i]);
}

double BoundaryMeasure::continuous_mass_between(double lo, double hi) const {
  return cdf(hi) - cdf(lo);
}

double BoundaryMeasure::ball_mass(const BoundaryPoint& zeta, double tau) const {
  if (tau >= 2.0) return total_mass();
  if (!(tau > 0.0)) return 0.0;
  CompensatedSum sum;
  for (const Atom& a : atoms_) {
    if (chord(a.theta, zeta.theta()) <= tau) sum += a.mass;
  }
  const double half = 2.0 * std::asin(0.5 * tau);
  const double lo = zeta.theta() - half;
  const double hi = zeta.theta() + half;
  if (lo < -pi) {
    sum += continuous_mass_between(-pi, hi);
    sum += continuous_mass_between(lo + 2.0 * pi, pi);
  } else if (hi > pi) {
    sum += continuous_mass_between(lo, pi);
    sum += continuous_mass_between(-pi, hi - 2.0 * pi);
  } else {
    sum += continuous_mass_between(lo, hi);
  }
  return sum.value();
}

BoundaryMeasure BoundaryMeasure::scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorKind::invalid_argument, "measure scale factor must be non-negative");
  }
  std::vector<Atom> atoms;
  if (factor > 0.0) {
    for (const Atom& a : atoms_) atoms.push_back({a.theta, a.mass * factor});
  }
  std::vector<double> values(values_);
  for (double& v : values) v *= factor;
  return BoundaryMeasure(std::move(atoms), breakpoints_, std::move(values));
}

void BoundedFunctionSpec::validate() const {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorKind::invalid_argument, "C must be positive");
  if (origin_order < 0) throw Error(ErrorKind::invalid_argument, "p must be non-negative");
  if (!std::isfinite(phase)) throw Error(ErrorKind::invalid_argument, "C' must be finite");
}

double complete_measure_ball(const CompleteMeasure& lambda, const BoundaryPoint& zeta, double tau) {
  if (!(tau > 0.0)) throw Error(ErrorKind::invalid_argument, "ball radius must be positive");
  const cplx center = zeta.value();
  CompensatedSum sum;
  for (const cplx a : lambda.zeros.zeros()) {
    if (std::abs(a - center) <= tau) sum += 1.0 - std::abs(a);
  }
  if (tau >= 2.0) sum += lambda.zeros.tail().mass();
  sum += lambda.boundary.ball_mass(zeta, tau);
  return sum.value();
}

FrostmanSum frostman_sum(const ZeroSequence& zs, const BoundaryPoint& zeta0, double gamma) {
  check_gamma(gamma);
  const cplx vertex = zeta0.value();
  CompensatedSum sum;
  for (const cplx a : zs.zeros()) {
    const double d = std::abs(vertex - a);
    if (d == 0.0) throw Error(ErrorKind::at_zero, "zero coincides with the vertex");
    sum += (1.0 - std::abs(a)) * std::pow(d, gamma - 1.0);
  }
  FrostmanSum out;
  out.partial = sum.value();
  out.tail_bound = zs.tail().power_sum(gamma);
  out.value = out.partial + out.tail_bound;
  return out;
}

FrostmanResult frostman_integral(const CompleteMeasure& lambda, const BoundaryPoint& zeta0, double gamma,
                                 const FrostmanOptions& opts) {
  check_gamma(gamma);
  FrostmanResult out;
  const FrostmanSum zero_part = frostman_sum(lambda.zeros, zeta0, gamma);
  out.zero_part = zero_part.value;
  out.tail_bound = zero_part.tail_bound;
  if (!std::isfinite(zero_part.value)) {
    out.divergent = true;
    out.converged = false;
    out.certificate = "tail of the zero sequence is not summable at this gamma";
  }

  const double theta0 = zeta0.theta();
  CompensatedSum atoms;
  for (const Atom& a : lambda.boundary.atoms()) {
    const double c = chord(a.theta, theta0);
    if (c <= kVertexTol) {
      out.divergent = true;
      out.converged = false;
      out.certificate = "atom at the vertex";
      out.value = kInf;
      out.boundary_part = kInf;
      return out;
    }
    atoms += a.mass * std::pow(c, gamma - 1.0);
  }

  const BoundaryMeasure& m = lambda.boundary;
  if (gamma == 0.0) {
    for (std::size_t i = 0; i < m.segment_count(); ++i) {
      if (m.density(i) > 0.0 && segment_touches(m.breakpoints()[i], m.breakpoints()[i + 1], theta0)) {
        out.divergent = true;
        out.converged = false;
        out.certificate = "positive density at the vertex with gamma = 0 (logarithmic divergence)";
        out.value = kInf;
        out.boundary_part = kInf;
        return out;
      }
    }
  }

  auto continuous = [&](int nodes) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < m.segment_count(); ++i) {
      const double rho = m.density(i);
      if (rho == 0.0) continue;
      acc += rho * kernel_integral(m.breakpoints()[i], m.breakpoints()[i + 1], theta0, gamma, nodes);
    }
    return acc.value();
  };

  double previous = continuous(4);
  double current = previous;
  int growing = 0;
  out.converged = m.segment_count() == 0;
  for (int level = 1; level <= opts.max_refinements && !out.converged; ++level) {
    current = continuous(4 << level);
    out.refinements = level;
    if (std::abs(current - previous) <= opts.rel_change * std::abs(current)) {
      out.converged = true;
      break;
    }
    growing = (current - previous > opts.growth * std::abs(previous)) ? growing + 1 : 0;
    if (growing >= opts.growth_runs || current > opts.ceiling) {
      out.divergent = true;
      out.converged = false;
      out.certificate = current > opts.ceiling ? "boundary integral exceeds the ceiling"
                                               : "boundary integral keeps growing under refinement";
      break;
    }
    previous = current;
  }
  out.boundary_part = atoms.value() + current;
  out.value = out.divergent ? kInf : out.zero_part + out.boundary_part;
  return out;
}

FrostmanResult frostman_integral_refined(const std::function<CompleteMeasure(int)>& family,
                                         const BoundaryPoint& zeta0, double gamma, int first_depth,
                                         int step, int last_depth, const FrostmanOptions& opts) {
  if (step < 1 || last_depth < first_depth) {
    throw Error(ErrorKind::invalid_argument, "refinement depths must increase");
  }
  FrostmanResult previous = frostman_integral(family(first_depth), zeta0, gamma, opts);
  if (previous.divergent) return previous;
  int growing = 0;
  int refinements = 0;
  for (int depth = first_depth + step; depth <= last_depth; depth += step) {
    FrostmanResult current = frostman_integral(family(depth), zeta0, gamma, opts);
    current.refinements = ++refinements;
    if (current.divergent) {
      current.converged = false;
      return current;
    }
    const double change = current.value - previous.value;
    if (std::abs(change) <= opts.rel_change * std::abs(current.value)) {
      current.converged = true;
      return current;
    }
    growing = change > opts.growth * std::abs(previous.value) ? growing + 1 : 0;
    if (growing >= opts.growth_runs || current.value > opts.ceiling) {
      current.divergent = true;
      current.converged = false;
      current.certificate = "integral keeps growing as the measure mesh is refined";
      current.value = kInf;
      return current;
    }
    previous = current;
  }
  previous.converged = false;
  return previous;
}

std::pair<BoundedFunctionSpec, BoundedFunctionSpec> divisor_split(const BoundedFunctionSpec& spec,
                                                                  const ZeroSelector& selector,
                                                                  double boundary_fraction) {
  if (!(boundary_fraction >= 0.0 && boundary_fraction <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "boundary fraction must lie in [0, 1]");
  }
  std::vector<cplx> kept;
  std::vector<cplx> rest;
  const auto zeros = spec.zeros.zeros();
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    (selector(i, zeros[i]) ? kept : rest).push_back(zeros[i]);
  }
  BoundedFunctionSpec first;
  first.scale = spec.scale;
  first.origin_order = spec.origin_order;
  first.phase = spec.phase;
  first.zeros = ZeroSequence(std::move(kept), spec.zeros.tail());
  first.boundary = spec.boundary.scaled(boundary_fraction);
  BoundedFunctionSpec second;
  second.zeros = ZeroSequence(std::move(rest));
  second.boundary = spec.boundary.scaled(1.0 - boundary_fraction);
  return {std::move(first), std::move(second)};
}

bool dominates(const BoundaryMeasure& chi, const BoundaryMeasure& psi) {
  const double scale = std::max({chi.total_mass(), psi.total_mass(), 1e-300});
  const double tol = 1e-12 * scale;
  for (const Atom& a : chi.atoms()) {
    const auto match = std::find_if(psi.atoms().begin(), psi.atoms().end(), [&](const Atom& b) {
      return std::abs(wrap_angle(a.theta - b.theta)) <= kVertexTol;
    });
    if (match == psi.atoms().end() || a.mass > match->mass + tol) return false;
  }
  std::vector<double> cuts(chi.breakpoints().begin(), chi.breakpoints().end());
  cuts.insert(cuts.end(), psi.breakpoints().begin(), psi.breakpoints().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double dchi = chi.continuous_mass_between(cuts[i], cuts[i + 1]);
    const double dpsi = psi.continuous_mass_between(cuts[i], cuts[i + 1]);
    if (dchi > dpsi + tol) return false;
  }
  return true;
}

std::vector<double> modulus_of_continuity(const CompleteMeasure& lambda, const BoundaryPoint& zeta0,
                                          std::span<const double> taus) {
  std::vector<double> out;
  out.reserve(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > 0.0) || (i > 0 && taus[i] < taus[i - 1])) {
      throw Error(ErrorKind::invalid_argument, "radii must be positive and ascending");
    }
    out.push_back(complete_measure_ball(lambda, zeta0, taus[i]));
  }
  return out;
}

double frostman_via_modulus(const CompleteMeasure& lambda, const BoundaryPoint& zeta0, double gamma,
                            int points_per_octave) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorKind::invalid_argument, "gamma must lie in (0, 1)");
  if (lambda.zeros.tail().kind != TailKind::none) {
    throw Error(ErrorKind::invalid_argument, "modulus form needs a materialised zero sequence");
  }
  const double theta0 = zeta0.theta();
  std::vector<double> marks;
  for (const cplx a : lambda.zeros.zeros()) marks.push_back(std::abs(a - zeta0.value()));
  for (const Atom& a : lambda.boundary.atoms()) marks.push_back(chord(a.theta, theta0));
  for (const double t : lambda.boundary.breakpoints()) marks.push_back(chord(t, theta0));
  double tau_min = 1e-9;
  for (const double t : marks) {
    if (t <= 0.0) throw Error(ErrorKind::invalid_argument, "measure has mass at the vertex");
    tau_min = std::min(tau_min, 0.5 * t);
  }
  std::vector<double> grid = marks;
  const double ratio = std::exp2(1.0 / points_per_octave);
  for (double t = tau_min; t < 2.0; t *= ratio) grid.push_back(t);
  grid.push_back(2.0);
  std::erase_if(grid, [&](double t) { return t < tau_min || t > 2.0; });
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const auto omega = [&](double tau) { return complete_measure_ball(lambda, zeta0, tau); };
  const GaussRule& gl = gauss_legendre(8);
  CompensatedSum inner;
  // omega grows linearly below tau_min (no atoms or zeros there).
  inner += omega(tau_min) / tau_min * std::pow(tau_min, gamma) / gamma;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double half = 0.5 * (grid[i + 1] - grid[i]);
    const double mid = 0.5 * (grid[i + 1] + grid[i]);
    CompensatedSum panel;
    for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
      const double tau = mid + half * gl.nodes[j];
      panel += gl.weights[j] * std::pow(tau, gamma - 2.0) * omega(tau);
    }
    inner += half * panel.value();
  }
  return std::pow(2.0, gamma - 1.0) * omega(2.0) + (1.0 - gamma) * inner.value();
}

}  // namespace diskarg
