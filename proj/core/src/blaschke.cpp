#include "diskarg/blaschke.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "diskarg/errors.hpp"
#include "diskarg/quadrature.hpp"
#include "diskarg/summation.hpp"

namespace diskarg {

namespace {

constexpr double kCutAngleTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct FactorParts {
  double re;   // Re of conj(d) * n, same argument as the factor
  double im;
  bool on_cut;
};

// n = |a|^2 - w, d = 1 - w with w = z conj(a); arg b = arg(n conj(d)).
// Im(n conj(d)) = -(1 - |a|^2) Im w avoids the cancellation in the direct
// product.
inline FactorParts factor_parts(cplx z, cplx a, double abs2, double deficit2) {
  const cplx w = z * std::conj(a);
  const double wr = w.real();
  const double wi = w.imag();
  FactorParts p;
  p.im = -deficit2 * wi;
  p.re = (abs2 - wr) * (1.0 - wr) + wi * wi;
  p.on_cut = wr > 0.0 && std::abs(wi) <= kCutAngleTol * wr && std::norm(z) >= abs2;
  return p;
}

double one_minus_abs2(cplx a) {
  const double m = std::abs(a);
  return (1.0 - m) * (1.0 + m);
}

void check_disk(cplx z) {
  if (!(std::norm(z) < 1.0)) throw Error(ErrorKind::invalid_argument, "point must lie in the open disk");
}

// Worst-case sum of |A(z, a_k)| over the tail: |A| <= 2 (1 - |a_k|) / (1 - |z|).
double tail_kernel_sum(const TailDescriptor& tail, double r) {
  if (tail.kind == TailKind::none) return 0.0;
  return 2.0 * tail.mass() / (1.0 - r);
}

}  // namespace

double TailDescriptor::deficit(std::size_t k) const {
  switch (kind) {
    case TailKind::none: return 0.0;
    case TailKind::geometric: return std::pow(param, static_cast<double>(k));
    case TailKind::power: return std::pow(static_cast<double>(k), -param);
  }
  return 0.0;
}

double TailDescriptor::mass() const { return power_sum(1.0); }

double TailDescriptor::max_term() const { return deficit(count + 1); }

double TailDescriptor::power_sum(double s) const {
  switch (kind) {
    case TailKind::none: return 0.0;
    case TailKind::geometric: {
      const double q = std::pow(param, s);
      return std::pow(param, s * static_cast<double>(count + 1)) / (1.0 - q);
    }
    case TailKind::power: {
      const double exponent = param * s;
      if (exponent <= 1.0) return kInf;
      return hurwitz_zeta(exponent, static_cast<double>(count + 1));
    }
  }
  return 0.0;
}

ZeroSequence::ZeroSequence(std::vector<cplx> zeros, TailDescriptor tail)
    : zeros_(std::move(zeros)), tail_(tail) {
  abs2_.reserve(zeros_.size());
  deficit2_.reserve(zeros_.size());
  for (const cplx a : zeros_) {
    const double m = std::abs(a);
    if (!(m > 0.0 && m < 1.0)) {
      throw Error(ErrorKind::invalid_argument, "zeros must satisfy 0 < |a| < 1");
    }
    abs2_.push_back(std::norm(a));
    deficit2_.push_back(one_minus_abs2(a));
  }
  suffix_deficit2_.assign(zeros_.size() + 1, 0.0);
  CompensatedSum suffix;
  for (std::size_t n = zeros_.size(); n-- > 0;) {
    suffix += deficit2_[n];
    suffix_deficit2_[n] = suffix.value();
  }
  switch (tail_.kind) {
    case TailKind::none: break;
    case TailKind::geometric:
      if (!(tail_.param > 0.0 && tail_.param < 1.0)) {
        throw Error(ErrorKind::invalid_argument, "geometric tail ratio must lie in (0, 1)");
      }
      break;
    case TailKind::power:
      if (!(tail_.param > 1.0)) {
        throw Error(ErrorKind::invalid_argument, "power tail exponent must exceed 1");
      }
      break;
  }
}

ZeroSequence concat(const ZeroSequence& first, const ZeroSequence& second) {
  if (first.tail().kind != TailKind::none && second.tail().kind != TailKind::none) {
    throw Error(ErrorKind::invalid_argument, "cannot concatenate two sequences that both carry tails");
  }
  std::vector<cplx> zeros(first.zeros().begin(), first.zeros().end());
  zeros.insert(zeros.end(), second.zeros().begin(), second.zeros().end());
  const TailDescriptor tail = first.tail().kind != TailKind::none ? first.tail() : second.tail();
  return ZeroSequence(std::move(zeros), tail);
}

cplx factor(cplx z, cplx xi) { return std::conj(xi) * (xi - z) / (1.0 - z * std::conj(xi)); }

bool on_cut(cplx z, cplx xi) {
  if (!(std::norm(z) < 1.0) || z == cplx{}) return false;
  return factor_parts(z, xi, std::norm(xi), one_minus_abs2(xi)).on_cut;
}

double factor_arg(cplx z, cplx xi) {
  if (z == xi) throw Error(ErrorKind::at_zero, "argument of a factor at its own zero");
  const FactorParts p = factor_parts(z, xi, std::norm(xi), one_minus_abs2(xi));
  if (p.on_cut) return -std::numbers::pi;
  return std::atan2(p.im, p.re);
}

ProductArg product_arg(const ZeroSequence& zs, cplx z, double tol) {
  check_disk(z);
  ProductArg out;
  const double r = std::abs(z);
  out.tail_bound = std::numbers::pi * tail_kernel_sum(zs.tail(), r);
  if (out.tail_bound > tol) {
    throw Error(ErrorKind::tail_bound_exceeded, "tail of the zero sequence cannot be certified");
  }
  CompensatedSum sum;
  const auto zeros = zs.zeros();
  for (std::size_t n = 0; n < zeros.size(); ++n) {
    if (z == zeros[n]) throw Error(ErrorKind::at_zero, "argument of a product at one of its zeros");
    const FactorParts p = factor_parts(z, zeros[n], zs.abs2(n), zs.deficit2(n));
    if (p.on_cut) {
      ++out.cut_count;
      sum += -std::numbers::pi;
    } else {
      sum += std::atan2(p.im, p.re);
    }
  }
  out.value = sum.value();
  return out;
}

ProductArg product_arg_truncated(const ZeroSequence& zs, cplx z, double tol) {
  check_disk(z);
  ProductArg out;
  const double r = std::abs(z);
  const double tail = std::numbers::pi * tail_kernel_sum(zs.tail(), r);
  if (tail > tol) throw Error(ErrorKind::tail_bound_exceeded, "tail of the zero sequence cannot be certified");
  // |A(z, a)| <= (1 - |a|^2) / (1 - |z|); keep the shortest prefix whose
  // dropped suffix fits in the remaining budget.
  const double scale = std::numbers::pi / (1.0 - r);
  const double budget = tol - tail;
  std::size_t lo = 0;
  std::size_t hi = zs.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (scale * zs.suffix_deficit2(mid) <= budget) hi = mid; else lo = mid + 1;
  }
  out.tail_bound = tail + scale * zs.suffix_deficit2(lo);
  CompensatedSum sum;
  const auto zeros = zs.zeros();
  for (std::size_t n = 0; n < lo; ++n) {
    if (z == zeros[n]) throw Error(ErrorKind::at_zero, "argument of a product at one of its zeros");
    const FactorParts p = factor_parts(z, zeros[n], zs.abs2(n), zs.deficit2(n));
    if (p.on_cut) {
      ++out.cut_count;
      sum += -std::numbers::pi;
    } else {
      sum += std::atan2(p.im, p.re);
    }
  }
  out.value = sum.value();
  return out;
}

ProductLog product_log(const ZeroSequence& zs, cplx z, double tol) {
  check_disk(z);
  ProductLog out;
  const double r = std::abs(z);
  if (zs.tail().kind != TailKind::none) {
    // -log|b| <= 2|A| needs every tail term to have |A| < 1/2.
    if (2.0 * zs.tail().max_term() / (1.0 - r) >= 0.5) {
      throw Error(ErrorKind::tail_bound_exceeded, "tail zeros too close to z for the modulus bound");
    }
    out.tail_bound = (2.0 + std::numbers::pi) * tail_kernel_sum(zs.tail(), r);
    if (out.tail_bound > tol) {
      throw Error(ErrorKind::tail_bound_exceeded, "tail of the zero sequence cannot be certified");
    }
  }
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  CompensatedComplexSum sum;
  const auto zeros = zs.zeros();
  for (std::size_t n = 0; n < zeros.size(); ++n) {
    const cplx a = zeros[n];
    if (z == a) throw Error(ErrorKind::at_zero, "logarithm of a product at one of its zeros");
    const FactorParts p = factor_parts(z, a, zs.abs2(n), zs.deficit2(n));
    double arg;
    if (p.on_cut) {
      ++out.cut_count;
      arg = -std::numbers::pi;
    } else {
      arg = std::atan2(p.im, p.re);
    }
    // |b| = |a| rho with rho the pseudohyperbolic distance;
    // 1 - rho^2 = (1 - |a|^2)(1 - |z|^2) / |1 - z conj(a)|^2.
    const double den2 = std::norm(1.0 - z * std::conj(a));
    const double gap = zs.deficit2(n) * one_minus_r2 / den2;
    const double log_rho = gap < 0.75 ? 0.5 * std::log1p(-gap)
                                      : std::log(std::abs(a - z)) - 0.5 * std::log(den2);
    sum += cplx{0.5 * std::log(zs.abs2(n)) + log_rho, arg};
  }
  out.value = sum.value();
  return out;
}

ProductValue product_eval(const ZeroSequence& zs, cplx z, double tol, bool normalized) {
  check_disk(z);
  ProductValue out;
  for (const cplx a : zs.zeros()) {
    if (z == a) {
      out.value = 0.0;
      out.at_zero = true;
      return out;
    }
  }
  const ProductLog lg = product_log(zs, z, tol);
  out.tail_bound = lg.tail_bound;
  cplx log_value = lg.value;
  if (normalized) {
    CompensatedSum shift;
    for (std::size_t n = 0; n < zs.size(); ++n) shift += -0.5 * std::log(zs.abs2(n));
    log_value += shift.value();
  }
  out.value = std::exp(log_value);
  return out;
}

double blaschke_sum(const ZeroSequence& zs) {
  CompensatedSum sum;
  for (const cplx a : zs.zeros()) sum += 1.0 - std::abs(a);
  sum += zs.tail().mass();
  return sum.value();
}

}  // namespace diskarg
