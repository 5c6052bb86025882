#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "diskarg/disk_geometry.hpp"

namespace diskarg {

enum class TailKind { none, geometric, power };

/// Law of the zeros that follow the materialised list. The k-th zero of the
/// law (k > count) has deficit 1 - |a_k| equal to param^k (geometric) or
/// k^-param (power). Directions of tail zeros are unknown, so every tail
/// estimate is a worst case over directions.
struct TailDescriptor {
  TailKind kind = TailKind::none;
  double param = 0.0;
  std::size_t count = 0;

  double deficit(std::size_t k) const;
  /// Sum of deficits over k > count.
  double mass() const;
  /// Largest single tail deficit (the k = count + 1 term).
  double max_term() const;
  /// Sum of deficit^s over k > count; +inf when the series diverges.
  double power_sum(double s) const;
};

class ZeroSequence {
 public:
  ZeroSequence() = default;
  explicit ZeroSequence(std::vector<cplx> zeros, TailDescriptor tail = {});

  std::span<const cplx> zeros() const noexcept { return zeros_; }
  const TailDescriptor& tail() const noexcept { return tail_; }
  std::size_t size() const noexcept { return zeros_.size(); }
  bool empty() const noexcept { return zeros_.empty() && tail_.kind == TailKind::none; }

  /// 1 - |a_n|^2, computed as (1 - |a_n|)(1 + |a_n|).
  double deficit2(std::size_t n) const noexcept { return deficit2_[n]; }
  double abs2(std::size_t n) const noexcept { return abs2_[n]; }
  /// Sum of deficit2(m) over m >= n; zero for n == size().
  double suffix_deficit2(std::size_t n) const noexcept { return suffix_deficit2_[n]; }

 private:
  std::vector<cplx> zeros_;
  std::vector<double> abs2_;
  std::vector<double> deficit2_;
  std::vector<double> suffix_deficit2_{0.0};
  TailDescriptor tail_;
};

/// Zeros of `first` followed by zeros of `second`. At most one of them may
/// carry a tail.
ZeroSequence concat(const ZeroSequence& first, const ZeroSequence& second);

/// Blaschke factor conj(xi) (xi - z) / (1 - z conj(xi)).
cplx factor(cplx z, cplx xi);

/// True when z = tau * xi for some tau >= 1 (angular tolerance 1e-12).
bool on_cut(cplx z, cplx xi);

/// Principal argument of factor(z, xi), with the value -pi on the cut
/// through xi. Throws at_zero when z == xi.
double factor_arg(cplx z, cplx xi);

struct ProductLog {
  cplx value;
  double tail_bound = 0.0;  ///< bound on |log of the neglected tail|
  int cut_count = 0;        ///< number of cuts z lies on
  bool on_cut() const noexcept { return cut_count > 0; }
};

/// Continuous branch of log B(z) = sum log b(z, a_n) with Im log B(0) = 0
/// (Re log B(0) = sum log |a_n|^2). Off the cuts the branch is continuous; on a cut the
/// factor's argument is -pi. Throws at_zero when z is a zero and
/// tail_bound_exceeded when the tail cannot be certified below tol.
ProductLog product_log(const ZeroSequence& zs, cplx z, double tol = 1e-12);

struct ProductArg {
  double value = 0.0;
  double tail_bound = 0.0;
  int cut_count = 0;
};

/// Imaginary part of product_log only; skips the modulus computation.
ProductArg product_arg(const ZeroSequence& zs, cplx z, double tol = 1e-12);

/// product_arg that may also drop a suffix of the materialised zeros while
/// the combined bound pi sum |A| over everything dropped stays below tol.
/// tail_bound reports that combined bound.
ProductArg product_arg_truncated(const ZeroSequence& zs, cplx z, double tol);

struct ProductValue {
  cplx value;
  bool at_zero = false;
  double tail_bound = 0.0;
};

/// B(z) (normalized = false) or B~(z), which divides every factor by |a_n|.
ProductValue product_eval(const ZeroSequence& zs, cplx z, double tol = 1e-12,
                          bool normalized = false);

/// Sum of 1 - |a_n| over the materialised zeros plus the tail mass.
double blaschke_sum(const ZeroSequence& zs);

}  // namespace diskarg
