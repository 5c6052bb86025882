#include "diskarg/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <utility>

#include "diskarg/errors.hpp"
#include "diskarg/summation.hpp"

namespace diskarg {

GaussRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1 || alpha <= -1.0 || beta <= -1.0) {
    throw Error(ErrorKind::invalid_argument, "gauss_jacobi needs n >= 1 and alpha, beta > -1");
  }
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    // (k+a+b)/(s-1) is 0/0 at k = 1 when a+b -> -1; the ratio is exactly 1 there.
    const double ratio = (k == 1) ? 1.0 : (k + ab) / (s - 1.0);
    sub[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) / (s * s * (s + 1.0)) * ratio);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag[0];
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  for (int j = 0; j < n; ++j) {
    rule.nodes[j] = solver.eigenvalues()[j];
    const double v0 = solver.eigenvectors()(0, j);
    rule.weights[j] = mu0 * v0 * v0;
  }
  return rule;
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_jacobi(n, 0.0, 0.0)).first;
  return it->second;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "hurwitz_zeta needs s > 1 and a > 0");
  }
  static constexpr double kB2j[] = {1.0 / 6.0,       -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
                                    5.0 / 66.0,      -691.0 / 2730.0, 7.0 / 6.0,
                                    -3617.0 / 510.0};
  const int head = a >= 12.0 ? 0 : static_cast<int>(std::ceil(12.0 - a));
  CompensatedSum sum;
  for (int k = 0; k < head; ++k) sum += std::pow(a + k, -s);
  const double x = a + head;
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);
  double rising = s;           // s (s+1) ... (s+2j-2)
  double factorial = 2.0;      // (2j)!
  double power = std::pow(x, -s - 1.0);
  for (int j = 1; j <= 8; ++j) {
    sum += kB2j[j - 1] / factorial * rising * power;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    power /= x * x;
  }
  return sum.value();
}

namespace {

const GaussRule& jacobi_rule_cached(int n, double beta) {
  thread_local std::map<std::pair<int, double>, GaussRule> cache;
  auto key = std::make_pair(n, beta);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 64) cache.clear();
    it = cache.emplace(key, gauss_jacobi(n, 0.0, beta)).first;
  }
  return it->second;
}

/// Integrand expressed in the distance-to-singularity variable u = c - x.
class PanelIntegrator {
 public:
  PanelIntegrator(const std::function<double(double)>& h, double c, double exponent, int nodes)
      : h_(h), c_(c), exponent_(exponent), legendre_(gauss_legendre(nodes)),
        jacobi_(exponent > -1.0 ? &jacobi_rule_cached(nodes, exponent) : nullptr) {}

  double operator()(double u0, double u1, bool singular) {
    CompensatedSum acc;
    if (singular) {
      const double half = 0.5 * u1;
      for (std::size_t j = 0; j < jacobi_->nodes.size(); ++j) {
        const double u = half * (1.0 + jacobi_->nodes[j]);
        acc += jacobi_->weights[j] * value_at(u);
      }
      return std::pow(half, exponent_ + 1.0) * acc.value();
    }
    const double half = 0.5 * (u1 - u0);
    const double mid = 0.5 * (u1 + u0);
    for (std::size_t j = 0; j < legendre_.nodes.size(); ++j) {
      const double u = mid + half * legendre_.nodes[j];
      acc += legendre_.weights[j] * std::pow(u, exponent_) * value_at(u);
    }
    return half * acc.value();
  }

  int evaluations() const { return evaluations_; }

 private:
  double value_at(double u) {
    ++evaluations_;
    const double v = h_(c_ - u);
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::nonconvergent_quadrature, "integrand is not finite at a node");
    }
    return v;
  }

  const std::function<double(double)>& h_;
  double c_;
  double exponent_;
  const GaussRule& legendre_;
  const GaussRule* jacobi_;
  int evaluations_ = 0;
};

std::vector<double> graded_breakpoints(double u_lo, double u_hi, double floor, bool grade_upper) {
  std::vector<double> pts;
  if (u_lo <= 0.0) {
    std::vector<double> down{u_hi};
    while (down.back() > floor && down.size() < 200) down.push_back(0.5 * down.back());
    pts.push_back(0.0);
    pts.insert(pts.end(), down.rbegin(), down.rend());
  } else {
    pts.push_back(u_lo);
    double u = 2.0 * u_lo;
    while (u < u_hi && pts.size() < 200) {
      pts.push_back(u);
      u *= 2.0;
    }
    pts.push_back(u_hi);
  }
  if (grade_upper) {
    const double width = u_hi - pts.front();
    for (double d = 0.5 * width; d > floor; d *= 0.5) pts.push_back(u_hi - d);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void check_domain(double lo, double hi, double c, double exponent) {
  if (!(lo <= hi) || !(c >= hi) || !std::isfinite(c) || !(exponent > -1.0 || c > hi)) {
    throw Error(ErrorKind::invalid_argument,
                "integrate_power_weight needs lo <= hi <= c, and exponent > -1 when hi == c");
  }
}

}  // namespace

QuadResult integrate_power_weight(const std::function<double(double)>& h, double lo, double hi,
                                  double c, double exponent, const QuadOptions& opts) {
  check_domain(lo, hi, c, exponent);
  QuadResult result;
  if (lo == hi) return result;
  const double u_lo = c - hi;
  const double u_hi = c - lo;
  const double floor = opts.grading_floor > 0.0 ? opts.grading_floor : (u_hi - u_lo) / 256.0;
  const auto pts = graded_breakpoints(u_lo, u_hi, floor, opts.grade_lower);

  struct Panel {
    double u0, u1;
    bool singular;
    double coarse, left, right, err;
  };
  auto by_error = [](const Panel& a, const Panel& b) { return a.err < b.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> queue(by_error);

  PanelIntegrator integrate(h, c, exponent, opts.nodes);
  auto finish = [&](double u0, double u1, bool singular, double coarse) {
    const double mid = 0.5 * (u0 + u1);
    Panel p{u0, u1, singular, coarse, integrate(u0, mid, singular), integrate(mid, u1, false), 0.0};
    p.err = std::abs(p.coarse - (p.left + p.right));
    return p;
  };

  double total_err = 0.0;
  double total_val = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool singular = pts[i] == 0.0;
    Panel p = finish(pts[i], pts[i + 1], singular, integrate(pts[i], pts[i + 1], singular));
    total_err += p.err;
    total_val += p.left + p.right;
    queue.push(p);
  }

  auto target = [&](double value) { return std::max(opts.abs_tol, opts.rel_tol * std::abs(value)); };
  while (total_err > target(total_val)) {
    if (static_cast<int>(queue.size()) >= opts.max_panels) {
      result.converged = false;
      break;
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.u0 + worst.u1);
    if (!(mid > worst.u0 && mid < worst.u1)) {
      // Panel cannot be bisected further in double precision.
      queue.push(worst);
      result.converged = false;
      break;
    }
    Panel a = finish(worst.u0, mid, worst.singular, worst.left);
    Panel b = finish(mid, worst.u1, false, worst.right);
    total_err += a.err + b.err - worst.err;
    total_val += (a.left + a.right + b.left + b.right) - (worst.left + worst.right);
    queue.push(a);
    queue.push(b);
    if (total_err <= target(total_val) || queue.size() % 64 == 0) {
      // Resynchronise the running totals to avoid drift.
      CompensatedSum e, v;
      auto copy = queue;
      while (!copy.empty()) {
        e += copy.top().err;
        v += copy.top().left + copy.top().right;
        copy.pop();
      }
      total_err = e.value();
      total_val = v.value();
    }
  }

  CompensatedSum e, v;
  result.panels = static_cast<int>(queue.size());
  while (!queue.empty()) {
    e += queue.top().err;
    v += queue.top().left + queue.top().right;
    queue.pop();
  }
  result.value = v.value();
  result.error = e.value();
  result.evaluations = integrate.evaluations();
  if (result.error > target(result.value)) result.converged = false;
  return result;
}

double integrate_power_weight_fixed(const std::function<double(double)>& h, double lo, double hi,
                                    double c, double exponent, int nodes, double grading_floor) {
  check_domain(lo, hi, c, exponent);
  if (lo == hi) return 0.0;
  const double u_lo = c - hi;
  const double u_hi = c - lo;
  const double floor = grading_floor > 0.0 ? grading_floor : (u_hi - u_lo) / 256.0;
  const auto pts = graded_breakpoints(u_lo, u_hi, floor, false);
  PanelIntegrator integrate(h, c, exponent, nodes);
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    acc += integrate(pts[i], pts[i + 1], pts[i] == 0.0);
  }
  return acc.value();
}

}  // namespace diskarg
