#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "diskarg/errors.hpp"
#include "diskarg/experiments.hpp"
#include "diskarg/herglotz.hpp"
#include "diskarg/measures.hpp"
#include "oracles.hpp"

using namespace diskarg;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

// int over [a, b] of |e^{it} - e^{i theta0}|^{gamma - 1} dt, split at the
// singular points so each piece is singular at most at its left end.
long double kernel_oracle(long double a, long double b, long double theta0, double gamma) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  // (point, is a singular point of the kernel)
  std::vector<std::pair<long double, bool>> cuts{{a, false}, {b, false}};
  for (long double s : {theta0 - two_pi, theta0, theta0 + two_pi}) {
    if (s > a && s < b) cuts.push_back({s, true});
  }
  std::sort(cuts.begin(), cuts.end());
  // Integral over [end, end + dir L], with the kernel written in the offset u from end.
  const auto half = [&](std::pair<long double, bool> end, long double L, long double dir) {
    long double phi = end.first - theta0;
    phi -= two_pi * std::round(phi / two_pi);
    if (end.second) phi = 0.0L;
    const auto g = [&](long double u) { return std::pow(2.0L * std::fabs(std::sin(0.5L * (phi + dir * u))), gamma - 1.0L); };
    // u^{gamma - 1} becomes s^{k gamma - 1}; k gamma >= 3 keeps the integrand smooth.
    const int k = std::max(12, static_cast<int>(std::ceil(3.0 / std::max(gamma, 0.01))));
    return oracle::singular_at_origin(g, L, k, 400);
  };
  long double total = 0.0L;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const long double L = 0.5L * (cuts[i + 1].first - cuts[i].first);
    total += half(cuts[i], L, 1.0L) + half(cuts[i + 1], L, -1.0L);
  }
  return total;
}

long double frostman_oracle(const BoundaryMeasure& m, double theta0, double gamma) {
  long double total = 0.0L;
  for (const Atom& a : m.atoms()) total += a.mass * std::pow(2.0L * std::fabs(std::sin(0.5L * (a.theta - theta0))), gamma - 1.0L);
  for (std::size_t i = 0; i < m.segment_count(); ++i) {
    total += m.density(i) * kernel_oracle(m.breakpoints()[i], m.breakpoints()[i + 1], theta0, gamma);
  }
  return total;
}

BoundaryMeasure random_pl(std::mt19937_64& rng, int segments) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> bps{-pi};
  for (int i = 1; i < segments; ++i) bps.push_back(-pi + 2.0 * pi * u(rng));
  bps.push_back(pi);
  std::sort(bps.begin(), bps.end());
  std::vector<double> vals{0.0};
  for (std::size_t i = 1; i < bps.size(); ++i) vals.push_back(vals.back() + (u(rng) < 0.8 ? u(rng) : 0.0));
  return BoundaryMeasure({}, bps, vals);
}

}  // namespace

TEST_CASE("singular_at_origin oracle sanity") {
  // int_0^1 u^{-1/2} du = 2
  const long double v = oracle::singular_at_origin([](long double u) { return 1.0L / std::sqrt(u); }, 1.0L, 12, 50);
  CHECK(std::fabs(v - 2.0L) < 1e-15L);
  // int_0^pi (2 sin(u/2))^{-1/2} du against a plain fine-mesh sum away from 0.
  const long double w = oracle::singular_at_origin([](long double u) { return std::pow(2.0L * std::sin(0.5L * u), -0.5L); },
                                                   std::numbers::pi_v<long double>, 12, 400);
  const long double head = 2.0L * std::sqrt(1e-4L);  // int_0^1e-4 u^{-1/2}, kernel ~ u^{-1/2} there
  const long double rest = oracle::gl5([](long double u) { return std::pow(2.0L * std::sin(0.5L * u), -0.5L); },
                                       1e-4L, std::numbers::pi_v<long double>, 20000);
  CHECK(std::fabs(w - head - rest) < 1e-8L);
}

TEST_CASE("boundary measure validation") {
  CHECK_THROWS_AS(BoundaryMeasure({}, {0.0, 1.0}, {1.0, 0.5}), Error);
  CHECK_THROWS_AS(BoundaryMeasure({}, {0.0, 0.0}, {0.0, 1.0}), Error);
  CHECK_THROWS_AS(BoundaryMeasure({}, {0.0, 4.0}, {0.0, 1.0}), Error);
  CHECK_THROWS_AS(BoundaryMeasure({{0.1, 1.0}, {0.1, 2.0}}, {}, {}), Error);
  CHECK_THROWS_AS(BoundaryMeasure({{0.1, -1.0}}, {}, {}), Error);
  CHECK_THROWS_AS(BoundaryMeasure({}, {0.0}, {0.0}), Error);
  const BoundaryMeasure m({{3.0 * pi, 1.0}}, {-1.0, 0.0, 2.0}, {5.0, 5.5, 7.5});
  CHECK(m.atoms()[0].theta == doctest::Approx(pi));
  CHECK(m.continuous_mass() == 2.5);
  CHECK(m.cdf(-0.5) == doctest::Approx(0.25));
  CHECK(m.cdf(1.0) == doctest::Approx(1.5));
  CHECK(m.density(1) == doctest::Approx(1.0));
  CHECK(m.total_mass() == 3.5);
}

TEST_CASE("complete_measure_ball examples") {
  const BoundaryPoint zeta(0.4);
  const cplx a = 0.9 * zeta.value();
  const CompleteMeasure single{ZeroSequence({a}), {}};
  const double tau = 2.0 * std::abs(a - zeta.value());
  CHECK(complete_measure_ball(single, zeta, tau) == doctest::Approx(1.0 - std::abs(a)));
  const CompleteMeasure mixed{ZeroSequence({0.5, {0.0, -0.7}}), BoundaryMeasure({{1.0, 0.3}}, {-1.0, 1.0}, {0.0, 2.0})};
  CHECK(complete_measure_ball(mixed, zeta, 2.0) == doctest::Approx(mixed.total_mass()).epsilon(1e-15));
  CHECK(complete_measure_ball(mixed, zeta, 7.0) == doctest::Approx(mixed.total_mass()).epsilon(1e-15));
  const CompleteMeasure atom{ZeroSequence(), BoundaryMeasure::point_mass(zeta.theta(), 1.0)};
  CHECK(complete_measure_ball(atom, zeta, 1e-6) == 1.0);
}

TEST_CASE("ball mass wraps around the point -1") {
  const BoundaryMeasure m = BoundaryMeasure::uniform(2.0 * pi);  // density 1
  const double tau = 0.2;
  const double arc = 2.0 * 2.0 * std::asin(tau / 2.0);
  CHECK(m.ball_mass(BoundaryPoint(pi), tau) == doctest::Approx(arc).epsilon(1e-14));
  CHECK(m.ball_mass(BoundaryPoint(-pi + 0.05), tau) == doctest::Approx(arc).epsilon(1e-14));
  CHECK(m.ball_mass(BoundaryPoint(0.3), tau) == doctest::Approx(arc).epsilon(1e-14));
}

TEST_CASE("frostman_integral: atom at the vertex diverges") {
  for (double gamma : {0.0, 0.3, 0.99}) {
    const FrostmanResult r = frostman_integral({ZeroSequence(), atom_measure()}, BoundaryPoint(0.0), gamma);
    CHECK(r.divergent);
    CHECK_FALSE(r.certificate.empty());
  }
  CHECK(frostman_integral({}, BoundaryPoint(1.0), 0.5).value == 0.0);
}

TEST_CASE("frostman_sum: geometric radial sequence") {
  // Oracle: the series sum_{k>=1} 2^{-k/2} in closed form, and the
  // materialised part summed directly in long double.
  const long double limit = 1.0L / (std::sqrt(2.0L) - 1.0L);
  long double partial = 0.0L;
  for (int k = 1; k <= 40; ++k) {
    const long double a = 1.0L - std::ldexp(1.0L, -k);
    partial += (1.0L - a) / std::sqrt(1.0L - a);
  }
  const ZeroSequence zs = gen_geometric_radial(0.5, 40, BoundaryPoint(0.0), true);
  const FrostmanSum s = frostman_sum(zs, BoundaryPoint(0.0), 0.5);
  CHECK(std::fabs(s.partial - partial) < 1e-13L);
  CHECK(std::fabs(s.value - limit) < 1e-6L);
  CHECK(s.tail_bound < 3e-6);
  const FrostmanResult r = frostman_integral({zs, {}}, BoundaryPoint(0.0), 0.5);
  CHECK(std::fabs(r.value - limit) < 1e-6L);
}

TEST_CASE("frostman_sum small cases") {
  CHECK(frostman_sum(ZeroSequence({0.5}), BoundaryPoint(0.0), 0.0).value == 1.0);
  std::vector<cplx> real_zeros{0.1, 0.5, 0.9, 0.99};
  CHECK(frostman_sum(ZeroSequence(real_zeros), BoundaryPoint(0.0), 0.0).value == doctest::Approx(4.0));
  CHECK_THROWS_AS(frostman_sum(ZeroSequence({0.5}), BoundaryPoint(0.0), 1.0), Error);
}

TEST_CASE("frostman_sum decreases in gamma when every |zeta0 - a| <= 1") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<cplx> zeros;
    for (int i = 0; i < 30; ++i) {
      // Points of the disk within distance 1 of zeta0 = 1.
      const cplx a = 1.0 - std::polar(0.01 + 0.98 * u(rng), (u(rng) - 0.5) * 0.9 * pi);
      if (std::abs(a) < 1.0 && std::abs(a) > 0.0) zeros.push_back(a);
    }
    const ZeroSequence zs(zeros);
    double previous = std::numeric_limits<double>::infinity();
    for (double gamma = 0.0; gamma < 1.0; gamma += 0.1) {
      const double v = frostman_sum(zs, BoundaryPoint(0.0), gamma).value;
      CHECK(v <= previous * (1.0 + 1e-15));
      previous = v;
    }
  }
}

TEST_CASE("frostman_integral on piecewise-linear measures against the oracle") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const BoundaryMeasure m = random_pl(rng, 1 + trial % 5);
    const double theta0 = -pi + 2.0 * pi * u(rng);
    const double gamma = 0.05 + 0.9 * u(rng);
    const FrostmanResult r = frostman_integral({ZeroSequence(), m}, BoundaryPoint(theta0), gamma);
    const long double want = frostman_oracle(m, theta0, gamma);
    CHECK(r.converged);
    CHECK_FALSE(r.divergent);
    CHECK(oracle::rel_err(r.value, want) < 1e-9L);
  }
}

TEST_CASE("uniform measure at gamma = 0 diverges, away from its support it does not") {
  const FrostmanResult r = frostman_integral({ZeroSequence(), BoundaryMeasure::uniform(1.0)}, BoundaryPoint(0.2), 0.0);
  CHECK(r.divergent);
  const BoundaryMeasure arc({}, {0.5, 1.5}, {0.0, 1.0});
  const FrostmanResult away = frostman_integral({ZeroSequence(), arc}, BoundaryPoint(-1.0), 0.0);
  CHECK_FALSE(away.divergent);
  CHECK(oracle::rel_err(away.value, frostman_oracle(arc, -1.0, 0.0)) < 1e-10L);
}

TEST_CASE("power-law boundary measure: finite above the threshold, divergent below") {
  const double alpha = 0.5;
  const auto family = [&](int depth) { return CompleteMeasure{ZeroSequence(), power_law_measure(alpha, depth)}; };
  // exact: 2 int_0^pi (1 - alpha) t^{-alpha} (2 sin(t/2))^{gamma - 1} dt
  const double gamma = 0.8;
  const long double exact = 2.0L * oracle::singular_at_origin(
      [&](long double t) { return (1.0L - alpha) * std::pow(t, -alpha) * std::pow(2.0L * std::sin(0.5L * t), gamma - 1.0L); },
      std::numbers::pi_v<long double>, 16, 400);
  const FrostmanResult fin = frostman_integral_refined(family, BoundaryPoint(0.0), gamma, 8, 4, 200);
  CHECK(fin.converged);
  CHECK(oracle::rel_err(fin.value, exact) < 1e-4L);
  const FrostmanResult div = frostman_integral_refined(family, BoundaryPoint(0.0), 0.2, 8, 4, 200);
  CHECK(div.divergent);
}

TEST_CASE("divisor_split examples") {
  BoundedFunctionSpec spec;
  spec.scale = 0.7;
  spec.origin_order = 2;
  spec.phase = 0.4;
  spec.zeros = ZeroSequence({0.5, {0.1, 0.8}, {-0.3, -0.3}, 0.95});
  spec.boundary = BoundaryMeasure({{1.0, 0.5}}, {-1.0, 2.0}, {0.0, 3.0});

  auto [all, rest] = divisor_split(spec, [](std::size_t, cplx) { return true; }, 1.0);
  CHECK(all.zeros.size() == 4);
  CHECK(all.boundary.total_mass() == spec.boundary.total_mass());
  CHECK(all.scale == 0.7);
  CHECK(rest.zeros.size() == 0);
  CHECK(rest.boundary.total_mass() == 0.0);
  CHECK(rest.scale == 1.0);

  auto [even, odd] = divisor_split(spec, [](std::size_t i, cplx) { return i % 2 == 0; }, 0.5);
  CHECK(even.zeros.size() == 2);
  CHECK(odd.zeros.size() == 2);
  const BoundaryPoint zeta(0.9);
  for (double tau : {0.1, 0.5, 1.0, 1.9, 2.0}) {
    const double whole = complete_measure_ball(spec.complete_measure(), zeta, tau);
    const double sum = complete_measure_ball(even.complete_measure(), zeta, tau) +
                       complete_measure_ball(odd.complete_measure(), zeta, tau);
    CHECK(std::abs(whole - sum) <= 4.0 * eps * spec.complete_measure().total_mass());
  }

  BoundedFunctionSpec ex1 = atom_spec();
  auto [g, h] = divisor_split(ex1, [](std::size_t, cplx) { return true; }, 0.3);
  CHECK(frostman_integral(g.complete_measure(), BoundaryPoint(0.0), 0.5).divergent);
  CHECK(frostman_integral(h.complete_measure(), BoundaryPoint(0.0), 0.5).divergent);
}

TEST_CASE("additivity of ball masses over random splits") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const BoundedFunctionSpec spec = random_spec(rng);
    const double fraction = u(rng);
    std::vector<bool> keep(spec.zeros.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = u(rng) < 0.5;
    auto [g, h] = divisor_split(spec, [&](std::size_t i, cplx) { return static_cast<bool>(keep[i]); }, fraction);
    const BoundaryPoint zeta(-pi + 2.0 * pi * u(rng));
    const double tau = 2.2 * u(rng) + 1e-9;
    const double whole = complete_measure_ball(spec.complete_measure(), zeta, tau);
    const double sum = complete_measure_ball(g.complete_measure(), zeta, tau) +
                       complete_measure_ball(h.complete_measure(), zeta, tau);
    CHECK(std::abs(whole - sum) <= 4.0 * eps * std::max(1.0, spec.complete_measure().total_mass()));
  }
}

TEST_CASE("dominates") {
  const BoundaryMeasure psi({{0.5, 2.0}}, {-1.0, 0.0, 1.0}, {0.0, 1.0, 3.0});
  CHECK(dominates(psi, psi));
  CHECK(dominates(psi.scaled(0.5), psi));
  CHECK_FALSE(dominates(BoundaryMeasure({{0.7, 0.1}}, {}, {}), psi));
  CHECK_FALSE(dominates(psi.scaled(1.5), psi));
  // Same total continuous mass but concentrated where psi is thin.
  CHECK_FALSE(dominates(BoundaryMeasure({}, {-1.0, 0.0}, {0.0, 2.0}), psi));
  CHECK(dominates(BoundaryMeasure({}, {-0.5, 0.5}, {0.0, 1.0}), psi));
  CHECK(dominates(BoundaryMeasure(), psi));
}

TEST_CASE("modulus of continuity") {
  const std::vector<double> taus{1e-6, 1e-3, 0.1, 1.0, 2.0};
  for (double w : modulus_of_continuity({}, BoundaryPoint(0.3), taus)) CHECK(w == 0.0);
  const CompleteMeasure atom{ZeroSequence(), BoundaryMeasure::point_mass(0.3, 1.0)};
  for (double w : modulus_of_continuity(atom, BoundaryPoint(0.3), taus)) CHECK(w == 1.0);

  // Radial zeros 1 - 2^-k, k <= 40: brute-force ball membership.
  const ZeroSequence zs = gen_geometric_radial(0.5, 40, BoundaryPoint(0.0), false);
  std::vector<double> ladder;
  for (int m = 1; m <= 30; ++m) ladder.push_back(std::ldexp(1.0, -m));
  std::reverse(ladder.begin(), ladder.end());
  const auto omega = modulus_of_continuity({zs, {}}, BoundaryPoint(0.0), ladder);
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    long double want = 0.0L;
    for (const cplx a : zs.zeros()) {
      if (std::abs(a - 1.0) <= ladder[i]) want += 1.0L - std::abs(a);
    }
    CHECK(std::fabs(omega[i] - want) < 1e-15L);
    if (i > 0) CHECK(omega[i] >= omega[i - 1]);
  }
  CHECK_THROWS_AS(modulus_of_continuity({}, BoundaryPoint(0.0), std::vector<double>{0.5, 0.1}), Error);
}

TEST_CASE("direct and modulus-of-continuity forms agree on atom-free measures") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> zeros;
    for (int i = 0; i < 20; ++i) zeros.push_back(std::polar(0.3 + 0.69 * u(rng), -pi + 2.0 * pi * u(rng)));
    const CompleteMeasure lambda{ZeroSequence(zeros), random_pl(rng, 2 + trial % 4)};
    const BoundaryPoint zeta0(-pi + 2.0 * pi * u(rng));
    const double gamma = 0.2 + 0.7 * u(rng);
    const double direct = frostman_integral(lambda, zeta0, gamma).value;
    const double stieltjes = frostman_via_modulus(lambda, zeta0, gamma);
    CHECK(std::abs(direct - stieltjes) <= 1e-4 * direct);
  }
}
