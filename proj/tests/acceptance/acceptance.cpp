// One line per acceptance criterion: id, PASS/FAIL, wall time, detail.
// `acceptance` runs all of them; `acceptance --only N` runs one.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "diskarg/blaschke.hpp"
#include "diskarg/disk_geometry.hpp"
#include "diskarg/errors.hpp"
#include "diskarg/experiments.hpp"
#include "diskarg/frac_calc.hpp"
#include "diskarg/herglotz.hpp"
#include "diskarg/local_zeros.hpp"
#include "diskarg/measures.hpp"

using namespace diskarg;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 = none stated
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

cplx random_disk_point(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmin + (rmax - rmin) * u(rng), -pi + 2.0 * pi * u(rng));
}

std::vector<double> sups(const SweepReport& r) {
  std::vector<double> v;
  for (const SweepLevel& l : r.levels) v.push_back(l.sup);
  return v;
}

std::string ladder(const SweepReport& r) {
  std::string s;
  for (const SweepLevel& l : r.levels) s += fmt(" j%d=%.4g", l.j, l.sup);
  return s;
}

Outcome argument_bound() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100000; ++i) {
    const double rho = 1e-3 + (1.0 - 1e-6 - 1e-3) * u(rng);
    const cplx xi = std::polar(rho, -pi + 2.0 * pi * u(rng));
    const cplx z = random_disk_point(rng, 0.0, 1.0 - 1e-9);
    const double bound = pi * std::min(1.0, std::abs(a_kernel(z, xi)));
    worst = std::max(worst, std::abs(factor_arg(z, xi)) - bound);
  }
  return {worst <= 1e-12, fmt("max(|arg b| - pi min(1,|A|)) = %.3g over 1e5 pairs", worst)};
}

Outcome rl_closed_forms() {
  double worst = 0.0;
  for (double g : {0.1, 0.5, 0.9}) {
    for (double r : {0.5, 0.9, 0.99}) {
      const double one = rl_integral([](double) { return 1.0; }, g, r).value;
      const double lin = rl_integral([](double x) { return x; }, g, r).value;
      const double want_one = std::pow(r, g) / std::tgamma(g + 1.0);
      const double want_lin = std::pow(r, 1.0 + g) / std::tgamma(2.0 + g);
      worst = std::max({worst, std::abs(one / want_one - 1.0), std::abs(lin / want_lin - 1.0)});
    }
  }
  return {worst <= 1e-8, fmt("max relative error %.3g over 18 cases", worst)};
}

Outcome rl_oracle() {
  const auto h = [](double x) { return 1.0 / std::norm(1.0 - x * std::polar(1.0, 0.3)); };
  const double r = 1.0 - std::ldexp(1.0, -10);
  const FracResult main = rl_integral(h, 0.5, r);
  const double naive = oracle_naive_rl(h, 0.5, r, 1000000);
  const double rel = std::abs(main.value - naive) / std::abs(naive);
  return {rel <= 1e-6, fmt("graded %.12g, naive %.12g, rel %.3g", main.value, naive, rel)};
}

Outcome frostman_geometric() {
  const double target = 1.0 / (std::sqrt(2.0) - 1.0);
  const ZeroSequence zs = gen_geometric_radial(0.5, 40, BoundaryPoint(0.0), true);
  const FrostmanSum s = frostman_sum(zs, BoundaryPoint(0.0), 0.5);
  const FrostmanResult full = frostman_integral({zs, {}}, BoundaryPoint(0.0), 0.5);
  const bool certified = s.tail_bound > 0.0 && s.partial <= target && target <= s.partial + s.tail_bound * (1.0 + 1e-12);
  const bool pass = std::abs(s.value - target) <= 1e-6 && std::abs(full.value - target) <= 1e-6 && certified &&
                    !full.divergent;
  return {pass, fmt("value %.10f target %.10f partial %.10f tail bound %.3g", s.value, target, s.partial, s.tail_bound)};
}

Outcome sufficiency_power_radial() {
  BoundedFunctionSpec spec;
  spec.zeros = gen_power_radial(4.0, 10000, BoundaryPoint(0.0));
  const SweepReport r = verify_theorem_arg(spec, SweepConfig{});
  const bool pass = r.verdict == Verdict::bounded && !r.frostman.divergent;
  return {pass, fmt("verdict %s, Frostman %.6g, failures %d,", to_string(r.verdict), r.frostman.value,
                    r.total_failures()) + ladder(r)};
}

Outcome necessity_atom() {
  const SweepReport r = verify_theorem_arg(atom_spec(), SweepConfig{});
  const std::vector<double> v = sups(r);
  bool increasing = true;
  for (std::size_t i = 1; i < v.size(); ++i) increasing = increasing && v[i] > v[i - 1];
  double at8 = 0.0, at16 = 0.0;
  for (const SweepLevel& l : r.levels) {
    if (l.j == 8) at8 = l.sup;
    if (l.j == 16) at16 = l.sup;
  }
  const bool pass = increasing && at16 >= 10.0 * at8 && r.frostman.divergent && r.verdict == Verdict::growing;
  return {pass, fmt("verdict %s, j16/j8 = %.4g, certificate '%s',", to_string(r.verdict), at16 / at8,
                    r.frostman.certificate.c_str()) + ladder(r)};
}

Outcome power_law_dichotomy() {
  std::string detail;
  bool pass = true;
  for (double g : {0.8, 0.2}) {
    SweepConfig cfg;
    cfg.gamma = g;
    cfg.measure_family = [](int d) { return CompleteMeasure{ZeroSequence(), power_law_measure(0.5, d)}; };
    const SweepReport r = verify_theorem_arg(power_law_spec(0.5), cfg);
    const Verdict want = g > 0.5 ? Verdict::bounded : Verdict::growing;
    pass = pass && r.verdict == want && r.frostman.divergent == (g < 0.5);
    detail += fmt("gamma %.1f: verdict %s, Frostman %s;", g, to_string(r.verdict),
                  r.frostman.divergent ? "divergent" : fmt("%.6g", r.frostman.value).c_str());
    detail += ladder(r) + "  ";
  }
  return {pass, detail};
}

Outcome limit_case_ratio() {
  const HerglotzSpec spec{power_law_measure(0.0), 0.0};
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 6; j <= 16; ++j) {
    const double r = 1.0 - std::ldexp(1.0, -j);
    const double ratio = arg_g(r, spec) / std::log(1.0 / (1.0 - r));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  const bool pass = lo > 0.0 && hi / lo <= 4.0;
  // Reference: density on [0, pi] only, where arg g(r) = log((1 + r)/(1 - r)) / pi.
  const HerglotzSpec one_sided{BoundaryMeasure({}, {0.0, pi}, {0.0, pi}), 0.0};
  double lo1 = std::numeric_limits<double>::infinity(), hi1 = -lo1;
  for (int j = 6; j <= 16; ++j) {
    const double r = 1.0 - std::ldexp(1.0, -j);
    const double ratio = arg_g(r, one_sided) / std::log(1.0 / (1.0 - r));
    lo1 = std::min(lo1, ratio);
    hi1 = std::max(hi1, ratio);
  }
  return {pass, fmt("ratio range [%.3g, %.3g] (symmetric measure, arg g = 0 on the radius); "
                    "one-sided density gives [%.4g, %.4g], max/min %.4g",
                    lo, hi, lo1, hi1, hi1 / lo1)};
}

Outcome conjugate_symmetry() {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_radial = 0.0;
  int sequences_without_offaxis = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<cplx> base;
    const int n = 1 + static_cast<int>(u(rng) * 10);
    for (int i = 0; i < n; ++i) {
      const double theta = (0.01 + 0.98 * u(rng)) * pi * (u(rng) < 0.5 ? 1.0 : -1.0);
      base.push_back(std::polar(0.05 + 0.94 * u(rng), theta));
    }
    const ZeroSequence zs = gen_conjugate_pairs(ZeroSequence(base));
    for (int k = 1; k < 64; ++k) {
      for (const double r : {k / 64.0, -k / 64.0}) {
        bool cut = false;
        for (const cplx a : zs.zeros()) cut = cut || on_cut(r, a);
        if (!cut) worst_radial = std::max(worst_radial, std::abs(product_arg(zs, r).value));
      }
    }
    double off = 0.0;
    for (int k = 1; k < 16 && off <= 1e-3; ++k) {
      const cplx z = std::polar(0.9, 0.05 * k);
      bool cut = false;
      for (const cplx a : zs.zeros()) cut = cut || on_cut(z, a);
      if (!cut) off = std::max(off, std::abs(product_arg(zs, z).value));
    }
    if (off <= 1e-3) ++sequences_without_offaxis;
  }
  return {worst_radial <= 1e-10 && sequences_without_offaxis == 0,
          fmt("max |arg B(r)| on the real axis %.3g; sequences with no off-axis |arg B| > 1e-3: %d",
              worst_radial, sequences_without_offaxis)};
}

Outcome re_l_nonpositive() {
  std::mt19937_64 rng(110);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = -std::numeric_limits<double>::infinity();
  int evaluated = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const BoundedFunctionSpec spec = random_spec(rng);
    const cplx z = random_disk_point(rng, 1e-3, 0.9999);
    const double h = 0.01 + 0.98 * u(rng);
    bool bad = false;
    for (const cplx a : spec.zeros.zeros()) bad = bad || on_cut(z, a);
    if (bad) continue;
    worst = std::max(worst, L_value(spec, z, h).real());
    ++evaluated;
  }
  return {worst <= 1e-10 && evaluated >= 9000, fmt("max Re L = %.4g over %d configurations", worst, evaluated)};
}

Outcome pseudo_disk_inclusion() {
  std::mt19937_64 rng(111);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const cplx z = random_disk_point(rng, 0.0, 0.9999);
    const double h = 1e-3 + (1.0 - 2e-3) * u(rng);
    const EuclideanDisk d = pseudo_disk(z, h / (2.0 + h));
    const double limit = h * (1.0 - std::abs(z));
    for (int k = 0; k < 64; ++k) {
      const cplx w = d.center + std::polar(d.radius, 2.0 * pi * k / 64.0);
      worst = std::max(worst, std::abs(w - z) / limit);
    }
  }
  return {worst <= 1.0 + 1e-12, fmt("max |w - z| / (h (1 - |z|)) = %.15g", worst)};
}

Outcome measure_additivity() {
  std::mt19937_64 rng(112);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_ball = 0.0, worst_frostman = 0.0;
  int finite = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const BoundedFunctionSpec spec = random_spec(rng);
    std::vector<bool> keep(spec.zeros.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = u(rng) < 0.5;
    const double fraction = u(rng);
    auto [g, h] = divisor_split(spec, [&](std::size_t i, cplx) { return static_cast<bool>(keep[i]); }, fraction);
    const BoundaryPoint zeta(-pi + 2.0 * pi * u(rng));
    const double mass = spec.complete_measure().total_mass();
    for (int k = 0; k < 8; ++k) {
      const double tau = 2.2 * u(rng) + 1e-9;
      const double whole = complete_measure_ball(spec.complete_measure(), zeta, tau);
      const double parts = complete_measure_ball(g.complete_measure(), zeta, tau) +
                           complete_measure_ball(h.complete_measure(), zeta, tau);
      worst_ball = std::max(worst_ball, std::abs(whole - parts) / (eps * std::max(1.0, mass)));
    }
    const double gamma = 0.05 + 0.9 * u(rng);
    const FrostmanResult fw = frostman_integral(spec.complete_measure(), zeta, gamma);
    const FrostmanResult fg = frostman_integral(g.complete_measure(), zeta, gamma);
    const FrostmanResult fh = frostman_integral(h.complete_measure(), zeta, gamma);
    if (!fw.divergent && !fg.divergent && !fh.divergent) {
      ++finite;
      worst_frostman = std::max(worst_frostman, std::abs(fw.value - fg.value - fh.value) / std::max(fw.value, 1e-300));
    }
  }
  // "Exactly" is read as agreement to a few units in the last place.
  return {worst_ball <= 4.0 && worst_frostman <= 1e-10 && finite > 0,
          fmt("ball-mass mismatch %.3g ulp of the total mass; Frostman rel %.3g over %d finite splits", worst_ball,
              worst_frostman, finite)};
}

Outcome tsuji_inequality() {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<int> count(1, 40);
  double worst = -std::numeric_limits<double>::infinity();
  double ratio = 0.0;
  int terms = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<cplx> zeros;
    const cplx z = random_disk_point(rng, 0.0, 0.9999);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      // Half near z so that |A| < 1/2 terms actually occur.
      zeros.push_back(i % 2 ? random_disk_point(rng, 1e-3, 0.9999)
                            : z + (1.0 - std::abs(z)) * random_disk_point(rng, 1e-6, 0.95));
    }
    std::erase_if(zeros, [](cplx a) { return !(std::abs(a) < 1.0 && std::abs(a) > 0.0); });
    const TsujiCheck t = tsuji_bound_check(ZeroSequence(zeros), z);
    worst = std::max(worst, t.lhs - t.rhs);
    if (t.terms > 0) ratio = std::max(ratio, t.lhs / t.rhs);
    terms += t.terms;
  }
  return {worst <= 1e-12 && terms > 0,
          fmt("max(lhs - rhs) = %.4g, max lhs/rhs = %.4g, %d factors with |A| < 1/2", worst, ratio, terms)};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "argument bound |arg b| <= pi min(1,|A|)", 5.0, argument_bound},
      {2, "fractional integral closed forms", 1.0, rl_closed_forms},
      {3, "graded quadrature vs naive oracle", 30.0, rl_oracle},
      {4, "Frostman sum of the geometric radial sequence", 1.0, frostman_geometric},
      {5, "sufficiency sweep, power-law radial zeros", 120.0, sufficiency_power_radial},
      {6, "necessity sweep, atom at the vertex", 60.0, necessity_atom},
      {7, "power-law measure dichotomy, gamma 0.8 vs 0.2", 120.0, power_law_dichotomy},
      {8, "limit case ratio arg g(r) / log(1/(1-r))", 0.0, limit_case_ratio},
      {9, "conjugate-pair symmetry", 0.0, conjugate_symmetry},
      {10, "Re L <= 0", 0.0, re_l_nonpositive},
      {11, "pseudohyperbolic disk inclusion", 0.0, pseudo_disk_inclusion},
      {12, "complete-measure additivity", 0.0, measure_additivity},
      {13, "Tsuji-type inequality", 0.0, tsuji_inequality},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  double total = 0.0;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const Error& e) {
      out = {false, std::string("error ") + to_string(e.kind()) + ": " + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += secs;
    if (c.time_limit > 0.0 && secs > c.time_limit) {
      out.pass = false;
      out.detail += fmt(" [over the %.0f s limit]", c.time_limit);
    }
    if (!out.pass) ++failed;
    std::printf("c%02d %s %8.2fs  %s: %s\n", c.id, out.pass ? "PASS" : "FAIL", secs, c.title, out.detail.c_str());
    std::fflush(stdout);
  }
  if (only == 0) std::printf("%d failed, total %.1fs\n", failed, total);
  return failed == 0 ? 0 : 1;
}
