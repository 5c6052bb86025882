#include "diskarg/experiments.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "diskarg/errors.hpp"
#include "diskarg/herglotz.hpp"
#include "diskarg/json_io.hpp"
#include "diskarg/local_zeros.hpp"
#include "diskarg/summation.hpp"

namespace diskarg {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kMinDeficit = 64.0 * std::numeric_limits<double>::epsilon();

std::vector<double> radii_for(std::span<const int> levels) {
  std::vector<double> radii;
  for (const int j : levels) {
    if (j < 1 || j > 52) throw Error(ErrorKind::invalid_argument, "ladder levels must lie in [1, 52]");
    radii.push_back(1.0 - std::ldexp(1.0, -j));
  }
  return radii;
}

std::vector<SweepLevel> to_levels(std::span<const int> js, const std::vector<LevelSup>& sups,
                                  const VerdictRule& rule) {
  std::vector<SweepLevel> out;
  std::vector<double> values;
  for (std::size_t i = 0; i < sups.size(); ++i) {
    SweepLevel l;
    l.j = js[i];
    l.radius = sups[i].radius;
    l.sup = sups[i].sup;
    l.sup_special = sups[i].sup_special;
    l.evaluated = sups[i].evaluated;
    l.skipped = sups[i].skipped;
    l.failures = sups[i].failures;
    values.push_back(l.sup);
    l.verdict_partial = classify(js.first(i + 1), values, rule);
    out.push_back(l);
  }
  return out;
}

bool near_cut_or_zero(const ZeroSequence& zs, cplx z) {
  const double tol = 1e-14 * (1.0 - std::abs(z));
  for (const cplx a : zs.zeros()) {
    if (on_cut(z, a) || std::abs(a - z) <= tol) return true;
  }
  return false;
}

FrostmanResult frostman_for(const BoundedFunctionSpec& spec, const SweepConfig& cfg) {
  if (cfg.measure_family) {
    return frostman_integral_refined(cfg.measure_family, cfg.vertex, cfg.gamma, cfg.family_first,
                                     cfg.family_step, cfg.family_last, cfg.frostman);
  }
  return frostman_integral(spec.complete_measure(), cfg.vertex, cfg.gamma, cfg.frostman);
}

SweepReport base_report(const SweepConfig& cfg, const char* mode) {
  SweepReport rep;
  rep.mode = mode;
  rep.gamma = cfg.gamma;
  rep.sigma = cfg.sigma;
  rep.vertex_theta = cfg.vertex.theta();
  rep.grid_angles = cfg.sup.grid.angles;
  return rep;
}

}  // namespace

ZeroSequence gen_power_radial(double beta, std::size_t count, const BoundaryPoint& vertex) {
  if (!(beta > 1.0)) throw Error(ErrorKind::invalid_argument, "beta must exceed 1");
  std::vector<cplx> zeros;
  std::size_t k = 2;
  for (; k <= count; ++k) {
    const double deficit = std::pow(static_cast<double>(k), -beta);
    if (deficit < kMinDeficit) break;
    zeros.push_back(std::polar(1.0 - deficit, vertex.theta()));
  }
  TailDescriptor tail;
  if (k <= count) tail = {TailKind::power, beta, k - 1};
  return ZeroSequence(std::move(zeros), tail);
}

ZeroSequence gen_geometric_radial(double q, std::size_t count, const BoundaryPoint& vertex, bool with_tail) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::invalid_argument, "ratio must lie in (0, 1)");
  std::vector<cplx> zeros;
  for (std::size_t k = 1; k <= count; ++k) {
    zeros.push_back(std::polar(1.0 - std::pow(q, static_cast<double>(k)), vertex.theta()));
  }
  TailDescriptor tail;
  if (with_tail) tail = {TailKind::geometric, q, count};
  return ZeroSequence(std::move(zeros), tail);
}

ZeroSequence gen_conjugate_pairs(const ZeroSequence& base) {
  if (base.tail().kind != TailKind::none) {
    throw Error(ErrorKind::invalid_argument, "conjugate pairing needs a materialised base");
  }
  std::vector<cplx> zeros;
  zeros.reserve(2 * base.size());
  for (const cplx a : base.zeros()) {
    if (a.imag() == 0.0) throw Error(ErrorKind::real_zero_in_base, "base zero on the real axis");
    zeros.push_back(a);
    zeros.push_back(std::conj(a));
  }
  return ZeroSequence(std::move(zeros));
}

BoundedFunctionSpec atom_spec() {
  BoundedFunctionSpec spec;
  spec.boundary = atom_measure();
  return spec;
}

BoundedFunctionSpec power_law_spec(double alpha, int depth) {
  BoundedFunctionSpec spec;
  spec.boundary = power_law_measure(alpha, depth);
  return spec;
}

BoundedFunctionSpec random_spec(std::mt19937_64& rng, const RandomSpecOptions& opts) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-pi, pi);
  const auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  BoundedFunctionSpec spec;
  spec.scale = 1.0 - 0.9 * unit(rng);
  spec.origin_order = pick(opts.max_origin_order);
  spec.phase = angle(rng);
  std::vector<cplx> zeros;
  const int nz = pick(opts.max_zeros);
  for (int i = 0; i < nz; ++i) {
    const double r = 0.05 + (opts.max_radius - 0.05) * unit(rng);
    zeros.push_back(std::polar(r, angle(rng)));
  }
  spec.zeros = ZeroSequence(std::move(zeros));
  if (opts.boundary) {
    std::vector<Atom> atoms;
    const int na = pick(opts.max_atoms);
    for (int i = 0; i < na; ++i) atoms.push_back({angle(rng), 2.0 * unit(rng) + 1e-3});
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.theta < b.theta; });
    atoms.erase(std::unique(atoms.begin(), atoms.end(),
                            [](const Atom& a, const Atom& b) { return a.theta == b.theta; }),
                atoms.end());
    std::vector<double> bps;
    std::vector<double> vals;
    const int ns = pick(opts.max_segments);
    if (ns > 0) {
      for (int i = 0; i <= ns; ++i) bps.push_back(angle(rng));
      std::sort(bps.begin(), bps.end());
      bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
      double v = 0.0;
      for (std::size_t i = 0; i < bps.size(); ++i) {
        if (i > 0 && unit(rng) < 0.8) v += 2.0 * unit(rng);
        vals.push_back(v);
      }
      if (bps.size() < 2) {
        bps.clear();
        vals.clear();
      }
    }
    spec.boundary = BoundaryMeasure(std::move(atoms), std::move(bps), std::move(vals));
  }
  return spec;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::bounded: return "bounded";
    case Verdict::growing: return "growing";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict classify(std::span<const int> levels, std::span<const double> values, const VerdictRule& rule) {
  if (levels.size() != values.size()) throw Error(ErrorKind::invalid_argument, "levels and values differ in size");
  if (levels.empty()) return Verdict::inconclusive;
  const int top = levels.back();
  // octave k holds levels in (top / 2^{k+1}, top / 2^k]
  std::vector<double> octave_max;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    int k = 0;
    while (2 * levels[i] * (1 << k) <= top) ++k;
    if (static_cast<std::size_t>(k) >= octave_max.size()) octave_max.resize(k + 1, -1.0);
    octave_max[k] = std::max(octave_max[k], values[i]);
  }
  std::vector<double> seq;  // oldest octave first, empty octaves dropped
  for (std::size_t k = octave_max.size(); k-- > 0;) {
    if (octave_max[k] >= 0.0) seq.push_back(octave_max[k]);
  }
  if (seq.size() < 2) return Verdict::inconclusive;
  const double last = seq.back();
  const double prev = seq[seq.size() - 2];
  if (last <= rule.plateau_factor * prev) return Verdict::bounded;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!(seq[i] >= rule.growth_factor * seq[i - 1])) return Verdict::inconclusive;
  }
  return Verdict::growing;
}

std::vector<int> SweepConfig::default_levels() {
  std::vector<int> out;
  for (int j = 4; j <= 16; ++j) out.push_back(j);
  return out;
}

int SweepReport::total_failures() const {
  int n = 0;
  for (const SweepLevel& l : levels) n += l.failures;
  for (const SweepLevel& l : levels_im) n += l.failures;
  return n;
}

SweepReport verify_theorem_arg(const BoundedFunctionSpec& spec, const SweepConfig& cfg) {
  spec.validate();
  SweepReport rep = base_report(cfg, "arg");
  rep.frostman = frostman_for(spec, cfg);
  const StolzRegion region{cfg.vertex, cfg.sigma, true};
  const std::vector<double> radii = radii_for(cfg.levels);
  rep.levels = to_levels(cfg.levels, sup_frac_arg(spec, region, cfg.gamma, radii, cfg.sup), cfg.rule);
  rep.verdict = classify(cfg.levels, [&] {
    std::vector<double> v;
    for (const SweepLevel& l : rep.levels) v.push_back(l.sup);
    return v;
  }(), cfg.rule);

  if (cfg.necessity_subproduct) {
    std::vector<cplx> sub;
    const cplx conj_vertex = std::conj(cfg.vertex.value());
    for (const cplx a : spec.zeros.zeros()) {
      const cplx w = a * conj_vertex;
      if (w.imag() >= 0.0 && std::abs(1.0 - w) <= 1.0 / 3.0) sub.push_back(w * cfg.vertex.value());
    }
    if (!sub.empty()) {
      BoundedFunctionSpec sub_spec;
      sub_spec.zeros = ZeroSequence(std::move(sub));
      SupOptions rays = cfg.sup;
      rays.grid.angles = 0;
      rays.grid.special_rays = true;
      for (const LevelSup& l : sup_frac_arg(sub_spec, region, cfg.gamma, radii, rays)) {
        rep.subproduct.push_back(l.sup_special);
      }
    }
  }
  return rep;
}

SweepReport verify_theorem_lnb(const BoundedFunctionSpec& spec, const SweepConfig& cfg) {
  spec.validate();
  SweepReport rep = base_report(cfg, "lnb");
  rep.frostman = frostman_for(spec, cfg);
  const StolzRegion region{cfg.vertex, cfg.sigma, true};
  const std::vector<double> radii = radii_for(cfg.levels);
  const auto skip = [&](cplx z) { return near_cut_or_zero(spec.zeros, z); };
  const auto re_part = [&](cplx z) { return L_value(spec, z, cfg.h, cfg.sup.arg_tol).real(); };
  const auto im_part = [&](cplx z) { return arg_f(spec, z, cfg.sup.arg_tol, true); };
  rep.levels = to_levels(cfg.levels, sup_frac(re_part, skip, region, cfg.gamma, radii, cfg.sup), cfg.rule);
  rep.levels_im = to_levels(cfg.levels, sup_frac(im_part, skip, region, cfg.gamma, radii, cfg.sup), cfg.rule);
  const auto verdict_of = [&](const std::vector<SweepLevel>& levels) {
    std::vector<double> v;
    for (const SweepLevel& l : levels) v.push_back(l.sup);
    return classify(cfg.levels, v, cfg.rule);
  };
  rep.verdict = verdict_of(rep.levels);
  rep.verdict_im = verdict_of(rep.levels_im);
  return rep;
}

std::vector<SweepReport> divisor_stability_run(const BoundedFunctionSpec& spec, const SweepConfig& cfg,
                                               int splits, std::uint64_t seed) {
  if (splits < 1) throw Error(ErrorKind::invalid_argument, "need at least one split");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SweepReport> out;
  out.push_back(verify_theorem_arg(spec, cfg));
  for (int s = 0; s < splits; ++s) {
    std::vector<bool> keep(spec.zeros.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = unit(rng) < 0.5;
    const double fraction = unit(rng);
    auto parts = divisor_split(spec, [&](std::size_t i, cplx) { return static_cast<bool>(keep[i]); }, fraction);
    SweepConfig sub = cfg;
    if (cfg.measure_family) {
      const ZeroSequence zeros = parts.first.zeros;
      const auto family = cfg.measure_family;
      sub.measure_family = [zeros, family, fraction](int depth) {
        return CompleteMeasure{zeros, family(depth).boundary.scaled(fraction)};
      };
    }
    out.push_back(verify_theorem_arg(parts.first, sub));
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "level_index,radius,sup_abs_dgamma_arg,grid_failures,verdict_partial\n";
  char buf[128];
  for (const SweepLevel& l : report.levels) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%d,%s\n", l.j, l.radius, l.sup, l.failures,
                  to_string(l.verdict_partial));
    out << buf;
  }
}

nlohmann::json to_json(const SweepReport& report) {
  using nlohmann::json;
  const auto levels_json = [](const std::vector<SweepLevel>& levels) {
    json arr = json::array();
    for (const SweepLevel& l : levels) {
      arr.push_back({{"level_index", l.j},
                     {"radius", l.radius},
                     {"sup_abs_dgamma", l.sup},
                     {"sup_special_rays", l.sup_special},
                     {"evaluated", l.evaluated},
                     {"skipped_on_cut", l.skipped},
                     {"grid_failures", l.failures},
                     {"verdict_partial", to_string(l.verdict_partial)}});
    }
    return arr;
  };
  json fr = {{"divergent", report.frostman.divergent},
             {"converged", report.frostman.converged},
             {"zero_part", report.frostman.zero_part},
             {"tail_bound", report.frostman.tail_bound},
             {"refinements", report.frostman.refinements}};
  if (report.frostman.divergent) {
    fr["certificate"] = report.frostman.certificate;
  } else {
    fr["value"] = report.frostman.value;
    fr["boundary_part"] = report.frostman.boundary_part;
  }
  json j = {{"mode", report.mode},
            {"gamma", report.gamma},
            {"sigma", report.sigma},
            {"vertex_theta", report.vertex_theta},
            {"grid", {{"chebyshev_angles", report.grid_angles}, {"special_rays", "radial, +pi/4, -pi/4"}}},
            {"frostman", fr},
            {"levels", levels_json(report.levels)},
            {"verdict", to_string(report.verdict)}};
  if (!report.levels_im.empty()) {
    j["levels_im"] = levels_json(report.levels_im);
    j["verdict_im"] = to_string(report.verdict_im);
  }
  if (!report.subproduct.empty()) j["subproduct_pi4_rays"] = report.subproduct;
  return j;
}

cplx oracle_naive_product(const ZeroSequence& zs, cplx z) {
  cplx p = 1.0;
  for (const cplx a : zs.zeros()) p *= std::conj(a) * (a - z) / (1.0 - z * std::conj(a));
  return p;
}

double oracle_naive_rl(const std::function<double(double)>& h, double gamma, double r, long panels) {
  if (panels < 1) throw Error(ErrorKind::invalid_argument, "need at least one panel");
  const double dx = r / static_cast<double>(panels);
  CompensatedSum sum;
  for (long i = 0; i < panels; ++i) {
    const double x0 = dx * static_cast<double>(i);
    const double x1 = i + 1 == panels ? r : dx * static_cast<double>(i + 1);
    const double w = (std::pow(r - x0, gamma) - std::pow(r - x1, gamma)) / gamma;
    sum += w * h(0.5 * (x0 + x1));
  }
  return sum.value() / std::tgamma(gamma);
}

double oracle_frostman(const ZeroSequence& zs, const BoundaryPoint& vertex, double gamma) {
  const std::complex<long double> v(std::cos(static_cast<long double>(vertex.theta())),
                                    std::sin(static_cast<long double>(vertex.theta())));
  long double sum = 0.0L;
  const auto zeros = zs.zeros();
  for (std::size_t n = zeros.size(); n-- > 0;) {
    const std::complex<long double> a(zeros[n].real(), zeros[n].imag());
    sum += (1.0L - std::abs(a)) * std::pow(std::abs(v - a), static_cast<long double>(gamma) - 1.0L);
  }
  return static_cast<double>(sum);
}

}  // namespace diskarg
