#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diskarg/errors.hpp"
#include "diskarg/experiments.hpp"
#include "diskarg/herglotz.hpp"
#include "diskarg/json_io.hpp"
#include "diskarg/local_zeros.hpp"

using namespace diskarg;
using nlohmann::json;

namespace {

struct Common {
  double gamma = 0.5;
  double sigma = 2.0;
  double vertex_theta = 0.0;
  std::string levels = "4..16";
  int grid_angles = 65;
  double h = 0.5;
  double tol = 1e-5;
  std::uint64_t seed = 1;
  std::string out = "json";
  int failure_budget = 0;
};

// Where a spec comes from: a JSON file or one of the built-in families.
struct Source {
  std::string file;
  std::string preset;  // atom | power-law | power-radial | geometric | random
  double alpha = 0.5;
  double beta = 4.0;
  double q = 0.5;
  std::size_t count = 10000;
};

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int j = lo; j <= hi; ++j) out.push_back(j);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw Error(ErrorKind::invalid_argument, "levels must increase");
  }
  if (out.empty()) throw Error(ErrorKind::invalid_argument, "no levels given");
  return out;
}

cplx parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

BoundedFunctionSpec load_spec(const Source& src, const Common& c) {
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + src.file);
    try {
      return spec_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::parse_error, e.what());
    }
  }
  const BoundaryPoint vertex(c.vertex_theta);
  BoundedFunctionSpec spec;
  if (src.preset == "atom") {
    spec = atom_spec();
  } else if (src.preset == "power-law") {
    spec = power_law_spec(src.alpha);
  } else if (src.preset == "power-radial") {
    spec.zeros = gen_power_radial(src.beta, src.count, vertex);
  } else if (src.preset == "geometric") {
    spec.zeros = gen_geometric_radial(src.q, src.count, vertex, true);
  } else if (src.preset == "random") {
    std::mt19937_64 rng(c.seed);
    spec = random_spec(rng);
  } else if (src.preset.empty()) {
    throw Error(ErrorKind::invalid_argument, "give --spec FILE or --preset NAME");
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown preset '" + src.preset + "'");
  }
  return spec;
}

SweepConfig make_config(const Source& src, const Common& c) {
  SweepConfig cfg;
  cfg.gamma = c.gamma;
  cfg.sigma = c.sigma;
  cfg.vertex = BoundaryPoint(c.vertex_theta);
  cfg.levels = parse_levels(c.levels);
  cfg.h = c.h;
  cfg.sup.grid.angles = c.grid_angles;
  cfg.sup.arg_tol = c.tol;
  if (src.file.empty() && src.preset == "power-law") {
    const double alpha = src.alpha;
    cfg.measure_family = [alpha](int depth) { return CompleteMeasure{ZeroSequence(), power_law_measure(alpha, depth)}; };
  }
  return cfg;
}

void add_common(CLI::App* app, Common& c, bool sweep) {
  app->add_option("--gamma", c.gamma, "fractional order in [0, 1)")->capture_default_str();
  app->add_option("--vertex-theta", c.vertex_theta, "angle of the boundary vertex")->capture_default_str();
  app->add_option("--tol", c.tol, "absolute tolerance for arg f")->capture_default_str();
  app->add_option("--seed", c.seed, "seed for random presets")->capture_default_str();
  if (!sweep) return;
  app->add_option("--sigma", c.sigma, "Stolz aperture (> 1)")->capture_default_str();
  app->add_option("--levels", c.levels, "ladder levels j, as 'lo..hi' or a comma list")->capture_default_str();
  app->add_option("--grid-angles", c.grid_angles, "Chebyshev angles per level")->capture_default_str();
  app->add_option("--h", c.h, "local-zero radius factor in (0, 1)")->capture_default_str();
  app->add_option("--out", c.out, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app->add_option("--failure-budget", c.failure_budget, "tolerated quadrature failures")->capture_default_str();
}

void add_source(CLI::App* app, Source& s) {
  app->add_option("--spec", s.file, "spec JSON file");
  app->add_option("--preset", s.preset, "atom | power-law | power-radial | geometric | random");
  app->add_option("--alpha", s.alpha, "power-law exponent")->capture_default_str();
  app->add_option("--beta", s.beta, "power-radial exponent")->capture_default_str();
  app->add_option("--q", s.q, "geometric ratio")->capture_default_str();
  app->add_option("--count", s.count, "generator count")->capture_default_str();
}

json frostman_json(const FrostmanResult& r) {
  json j = {{"divergent", r.divergent}, {"converged", r.converged}, {"zero_part", r.zero_part},
            {"tail_bound", r.tail_bound}, {"refinements", r.refinements}};
  if (r.divergent) {
    j["certificate"] = r.certificate;
  } else {
    j["value"] = r.value;
    j["boundary_part"] = r.boundary_part;
  }
  return j;
}

int emit_sweep(const SweepReport& rep, const Common& c) {
  if (c.out == "csv") {
    write_sweep_csv(std::cout, rep);
    if (!rep.levels_im.empty()) {
      SweepReport im = rep;
      im.levels = rep.levels_im;
      std::cout << "# imaginary component\n";
      write_sweep_csv(std::cout, im);
    }
  } else {
    std::cout << to_json(rep).dump(2) << '\n';
  }
  if (rep.total_failures() > c.failure_budget) {
    std::fprintf(stderr, "%d quadrature failures exceed the budget of %d\n", rep.total_failures(), c.failure_budget);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argument and fractional-integral experiments for bounded analytic functions in the disk"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Common common;
  Source source;

  std::string point = "0.5,0";
  auto* eval = app.add_subcommand("eval", "evaluate one spec at one point");
  add_source(eval, source);
  add_common(eval, common, false);
  eval->add_option("--z", point, "point as 're,im'")->capture_default_str();
  eval->add_option("--h", common.h, "local-zero radius factor")->capture_default_str();

  auto* frostman = app.add_subcommand("frostman", "Frostman integral of the complete measure at the vertex");
  add_source(frostman, source);
  add_common(frostman, common, false);

  auto* sweep = app.add_subcommand("sweep", "sup |D^-gamma arg f| over a Stolz region, level by level");
  add_source(sweep, source);
  add_common(sweep, common, true);

  auto* sweep_lnb = app.add_subcommand("sweep-lnb", "the same sweep for Re L and Im L");
  add_source(sweep_lnb, source);
  add_common(sweep_lnb, common, true);

  auto* gen = app.add_subcommand("gen", "print a generated spec as JSON");
  add_source(gen, source);
  add_common(gen, common, false);
  bool conjugate = false;
  gen->add_flag("--conjugate", conjugate, "close the zero set under conjugation");

  std::string which = "all";
  auto* oracle = app.add_subcommand("oracle", "compare main paths with brute-force references");
  add_source(oracle, source);
  add_common(oracle, common, false);
  oracle->add_option("--which", which, "product | rl | frostman | all")->capture_default_str();
  long panels = 1000000;
  oracle->add_option("--panels", panels, "panels for the naive fractional integral")->capture_default_str();
  oracle->add_option("--z", point, "point as 're,im'")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      const BoundedFunctionSpec spec = load_spec(source, common);
      const cplx z = parse_point(point);
      const cplx lf = log_f(spec, z, common.tol);
      const LocalCount lc = local_count(spec.zeros, z, common.h);
      json j = {{"z", {z.real(), z.imag()}},
                {"log_f", {lf.real(), lf.imag()}},
                {"abs_f", std::exp(lf.real())},
                {"arg_f", lf.imag()},
                {"h", common.h},
                {"local_zeros", lc.n},
                {"N", lc.N},
                {"L", {lf.real() + lc.N, lf.imag()}}};
      std::cout << j.dump(2) << '\n';
    } else if (*frostman) {
      const BoundedFunctionSpec spec = load_spec(source, common);
      const SweepConfig cfg = make_config(source, common);
      const FrostmanResult r = cfg.measure_family
                                   ? frostman_integral_refined(cfg.measure_family, cfg.vertex, common.gamma,
                                                               cfg.family_first, cfg.family_step, cfg.family_last)
                                   : frostman_integral(spec.complete_measure(), cfg.vertex, common.gamma);
      json j = frostman_json(r);
      j["gamma"] = common.gamma;
      j["vertex_theta"] = cfg.vertex.theta();
      std::cout << j.dump(2) << '\n';
    } else if (*sweep) {
      return emit_sweep(verify_theorem_arg(load_spec(source, common), make_config(source, common)), common);
    } else if (*sweep_lnb) {
      return emit_sweep(verify_theorem_lnb(load_spec(source, common), make_config(source, common)), common);
    } else if (*gen) {
      BoundedFunctionSpec spec = load_spec(source, common);
      if (conjugate) spec.zeros = gen_conjugate_pairs(spec.zeros);
      std::cout << to_json(spec).dump(2) << '\n';
    } else if (*oracle) {
      json j = json::object();
      if (which == "product" || which == "all") {
        const BoundedFunctionSpec spec = load_spec(source, common);
        const cplx z = parse_point(point);
        const cplx naive = oracle_naive_product(spec.zeros, z);
        const ProductValue main = product_eval(spec.zeros, z);
        j["product"] = {{"naive", {naive.real(), naive.imag()}},
                        {"main", {main.value.real(), main.value.imag()}},
                        {"abs_diff", std::abs(naive - main.value)},
                        {"tail_ignored_by_naive", spec.zeros.tail().kind != TailKind::none}};
      }
      if (which == "rl" || which == "all") {
        const auto h = [](double x) { return 1.0 / std::norm(1.0 - x * std::polar(1.0, 0.3)); };
        const double gamma = common.gamma > 0.0 ? common.gamma : 0.5;
        const double r = 1.0 - std::ldexp(1.0, -10);
        const double naive = oracle_naive_rl(h, gamma, r, panels);
        const FracResult main = rl_integral(h, gamma, r);
        j["rl"] = {{"integrand", "|1 - x e^{0.3i}|^-2"}, {"gamma", gamma}, {"r", r}, {"naive", naive},
                   {"main", main.value}, {"rel_diff", std::abs(main.value - naive) / std::abs(naive)}};
      }
      if (which == "frostman" || which == "all") {
        const BoundedFunctionSpec spec = load_spec(source, common);
        const BoundaryPoint vertex(common.vertex_theta);
        const double naive = oracle_frostman(spec.zeros, vertex, common.gamma);
        const FrostmanSum main = frostman_sum(spec.zeros, vertex, common.gamma);
        j["frostman"] = {{"naive_materialised", naive}, {"main_partial", main.partial},
                         {"main_with_tail", main.value}, {"tail_bound", main.tail_bound}};
      }
      std::cout << j.dump(2) << '\n';
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", to_string(e.kind()), e.what());
    return 1;
  }
  return 0;
}
