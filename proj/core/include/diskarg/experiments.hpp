#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diskarg/frac_calc.hpp"
#include "diskarg/measures.hpp"

namespace diskarg {

// ---- generators ----

/// a_k = (1 - k^-beta) vertex for k = 2..count. Zeros whose deficit falls
/// below 64 machine epsilons are not materialised; a power tail with the
/// same exponent stands in for them.
ZeroSequence gen_power_radial(double beta, std::size_t count, const BoundaryPoint& vertex);

/// a_k = (1 - q^k) vertex for k = 1..count, optionally followed by the
/// geometric tail k > count.
ZeroSequence gen_geometric_radial(double q, std::size_t count, const BoundaryPoint& vertex, bool with_tail);

/// c_{2n-1} = a_n, c_{2n} = conj(a_n). Throws real_zero_in_base for a real a_n.
ZeroSequence gen_conjugate_pairs(const ZeroSequence& base);

/// exp(-(1 + z)/(1 - z)).
BoundedFunctionSpec atom_spec();
/// Zero-free spec with boundary measure power_law_measure(alpha, depth).
BoundedFunctionSpec power_law_spec(double alpha, int depth = 48);

struct RandomSpecOptions {
  int max_zeros = 12;
  double max_radius = 0.999;
  bool boundary = true;
  int max_atoms = 2;
  int max_segments = 4;
  int max_origin_order = 2;
};

/// Random spec with C in (0, 1], random zeros, atoms and a random
/// piecewise-linear boundary part.
BoundedFunctionSpec random_spec(std::mt19937_64& rng, const RandomSpecOptions& opts = {});

// ---- sweeps ----

enum class Verdict { bounded, growing, inconclusive };
const char* to_string(Verdict v) noexcept;

/// Ladder levels j (radius 1 - 2^-j) are grouped into octaves (J/2, J],
/// (J/4, J/2], ... below the last level J. Bounded: the last octave maximum
/// is at most plateau_factor times the previous one. Growing: every octave
/// maximum is at least growth_factor times the previous one.
struct VerdictRule {
  double plateau_factor = 2.0;
  double growth_factor = 2.0;
};

Verdict classify(std::span<const int> levels, std::span<const double> values, const VerdictRule& rule = {});

struct SweepConfig {
  double gamma = 0.5;
  double sigma = 2.0;
  BoundaryPoint vertex;
  std::vector<int> levels = default_levels();
  double h = 0.5;
  SupOptions sup;
  VerdictRule rule;
  FrostmanOptions frostman;
  /// Optional mesh family for measures that discretise a singular law.
  std::function<CompleteMeasure(int)> measure_family;
  int family_first = 8;
  int family_step = 4;
  int family_last = 200;
  /// Also evaluate the subproduct over zeros with Im(a conj(vertex)) >= 0 and
  /// |1 - a conj(vertex)| <= 1/3 on the pi/4 rays.
  bool necessity_subproduct = true;

  static std::vector<int> default_levels();
};

struct SweepLevel {
  int j = 0;
  double radius = 0.0;
  double sup = 0.0;
  double sup_special = 0.0;
  int evaluated = 0;
  int skipped = 0;
  int failures = 0;
  Verdict verdict_partial = Verdict::inconclusive;
};

struct SweepReport {
  std::string mode;  ///< "arg" or "lnb-re" / "lnb-im"
  double gamma = 0.0;
  double sigma = 0.0;
  double vertex_theta = 0.0;
  int grid_angles = 0;
  FrostmanResult frostman;
  std::vector<SweepLevel> levels;
  Verdict verdict = Verdict::inconclusive;
  /// lnb mode: the imaginary component, reported alongside.
  std::vector<SweepLevel> levels_im;
  Verdict verdict_im = Verdict::inconclusive;
  /// Subproduct values per level on the pi/4 rays (empty when not run).
  std::vector<double> subproduct;
  int total_failures() const;
};

SweepReport verify_theorem_arg(const BoundedFunctionSpec& spec, const SweepConfig& cfg);
SweepReport verify_theorem_lnb(const BoundedFunctionSpec& spec, const SweepConfig& cfg);

/// Report for the full spec followed by one report per random divisor.
std::vector<SweepReport> divisor_stability_run(const BoundedFunctionSpec& spec, const SweepConfig& cfg,
                                               int splits, std::uint64_t seed);

void write_sweep_csv(std::ostream& out, const SweepReport& report);
nlohmann::json to_json(const SweepReport& report);

// ---- brute-force references ----

/// Direct product of the factors, no logarithms; tails are ignored.
cplx oracle_naive_product(const ZeroSequence& zs, cplx z);

/// Uniform panels; h at the panel midpoint times the exact weight integral
/// over the panel.
double oracle_naive_rl(const std::function<double(double)>& h, double gamma, double r, long panels);

/// Plain long-double sum in reverse order; tails are ignored.
double oracle_frostman(const ZeroSequence& zs, const BoundaryPoint& vertex, double gamma);

}  // namespace diskarg
