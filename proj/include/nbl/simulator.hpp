#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbl/netlist.hpp"
#include "nbl/reference.hpp"

namespace nbl::sim {

enum class Backend { rtw_additive_not, rtw_multiplicative_not, spike };

inline constexpr Backend kAllBackends[] = {
    Backend::rtw_additive_not, Backend::rtw_multiplicative_not, Backend::spike};

std::string_view backend_name(Backend b) noexcept;
/// Throws `Error(invalid_argument)` for an unknown name.
Backend parse_backend(std::string_view name);
Family backend_family(Backend b) noexcept;

struct OutputResult {
  std::string name;
  netlist::WireId wire = 0;
  Classification classification;
};

/// A wire that failed to classify as High or Low.
struct AmbiguityIncident {
  std::string wire;
  std::string cause;
};

struct SimulationRun {
  Backend backend = Backend::rtw_multiplicative_not;
  GeneratorConfig config;
  netlist::InputVector assignment;
  /// Shared reference alphabet for every wire of the run.
  Waveform h;
  Waveform l;
  /// Indexed by wire id.
  std::vector<Waveform> waveforms;
  std::vector<OutputResult> outputs;
  std::vector<AmbiguityIncident> incidents;

  /// First step where H and L differ; empty if they never do.
  std::optional<std::size_t> first_discriminating_step;
};

/// Generates one reference pair from `config`, binds each input to H or L,
/// evaluates the primitives in order with the backend's NOT/AND gates, and
/// classifies every wire. Ambiguous wires are recorded as incidents rather
/// than thrown.
SimulationRun run(const netlist::CompiledNetwork& net, Backend backend,
                  const netlist::InputVector& assignment,
                  const GeneratorConfig& config);
SimulationRun run(const netlist::CompiledNetwork& net, Backend backend,
                  const netlist::NamedAssignment& assignment,
                  const GeneratorConfig& config);

/// Above this many inputs, verification must be run in sampling mode.
inline constexpr std::size_t kExhaustiveInputLimit = 20;

struct VerifyOptions {
  /// 0 = exhaustive; otherwise number of uniformly sampled assignments.
  std::size_t samples = 0;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
  /// Cap on the number of failures kept in the report.
  std::size_t max_failures = 16;
};

struct Mismatch {
  netlist::InputVector assignment;
  std::string output;
  bool expected = false;
  Logic got = Logic::ambiguous;
  std::string detail;
};

struct EquivalenceReport {
  Backend backend = Backend::rtw_multiplicative_not;
  std::size_t inputs = 0;
  bool exhaustive = true;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t errors = 0;
  /// Sorted by assignment index; the first entry is the counterexample.
  std::vector<Mismatch> failures;

  bool pass() const noexcept {
    return total > 0 && passed == total && ambiguous == 0 && errors == 0;
  }
};

/// Runs every assignment (or a seeded sample) through `run()` and compares
/// each output's classification to the Boolean oracle evaluated on `oracle`.
/// Assignment k uses seed `derive_seed(config.seed, k)`. Throws
/// `Error(invalid_argument)` when the input count exceeds
/// kExhaustiveInputLimit and no sample size is given.
EquivalenceReport verify_equivalence(const netlist::NetlistAst& oracle,
                                     const netlist::CompiledNetwork& net,
                                     Backend backend,
                                     const GeneratorConfig& config,
                                     const VerifyOptions& options = {});

// --- Reliability -----------------------------------------------------------

/// Probability that two independent telegraph waves agree on all n steps,
/// 0.5^n (exact: a power of two). Throws for n = 0.
double ambiguity_analytic(std::size_t n);

/// Smallest n with 0.5^n <= epsilon. Throws unless 0 < epsilon < 1.
std::size_t min_steps_for(double epsilon);

/// Step count quoted in the literature for a 1e-25 error rate. Note
/// 0.5^83 ≈ 1.03e-25 is slightly above 1e-25, so it differs by one from
/// min_steps_for(1e-25) = 84.
inline constexpr std::size_t kQuotedStepsFor1e25 = 83;

struct ReliabilityReport {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t ambiguous = 0;
  double analytic = 0.0;
  double mc_estimate = 0.0;
  /// Binomial standard deviation of the estimate, sqrt(p(1-p)/trials).
  double sigma = 0.0;
  double band = 0.0;  ///< 4 sigma

  bool within_band() const noexcept {
    const double d = mc_estimate - analytic;
    return (d < 0 ? -d : d) <= band;
  }
};

/// Fraction of independently seeded reference pairs (trial k uses
/// `derive_seed(seed, k)`) whose H and L agree on all n steps.
/// Requires n in [1, 20] and trials >= 1000.
ReliabilityReport ambiguity_monte_carlo(std::size_t n, std::uint64_t trials,
                                        std::uint64_t seed, unsigned threads = 0);

struct LatencyHistogram {
  Backend backend = Backend::spike;
  std::uint64_t trials = 0;
  /// counts[t] = trials decided at step t.
  std::vector<std::uint64_t> counts;
  std::uint64_t ambiguous_windows = 0;
  /// Trials where some output was not decided at the first universe spike
  /// (spike) or first H≠L step (RTW).
  std::uint64_t late_decisions = 0;
  /// Per-step probability of the geometric oracle.
  double success_probability = 0.0;

  double mean() const noexcept;
  std::uint64_t decided() const noexcept { return trials - ambiguous_windows; }
};

/// Distribution of the output decision step over seeded trials with random
/// assignments. Trial k uses `derive_seed(config.seed, k)`.
LatencyHistogram decision_latency(const netlist::CompiledNetwork& net,
                                  Backend backend, const GeneratorConfig& config,
                                  std::uint64_t trials, unsigned threads = 0);

}  // namespace nbl::sim
