#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbl/csv.hpp"
#include "nbl/hyperspace.hpp"
#include "nbl/netlist.hpp"
#include "nbl/simulator.hpp"

// JSON renderings of the library's results. Keys are emitted in a fixed
// order and documents end with a newline, so equal inputs give
// byte-identical text.
namespace nbl::report {

/// {inputs, outputs:[{name, wire}], gates:[{op, args, src}]}; `src` is the
/// name of the statement that produced the primitive.
std::string network_json(const netlist::CompiledNetwork& net);

/// H, L, then every wire of the network by readable name.
WaveformTable simulation_waveforms(const netlist::CompiledNetwork& net,
                                   const sim::SimulationRun& run);

std::string simulation_json(const netlist::CompiledNetwork& net,
                            const sim::SimulationRun& run);

std::string equivalence_json(const netlist::CompiledNetwork& net,
                             std::span<const sim::EquivalenceReport> reports);

struct StepsRow {
  double epsilon = 0.0;
  std::size_t le_convention = 0;
  /// Literature value, present only for the 1e-25 row.
  std::optional<std::size_t> quoted;
};

std::vector<StepsRow> steps_table(std::span<const double> epsilons);

std::string reliability_json(const sim::ReliabilityReport& r,
                             std::span<const StepsRow> table,
                             const sim::LatencyHistogram* latency = nullptr);

std::string latency_json(const sim::LatencyHistogram& h);

struct HyperspaceDemo {
  Family family = Family::rtw;
  hyper::BitPattern bits;
  std::size_t steps = 0;
  /// RTW: the product vector is identically zero. Spike: the membership
  /// test failed to recover every bit.
  bool collapsed = false;
  bool squeezed_collapsed = false;
  /// RTW: zero-valued steps of the product. Spike: bits whose reference
  /// never meets the superposition.
  std::size_t zero_count = 0;
  std::size_t squeezed_zero_count = 0;
  std::optional<std::string> recovered_bits;
  std::optional<std::string> squeezed_recovered_bits;
  /// RTW only: the product matches its own bit pattern.
  std::optional<bool> pattern_match;
};

HyperspaceDemo hyperspace_demo(Family family, const hyper::BitPattern& bits,
                               const GeneratorConfig& config);

std::string hyperspace_json(const HyperspaceDemo& demo);

}  // namespace nbl::report
