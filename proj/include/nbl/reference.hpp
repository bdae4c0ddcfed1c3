#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "nbl/signal.hpp"

namespace nbl {

/// Seeded generation parameters. Spike rates are per-step probabilities of
/// an H spike and an L spike; RTW generation ignores them but still
/// validates them so a single config can drive every backend.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t steps = 256;
  double rate_h = 0.25;
  double rate_l = 0.25;
  /// Regeneration budget for the non-empty spike-train requirement.
  int max_retries = 64;

  /// Throws `Error(invalid_config)` describing the first violated invariant.
  void validate() const;

  GeneratorConfig with_seed(std::uint64_t s) const {
    GeneratorConfig c = *this;
    c.seed = s;
    return c;
  }
};

/// The (H, L) alphabet every gate output is classified against.
template <class S, Family F>
struct ReferencePair {
  using signal_type = S;
  static constexpr Family family = F;

  S h;
  S l;

  std::size_t size() const noexcept { return h.size(); }
  S select(bool high) const { return high ? h : l; }
  const S& ref(bool high) const noexcept { return high ? h : l; }
};

using RtwPair = ReferencePair<RtwSignal, Family::rtw>;
using SpikePair = ReferencePair<SpikeTrain, Family::spike>;

/// Telegraph wave with each step drawn +1/-1 by a fair coin from
/// `Rng(config.seed)`.
RtwSignal gen_rtw(const GeneratorConfig& config);

/// Independent H and L telegraph waves, drawn from the sub-streams
/// `derive_seed(seed, 0)` and `derive_seed(seed, 1)` respectively.
RtwPair gen_rtw_pair(const GeneratorConfig& config);

/// Orthogonal spike references: each step is one categorical draw among
/// {H spike, L spike, silence} with probabilities (rate_h, rate_l, rest),
/// so H and L can never coincide. Regenerates from the same stream until
/// both trains are non-empty; throws `Error(generation_failed)` once the
/// retry budget is spent.
SpikePair gen_orthogonal_spike_pair(const GeneratorConfig& config);

/// Builds a pair from explicit waveforms, checking length and, for spikes,
/// orthogonality and non-emptiness.
RtwPair make_rtw_pair(RtwSignal h, RtwSignal l);
SpikePair make_spike_pair(SpikeTrain h, SpikeTrain l);

/// Throws `Error(orthogonality_violation)` at the first coincident spike.
void require_orthogonal(const SpikeTrain& h, const SpikeTrain& l);

/// U = H + L, values in {-2, 0, +2}.
MultiLevelSignal universe_rtw(const RtwPair& pair);

/// U = H ∪ L. Rejects overlapping references.
SpikeTrain universe_spike(const SpikeTrain& h, const SpikeTrain& l);
SpikeTrain universe_spike(const SpikePair& pair);

enum class Logic { high, low, ambiguous };

const char* logic_name(Logic v) noexcept;

struct Classification {
  Logic value = Logic::ambiguous;
  /// Step at which the value was established. Empty when the reference
  /// pair never discriminates inside the window.
  std::optional<std::size_t> decided_at;
  std::string diagnostic;

  bool decided() const noexcept { return value != Logic::ambiguous; }
};

/// First step where the references differ (RTW) or where exactly one of
/// them spikes (spike family).
std::optional<std::size_t> first_discriminating_step(const RtwPair& pair);
std::optional<std::size_t> first_discriminating_step(const SpikePair& pair);

/// Decides High/Low at the first discriminating step, then confirms the
/// whole waveform equals the chosen reference. A waveform matching neither
/// reference, or a pair that never discriminates, yields Ambiguous.
Classification classify(const RtwSignal& x, const RtwPair& pair);
Classification classify(const SpikeTrain& x, const SpikePair& pair);

/// True when `x` equals `pair.h` or `pair.l` at every step.
template <class Pair>
bool is_logic_value(const typename Pair::signal_type& x, const Pair& pair) {
  return x == pair.h || x == pair.l;
}

}  // namespace nbl
