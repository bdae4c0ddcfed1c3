#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nbl/reference.hpp"

namespace nbl::hyper {

/// Demo-size cap on the number of bits in one hyperspace vector.
inline constexpr std::size_t kDefaultMaxBits = 24;

using BitPattern = std::vector<bool>;

/// Parses "1011" (first character is bit 0). Throws on empty or non-binary
/// strings.
BitPattern parse_bits(const std::string& text);
std::string format_bits(const BitPattern& bits);

/// Product vector of telegraph waves, one factor per bit.
struct RtwHyperVector {
  BitPattern bits;
  Waveform combined;

  std::size_t zero_count() const noexcept { return nbl::zero_count(combined.values()); }
  /// True when the product is identically zero.
  bool collapsed() const noexcept { return zero_count() == combined.size(); }
};

/// Union superposition of spike trains, one selected reference per bit.
struct SpikeHyperVector {
  BitPattern bits;
  SpikeTrain combined;
};

/// N independent telegraph pairs, N in [1, max_bits]; pair i is drawn with seed
/// `derive_seed(config.seed, i)`.
std::vector<RtwPair> gen_rtw_pairs(const GeneratorConfig& config, std::size_t n,
                                   std::size_t max_bits = kDefaultMaxBits);

/// N spike pairs that are pairwise disjoint across all 2N trains. Each step
/// is one (2N+1)-way categorical draw: H_i with probability rate_h/N, L_i
/// with rate_l/N, or silence. Regenerates until every train is non-empty.
std::vector<SpikePair> gen_disjoint_spike_pairs(
    const GeneratorConfig& config, std::size_t n,
    std::size_t max_bits = kDefaultMaxBits);

/// combined(t) = ∏ s_i(t), s_i = H_i or L_i per bits[i].
RtwHyperVector rtw_product_vector(std::span<const RtwPair> pairs,
                                  const BitPattern& bits);

/// Same product under the squeezed convention, where a Low bit is the
/// all-zero waveform. Any Low bit zeroes the whole vector.
RtwHyperVector squeezed_collapse_demo(std::span<const RtwPair> pairs,
                                      const BitPattern& bits);

/// True iff multiplying `v` by the candidate pattern's references gives the
/// all-ones waveform (each factor squares to 1).
bool matches_pattern(const Waveform& combined, std::span<const RtwPair> pairs,
                     const BitPattern& candidate);

/// combined = ∪ s_i. Throws `Error(orthogonality_violation)` if any two of
/// the 2N references overlap.
SpikeHyperVector spike_superposition(std::span<const SpikePair> pairs,
                                     const BitPattern& bits);

/// Squeezed spike convention: a Low bit contributes the empty train.
SpikeHyperVector squeezed_spike_superposition(std::span<const SpikePair> pairs,
                                              const BitPattern& bits);

/// Result of a per-bit membership query on a spike superposition.
enum class Membership { high, low, absent, both };

/// Bit i is High if the superposition meets H_i, Low if it meets L_i.
std::vector<Membership> recover_bits(const SpikeTrain& combined,
                                     std::span<const SpikePair> pairs);

/// '1' high, '0' low, '?' absent, 'x' both.
std::string format_membership(std::span<const Membership> m);

}  // namespace nbl::hyper
