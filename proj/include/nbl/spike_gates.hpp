#pragma once

#include <cstddef>
#include <span>

#include "nbl/reference.hpp"

namespace nbl::spike {

/// Delay-free neuron: fires at t iff the excitatory input spikes at t and
/// the inhibitory input does not.
SpikeTrain neuron_eval(const SpikeTrain& excitatory, const SpikeTrain& inhibitory);

struct OrthonOutputs {
  SpikeTrain ab;       ///< A ∩ B (upper output)
  SpikeTrain a_not_b;  ///< A ∩ B̄ (lower output)
};

/// Two-neuron orthon. Neuron 1 is excited by A and inhibited by B, giving
/// A ∩ B̄; neuron 2 is excited by A and inhibited by neuron 1, giving A ∩ B.
OrthonOutputs orthon_eval(const SpikeTrain& a, const SpikeTrain& b);

/// Saturating union neuron with any number of excitatory inputs.
SpikeTrain adder_eval(std::span<const SpikeTrain> inputs);

/// NOT circuit: orthon with the universe on A and x on B; the lower output
/// is x̄ ∩ U. `x` must be H or L.
SpikeTrain spike_not(const SpikePair& pair, const SpikeTrain& x);

/// AND circuit of four orthons feeding a three-input adder:
///   o1 = orthon(x1, x2).ab        = x1 ∩ x2
///   o2 = orthon(o1, H).ab         = x1 ∩ x2 ∩ H
///   o3 = orthon(x1, L).ab         = x1 ∩ L
///   o4 = orthon(x2, L).ab         = x2 ∩ L
///   y  = adder(o2, o3, o4)
SpikeTrain spike_and(const SpikePair& pair, const SpikeTrain& x1,
                     const SpikeTrain& x2);

// Derived gates over the spike NOT/AND circuits, same compositions as the
// RTW family.
SpikeTrain spike_or(const SpikePair& pair, const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain spike_nand(const SpikePair& pair, const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain spike_nor(const SpikePair& pair, const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain spike_xor(const SpikePair& pair, const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain spike_xnor(const SpikePair& pair, const SpikeTrain& a, const SpikeTrain& b);

/// Earliest step at which `y` is decided against the pair; equals the first
/// spike of the universe. Throws `Error(ambiguous_window)` if U is empty,
/// `Error(invalid_logic_value)` if y is not H or L.
std::size_t decision_step(const SpikePair& pair, const SpikeTrain& y);

/// Direct set-algebra forms of the NOT and AND gates, used to cross-check
/// the neuron circuits.
namespace algebra {

SpikeTrain complement(const SpikeTrain& x);
SpikeTrain intersect(const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain unite(const SpikeTrain& a, const SpikeTrain& b);

/// x̄ ∩ (L ∪ H)
SpikeTrain not_gate(const SpikePair& pair, const SpikeTrain& x);
/// (x1 ∩ x2 ∩ H) ∪ (x1 ∩ L) ∪ (x2 ∩ L)
SpikeTrain and_gate(const SpikePair& pair, const SpikeTrain& x1,
                    const SpikeTrain& x2);

}  // namespace algebra

}  // namespace nbl::spike
