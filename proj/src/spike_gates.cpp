#include "nbl/spike_gates.hpp"

namespace nbl::spike {

namespace {

void require_logic_value(const SpikePair& pair, const SpikeTrain& x,
                         const char* where) {
  require_same_length(x.size(), pair.size(), where);
  if (!is_logic_value(x, pair)) {
    throw Error(Errc::invalid_logic_value,
                std::string(where) + ": input equals neither H nor L");
  }
}

}  // namespace

SpikeTrain neuron_eval(const SpikeTrain& excitatory,
                       const SpikeTrain& inhibitory) {
  require_same_length(excitatory.size(), inhibitory.size(), "neuron");
  std::vector<Level> out(excitatory.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    out[t] = excitatory[t] * (1 - inhibitory[t]);
  }
  return SpikeTrain(std::move(out));
}

OrthonOutputs orthon_eval(const SpikeTrain& a, const SpikeTrain& b) {
  SpikeTrain lower = neuron_eval(a, b);
  SpikeTrain upper = neuron_eval(a, lower);
  return {std::move(upper), std::move(lower)};
}

SpikeTrain adder_eval(std::span<const SpikeTrain> inputs) {
  if (inputs.empty()) {
    throw Error(Errc::invalid_argument, "adder needs at least one input");
  }
  std::vector<Level> out(inputs.front().size(), 0);
  for (const auto& in : inputs) {
    require_same_length(in.size(), out.size(), "adder");
    for (std::size_t t = 0; t < out.size(); ++t) out[t] |= in[t];
  }
  return SpikeTrain(std::move(out));
}

SpikeTrain spike_not(const SpikePair& pair, const SpikeTrain& x) {
  require_logic_value(pair, x, "spike_not");
  return orthon_eval(universe_spike(pair), x).a_not_b;
}

SpikeTrain spike_and(const SpikePair& pair, const SpikeTrain& x1,
                     const SpikeTrain& x2) {
  require_orthogonal(pair.h, pair.l);
  require_logic_value(pair, x1, "spike_and");
  require_logic_value(pair, x2, "spike_and");
  const SpikeTrain both = orthon_eval(x1, x2).ab;
  const SpikeTrain terms[] = {
      orthon_eval(both, pair.h).ab,
      orthon_eval(x1, pair.l).ab,
      orthon_eval(x2, pair.l).ab,
  };
  return adder_eval(terms);
}

SpikeTrain spike_or(const SpikePair& pair, const SpikeTrain& a,
                    const SpikeTrain& b) {
  return spike_not(pair, spike_and(pair, spike_not(pair, a), spike_not(pair, b)));
}

SpikeTrain spike_nand(const SpikePair& pair, const SpikeTrain& a,
                      const SpikeTrain& b) {
  return spike_not(pair, spike_and(pair, a, b));
}

SpikeTrain spike_nor(const SpikePair& pair, const SpikeTrain& a,
                     const SpikeTrain& b) {
  return spike_not(pair, spike_or(pair, a, b));
}

SpikeTrain spike_xor(const SpikePair& pair, const SpikeTrain& a,
                     const SpikeTrain& b) {
  return spike_or(pair, spike_and(pair, a, spike_not(pair, b)),
                  spike_and(pair, spike_not(pair, a), b));
}

SpikeTrain spike_xnor(const SpikePair& pair, const SpikeTrain& a,
                      const SpikeTrain& b) {
  return spike_not(pair, spike_xor(pair, a, b));
}

std::size_t decision_step(const SpikePair& pair, const SpikeTrain& y) {
  require_logic_value(pair, y, "decision_step");
  const auto c = classify(y, pair);
  if (!c.decided_at) {
    throw Error(Errc::ambiguous_window, "decision_step: " + c.diagnostic);
  }
  return *c.decided_at;
}

namespace algebra {

SpikeTrain complement(const SpikeTrain& x) {
  std::vector<Level> out(x.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = 1 - x[t];
  return SpikeTrain(std::move(out));
}

SpikeTrain intersect(const SpikeTrain& a, const SpikeTrain& b) {
  return SpikeTrain(mul(a.values(), b.values()));
}

SpikeTrain unite(const SpikeTrain& a, const SpikeTrain& b) {
  require_same_length(a.size(), b.size(), "unite");
  std::vector<Level> out(a.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = (a[t] + b[t]) > 0;
  return SpikeTrain(std::move(out));
}

SpikeTrain not_gate(const SpikePair& pair, const SpikeTrain& x) {
  return intersect(complement(x), unite(pair.l, pair.h));
}

SpikeTrain and_gate(const SpikePair& pair, const SpikeTrain& x1,
                    const SpikeTrain& x2) {
  return unite(unite(intersect(intersect(x1, x2), pair.h),
                     intersect(x1, pair.l)),
               intersect(x2, pair.l));
}

}  // namespace algebra

}  // namespace nbl::spike
