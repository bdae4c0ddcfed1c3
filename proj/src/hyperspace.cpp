#include "nbl/hyperspace.hpp"

#include <algorithm>

#include "nbl/random.hpp"

namespace nbl::hyper {

BitPattern parse_bits(const std::string& text) {
  if (text.empty()) {
    throw Error(Errc::invalid_argument, "bit string must not be empty");
  }
  BitPattern bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(Errc::invalid_argument,
                  std::string("bit string may only contain 0 and 1, got '") +
                      c + "'");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

std::string format_bits(const BitPattern& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

namespace {

void check_bit_count(std::size_t n, std::size_t max_bits) {
  if (n == 0 || n > max_bits) {
    throw Error(Errc::invalid_argument,
                "bit count " + std::to_string(n) + " outside [1, " +
                    std::to_string(max_bits) + "]");
  }
}

}  // namespace

std::vector<RtwPair> gen_rtw_pairs(const GeneratorConfig& config,
                                   std::size_t n, std::size_t max_bits) {
  check_bit_count(n, max_bits);
  std::vector<RtwPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pairs.push_back(gen_rtw_pair(config.with_seed(derive_seed(config.seed, i))));
  }
  return pairs;
}

std::vector<SpikePair> gen_disjoint_spike_pairs(const GeneratorConfig& config,
                                                std::size_t n,
                                                std::size_t max_bits) {
  config.validate();
  check_bit_count(n, max_bits);
  const double per_h = config.rate_h / static_cast<double>(n);
  const double per_l = config.rate_l / static_cast<double>(n);
  const double cut_l = config.rate_h + config.rate_l;
  Rng rng(config.seed);
  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    // trains[2i] = H_i, trains[2i+1] = L_i
    std::vector<std::vector<Level>> trains(2 * n, std::vector<Level>(config.steps, 0));
    for (std::size_t t = 0; t < config.steps; ++t) {
      const double u = rng.uniform();
      if (u < config.rate_h) {
        const auto i = std::min(n - 1, static_cast<std::size_t>(u / per_h));
        trains[2 * i][t] = 1;
      } else if (u < cut_l) {
        const auto i =
            std::min(n - 1, static_cast<std::size_t>((u - config.rate_h) / per_l));
        trains[2 * i + 1][t] = 1;
      }
    }
    const bool all_nonempty =
        std::all_of(trains.begin(), trains.end(), [](const auto& tr) {
          return std::find(tr.begin(), tr.end(), 1) != tr.end();
        });
    if (!all_nonempty) continue;
    std::vector<SpikePair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back(SpikePair{SpikeTrain(std::move(trains[2 * i])),
                                SpikeTrain(std::move(trains[2 * i + 1]))});
    }
    return pairs;
  }
  throw Error(Errc::generation_failed,
              "no disjoint spike family with every train non-empty after " +
                  std::to_string(config.max_retries) + " attempts");
}

namespace {

template <class Pair>
void check_inputs(std::span<const Pair> pairs, const BitPattern& bits) {
  if (bits.empty()) throw Error(Errc::invalid_argument, "empty bit list");
  require_same_length(pairs.size(), bits.size(), "hyperspace pairs/bits");
  for (const auto& p : pairs) {
    require_same_length(p.h.size(), pairs.front().size(), "hyperspace pair");
    require_same_length(p.l.size(), pairs.front().size(), "hyperspace pair");
  }
}

Waveform product(std::span<const RtwPair> pairs, const BitPattern& bits,
                 bool squeezed) {
  check_inputs(pairs, bits);
  std::vector<Level> acc(pairs.front().size(), 1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (squeezed && !bits[i]) {
      std::fill(acc.begin(), acc.end(), 0);
      continue;
    }
    const auto& s = pairs[i].ref(bits[i]);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] *= s[t];
  }
  return Waveform(std::move(acc));
}

void require_disjoint(std::span<const SpikePair> pairs) {
  const std::size_t steps = pairs.front().size();
  std::vector<int> owners(steps, 0);
  for (const auto& p : pairs) {
    for (std::size_t t = 0; t < steps; ++t) owners[t] += p.h[t] + p.l[t];
  }
  for (std::size_t t = 0; t < steps; ++t) {
    if (owners[t] > 1) {
      throw Error(Errc::orthogonality_violation,
                  "spike references overlap at step " + std::to_string(t));
    }
  }
}

SpikeHyperVector superpose(std::span<const SpikePair> pairs,
                           const BitPattern& bits, bool squeezed) {
  check_inputs(pairs, bits);
  require_disjoint(pairs);
  std::vector<Level> acc(pairs.front().size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (squeezed && !bits[i]) continue;
    const auto& s = pairs[i].ref(bits[i]);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] |= s[t];
  }
  return {bits, SpikeTrain(std::move(acc))};
}

}  // namespace

RtwHyperVector rtw_product_vector(std::span<const RtwPair> pairs,
                                  const BitPattern& bits) {
  return {bits, product(pairs, bits, false)};
}

RtwHyperVector squeezed_collapse_demo(std::span<const RtwPair> pairs,
                                      const BitPattern& bits) {
  return {bits, product(pairs, bits, true)};
}

bool matches_pattern(const Waveform& combined, std::span<const RtwPair> pairs,
                     const BitPattern& candidate) {
  const Waveform probe = product(pairs, candidate, false);
  require_same_length(combined.size(), probe.size(), "matches_pattern");
  for (std::size_t t = 0; t < probe.size(); ++t) {
    if (combined[t] * probe[t] != 1) return false;
  }
  return true;
}

SpikeHyperVector spike_superposition(std::span<const SpikePair> pairs,
                                     const BitPattern& bits) {
  return superpose(pairs, bits, false);
}

SpikeHyperVector squeezed_spike_superposition(std::span<const SpikePair> pairs,
                                              const BitPattern& bits) {
  return superpose(pairs, bits, true);
}

std::vector<Membership> recover_bits(const SpikeTrain& combined,
                                     std::span<const SpikePair> pairs) {
  std::vector<Membership> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    require_same_length(p.size(), combined.size(), "recover_bits");
    bool meets_h = false;
    bool meets_l = false;
    for (std::size_t t = 0; t < combined.size(); ++t) {
      meets_h |= (combined[t] & p.h[t]) != 0;
      meets_l |= (combined[t] & p.l[t]) != 0;
    }
    out.push_back(meets_h && meets_l ? Membership::both
                  : meets_h          ? Membership::high
                  : meets_l          ? Membership::low
                                     : Membership::absent);
  }
  return out;
}

std::string format_membership(std::span<const Membership> m) {
  std::string s;
  for (auto v : m) {
    switch (v) {
      case Membership::high: s += '1'; break;
      case Membership::low: s += '0'; break;
      case Membership::absent: s += '?'; break;
      case Membership::both: s += 'x'; break;
    }
  }
  return s;
}

}  // namespace nbl::hyper
