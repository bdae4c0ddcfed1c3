#include "nbl/reference.hpp"

#include <cmath>

#include "nbl/random.hpp"

namespace nbl {

void GeneratorConfig::validate() const {
  if (steps == 0) {
    throw Error(Errc::invalid_config, "steps must be at least 1");
  }
  auto valid_rate = [](double r) { return std::isfinite(r) && r > 0.0 && r < 1.0; };
  if (!valid_rate(rate_h) || !valid_rate(rate_l)) {
    throw Error(Errc::invalid_config, "spike rates must lie in (0, 1)");
  }
  if (rate_h + rate_l > 1.0 + 1e-12) {
    throw Error(Errc::invalid_config, "rate_h + rate_l must not exceed 1");
  }
  if (max_retries < 1) {
    throw Error(Errc::invalid_config, "max_retries must be positive");
  }
}

RtwSignal gen_rtw(const GeneratorConfig& config) {
  config.validate();
  Rng rng(config.seed);
  std::vector<Level> v(config.steps);
  for (auto& x : v) x = rng.coin() ? 1 : -1;
  return RtwSignal(std::move(v));
}

RtwPair gen_rtw_pair(const GeneratorConfig& config) {
  return RtwPair{gen_rtw(config.with_seed(derive_seed(config.seed, 0))),
                 gen_rtw(config.with_seed(derive_seed(config.seed, 1)))};
}

SpikePair gen_orthogonal_spike_pair(const GeneratorConfig& config) {
  config.validate();
  Rng rng(config.seed);
  const double cut_h = config.rate_h;
  const double cut_l = config.rate_h + config.rate_l;
  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    std::vector<Level> h(config.steps, 0);
    std::vector<Level> l(config.steps, 0);
    bool any_h = false;
    bool any_l = false;
    for (std::size_t t = 0; t < config.steps; ++t) {
      const double u = rng.uniform();
      if (u < cut_h) {
        h[t] = 1;
        any_h = true;
      } else if (u < cut_l) {
        l[t] = 1;
        any_l = true;
      }
    }
    if (any_h && any_l) {
      return SpikePair{SpikeTrain(std::move(h)), SpikeTrain(std::move(l))};
    }
  }
  throw Error(Errc::generation_failed,
              "no non-empty orthogonal spike pair after " +
                  std::to_string(config.max_retries) + " attempts (steps=" +
                  std::to_string(config.steps) + ")");
}

RtwPair make_rtw_pair(RtwSignal h, RtwSignal l) {
  require_same_length(h.size(), l.size(), "rtw pair");
  if (h.empty()) throw Error(Errc::invalid_argument, "empty reference pair");
  return RtwPair{std::move(h), std::move(l)};
}

void require_orthogonal(const SpikeTrain& h, const SpikeTrain& l) {
  require_same_length(h.size(), l.size(), "spike pair");
  for (std::size_t t = 0; t < h.size(); ++t) {
    if (h[t] == 1 && l[t] == 1) {
      throw Error(Errc::orthogonality_violation,
                  "H and L both spike at step " + std::to_string(t));
    }
  }
}

SpikePair make_spike_pair(SpikeTrain h, SpikeTrain l) {
  require_orthogonal(h, l);
  if (spike_count(h) == 0 || spike_count(l) == 0) {
    throw Error(Errc::invalid_argument,
                "spike references must both contain at least one spike");
  }
  return SpikePair{std::move(h), std::move(l)};
}

MultiLevelSignal universe_rtw(const RtwPair& pair) {
  return MultiLevelSignal(add(pair.h.values(), pair.l.values()));
}

SpikeTrain universe_spike(const SpikeTrain& h, const SpikeTrain& l) {
  require_orthogonal(h, l);
  return SpikeTrain(add(h.values(), l.values()));
}

SpikeTrain universe_spike(const SpikePair& pair) {
  return universe_spike(pair.h, pair.l);
}

const char* logic_name(Logic v) noexcept {
  switch (v) {
    case Logic::high: return "High";
    case Logic::low: return "Low";
    case Logic::ambiguous: return "Ambiguous";
  }
  return "?";
}

std::optional<std::size_t> first_discriminating_step(const RtwPair& pair) {
  for (std::size_t t = 0; t < pair.size(); ++t) {
    if (pair.h[t] != pair.l[t]) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_discriminating_step(const SpikePair& pair) {
  for (std::size_t t = 0; t < pair.size(); ++t) {
    if (pair.h[t] != pair.l[t]) return t;
  }
  return std::nullopt;
}

namespace {

template <class S, class Pair>
Classification classify_against(const S& x, const Pair& pair, Logic tentative,
                                std::size_t step) {
  const S& expected = tentative == Logic::high ? pair.h : pair.l;
  if (x == expected) return {tentative, step, {}};
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] != expected[t]) {
      return {Logic::ambiguous, std::nullopt,
              std::string("decided ") + logic_name(tentative) + " at step " +
                  std::to_string(step) + " but waveform departs from the " +
                  (tentative == Logic::high ? "H" : "L") +
                  " reference at step " + std::to_string(t)};
    }
  }
  return {tentative, step, {}};
}

}  // namespace

Classification classify(const RtwSignal& x, const RtwPair& pair) {
  require_same_length(x.size(), pair.size(), "classify");
  const auto step = first_discriminating_step(pair);
  if (!step) {
    return {Logic::ambiguous, std::nullopt,
            "H and L are identical over all " + std::to_string(pair.size()) +
                " steps"};
  }
  const auto t = *step;
  return classify_against(x, pair, x[t] == pair.h[t] ? Logic::high : Logic::low,
                          t);
}

Classification classify(const SpikeTrain& x, const SpikePair& pair) {
  require_same_length(x.size(), pair.size(), "classify");
  const auto step = first_discriminating_step(pair);
  if (!step) {
    return {Logic::ambiguous, std::nullopt,
            "universe has no spike in the " + std::to_string(pair.size()) +
                "-step window"};
  }
  const auto t = *step;
  // Exactly one reference spikes at t: the waveform either follows it or
  // stays silent, which identifies the other value.
  const bool follows_h = (x[t] == pair.h[t]);
  return classify_against(x, pair, follows_h ? Logic::high : Logic::low, t);
}

}  // namespace nbl
