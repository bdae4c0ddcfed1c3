#include "nbl/simulator.hpp"

#include <atomic>
#include <cmath>

#include "nbl/random.hpp"
#include "nbl/rtw_gates.hpp"
#include "nbl/spike_gates.hpp"
#include "parallel.hpp"

namespace nbl::sim {

using netlist::CompiledNetwork;
using netlist::InputVector;
using netlist::PrimOp;

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::rtw_additive_not: return "rtw-additive-not";
    case Backend::rtw_multiplicative_not: return "rtw-multiplicative-not";
    case Backend::spike: return "spike";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  for (auto b : kAllBackends) {
    if (backend_name(b) == name) return b;
  }
  throw Error(Errc::invalid_argument,
              "unknown backend '" + std::string(name) +
                  "' (expected rtw-additive-not, rtw-multiplicative-not or spike)");
}

Family backend_family(Backend b) noexcept {
  return b == Backend::spike ? Family::spike : Family::rtw;
}

namespace {

template <class Pair, class NotFn, class AndFn>
SimulationRun evaluate(const CompiledNetwork& net, Backend backend,
                       const InputVector& assignment,
                       const GeneratorConfig& config, const Pair& pair,
                       NotFn&& not_gate, AndFn&& and_gate) {
  using S = typename Pair::signal_type;
  if (assignment.size() != net.inputs.size()) {
    throw Error(Errc::missing_input,
                "assignment has " + std::to_string(assignment.size()) +
                    " values for " + std::to_string(net.inputs.size()) + " inputs");
  }
  std::vector<S> wires;
  wires.reserve(net.wire_count());
  for (bool bit : assignment) wires.push_back(pair.select(bit));
  for (const auto& g : net.gates) {
    if (g.op == PrimOp::NOT) {
      wires.push_back(not_gate(wires[g.args[0]]));
    } else {
      wires.push_back(and_gate(wires[g.args[0]], wires[g.args[1]]));
    }
  }

  SimulationRun out;
  out.backend = backend;
  out.config = config;
  out.assignment = assignment;
  out.h = Waveform(pair.h);
  out.l = Waveform(pair.l);
  out.first_discriminating_step = first_discriminating_step(pair);

  const auto names = net.wire_names();
  std::vector<Classification> cls;
  cls.reserve(wires.size());
  for (std::size_t w = 0; w < wires.size(); ++w) {
    cls.push_back(classify(wires[w], pair));
    if (!cls.back().decided()) {
      out.incidents.push_back({names[w], cls.back().diagnostic});
    }
  }
  for (const auto& o : net.outputs) {
    out.outputs.push_back({o.name, o.wire, cls[o.wire]});
  }
  out.waveforms.reserve(wires.size());
  for (const auto& w : wires) out.waveforms.emplace_back(w);
  return out;
}

}  // namespace

SimulationRun run(const CompiledNetwork& net, Backend backend,
                  const InputVector& assignment, const GeneratorConfig& config) {
  config.validate();
  switch (backend) {
    case Backend::rtw_additive_not:
    case Backend::rtw_multiplicative_not: {
      const rtw::GateContext ctx(gen_rtw_pair(config));
      const bool additive = backend == Backend::rtw_additive_not;
      return evaluate(
          net, backend, assignment, config, ctx.pair(),
          [&](const RtwSignal& x) {
            return additive ? rtw::not_additive(ctx, x)
                            : rtw::not_multiplicative(ctx, x);
          },
          [&](const RtwSignal& a, const RtwSignal& b) {
            return rtw::and_gate(ctx, a, b);
          });
    }
    case Backend::spike: {
      const SpikePair pair = gen_orthogonal_spike_pair(config);
      return evaluate(
          net, backend, assignment, config, pair,
          [&](const SpikeTrain& x) { return spike::spike_not(pair, x); },
          [&](const SpikeTrain& a, const SpikeTrain& b) {
            return spike::spike_and(pair, a, b);
          });
    }
  }
  throw Error(Errc::invalid_argument, "unknown backend");
}

SimulationRun run(const CompiledNetwork& net, Backend backend,
                  const netlist::NamedAssignment& assignment,
                  const GeneratorConfig& config) {
  return run(net, backend, netlist::bind_inputs(net.inputs, assignment), config);
}

namespace {

enum class Outcome : std::uint8_t { pass, mismatch, ambiguous, error };

InputVector sampled_assignment(std::size_t n_inputs, std::uint64_t seed,
                               std::uint64_t k) {
  Rng rng(derive_seed(seed ^ 0x5a5a5a5a5a5a5a5aULL, k));
  InputVector v(n_inputs);
  for (std::size_t i = 0; i < n_inputs; ++i) v[i] = rng.coin();
  return v;
}

struct Check {
  Outcome outcome = Outcome::pass;
  Mismatch mismatch;
};

Check check_one(const netlist::NetlistAst& oracle, const CompiledNetwork& net,
                Backend backend, const InputVector& assignment,
                const GeneratorConfig& config) {
  Check c;
  c.mismatch.assignment = assignment;
  try {
    const auto expected = netlist::eval_boolean(oracle, assignment);
    const auto result = run(net, backend, assignment, config);
    for (const auto& o : result.outputs) {
      const bool want = expected.at(o.name);
      const auto got = o.classification.value;
      if (got == Logic::ambiguous) {
        c.outcome = Outcome::ambiguous;
        c.mismatch = {assignment, o.name, want, got, o.classification.diagnostic};
        return c;
      }
      if ((got == Logic::high) != want) {
        c.outcome = Outcome::mismatch;
        c.mismatch = {assignment, o.name, want, got, "classification disagrees with oracle"};
        return c;
      }
    }
    if (!result.incidents.empty()) {
      c.outcome = Outcome::ambiguous;
      c.mismatch = {assignment, result.incidents.front().wire, false,
                    Logic::ambiguous, result.incidents.front().cause};
    }
  } catch (const Error& e) {
    c.outcome = Outcome::error;
    c.mismatch.detail = std::string(errc_name(e.code())) + ": " + e.what();
  }
  return c;
}

}  // namespace

EquivalenceReport verify_equivalence(const netlist::NetlistAst& oracle,
                                     const CompiledNetwork& net, Backend backend,
                                     const GeneratorConfig& config,
                                     const VerifyOptions& options) {
  config.validate();
  const std::size_t n_inputs = net.inputs.size();
  EquivalenceReport report;
  report.backend = backend;
  report.inputs = n_inputs;
  report.exhaustive = options.samples == 0;
  if (report.exhaustive && n_inputs > kExhaustiveInputLimit) {
    throw Error(Errc::invalid_argument,
                std::to_string(n_inputs) + " inputs exceed the exhaustive limit of " +
                    std::to_string(kExhaustiveInputLimit) +
                    "; pass a sample count to verify a random subset");
  }
  report.total = report.exhaustive ? (std::uint64_t{1} << n_inputs) : options.samples;

  auto assignment_for = [&](std::uint64_t k) {
    return report.exhaustive ? netlist::assignment_from_index(n_inputs, k)
                             : sampled_assignment(n_inputs, config.seed, k);
  };
  auto config_for = [&](std::uint64_t k) {
    return config.with_seed(derive_seed(config.seed, k));
  };

  std::vector<Outcome> outcomes(report.total, Outcome::pass);
  detail::parallel_for(report.total, options.threads, [&](std::uint64_t k) {
    outcomes[k] = check_one(oracle, net, backend, assignment_for(k), config_for(k)).outcome;
  });

  for (std::uint64_t k = 0; k < report.total; ++k) {
    switch (outcomes[k]) {
      case Outcome::pass: ++report.passed; continue;
      case Outcome::ambiguous: ++report.ambiguous; break;
      case Outcome::error: ++report.errors; break;
      case Outcome::mismatch: break;
    }
    if (report.failures.size() < options.max_failures) {
      report.failures.push_back(
          check_one(oracle, net, backend, assignment_for(k), config_for(k)).mismatch);
    }
  }
  return report;
}

double ambiguity_analytic(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be at least 1");
  return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(n, 2000)));
}

std::size_t min_steps_for(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(Errc::invalid_argument, "epsilon must lie in (0, 1)");
  }
  // log2 can land a hair on either side of an integer; settle with exact
  // power-of-two comparisons.
  auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(-std::log2(epsilon))));
  while (n > 1 && std::ldexp(1.0, -static_cast<int>(n - 1)) <= epsilon) --n;
  while (std::ldexp(1.0, -static_cast<int>(n)) > epsilon) ++n;
  return n;
}

ReliabilityReport ambiguity_monte_carlo(std::size_t n, std::uint64_t trials,
                                        std::uint64_t seed, unsigned threads) {
  if (n < 1 || n > 20) throw Error(Errc::invalid_argument, "n must lie in [1, 20]");
  if (trials < 1000) throw Error(Errc::invalid_argument, "trials must be at least 1000");
  std::atomic<std::uint64_t> ambiguous{0};
  GeneratorConfig base;
  base.steps = n;
  detail::parallel_for(trials, threads, [&](std::uint64_t k) {
    const auto pair = gen_rtw_pair(base.with_seed(derive_seed(seed, k)));
    if (pair.h == pair.l) ambiguous.fetch_add(1, std::memory_order_relaxed);
  });
  ReliabilityReport r;
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  r.ambiguous = ambiguous.load();
  r.analytic = ambiguity_analytic(n);
  r.mc_estimate = static_cast<double>(r.ambiguous) / static_cast<double>(trials);
  r.sigma = std::sqrt(r.analytic * (1.0 - r.analytic) / static_cast<double>(trials));
  r.band = 4.0 * r.sigma;
  return r;
}

double LatencyHistogram::mean() const noexcept {
  double sum = 0.0;
  std::uint64_t count = 0;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    sum += static_cast<double>(t) * static_cast<double>(counts[t]);
    count += counts[t];
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

LatencyHistogram decision_latency(const CompiledNetwork& net, Backend backend,
                                  const GeneratorConfig& config,
                                  std::uint64_t trials, unsigned threads) {
  config.validate();
  if (trials == 0) throw Error(Errc::invalid_argument, "trials must be positive");
  constexpr std::int64_t kNoWindow = -1;
  std::vector<std::int64_t> decided(trials, kNoWindow);
  std::vector<std::uint8_t> late(trials, 0);
  detail::parallel_for(trials, threads, [&](std::uint64_t k) {
    const auto cfg = config.with_seed(derive_seed(config.seed, k));
    const auto assignment = sampled_assignment(net.inputs.size(), cfg.seed, 0);
    SimulationRun r;
    try {
      r = run(net, backend, assignment, cfg);
    } catch (const Error& e) {
      if (e.code() == Errc::generation_failed) return;
      throw;
    }
    if (!r.first_discriminating_step) return;
    const auto first = *r.first_discriminating_step;
    std::size_t latest = first;
    for (const auto& o : r.outputs) {
      const auto& at = o.classification.decided_at;
      if (at != first) late[k] = 1;
      if (at && *at > latest) latest = *at;
    }
    decided[k] = static_cast<std::int64_t>(latest);
  });
  LatencyHistogram h;
  h.backend = backend;
  h.trials = trials;
  h.counts.assign(config.steps, 0);
  h.success_probability =
      backend == Backend::spike ? config.rate_h + config.rate_l : 0.5;
  for (std::uint64_t k = 0; k < trials; ++k) {
    if (decided[k] == kNoWindow) {
      ++h.ambiguous_windows;
    } else {
      ++h.counts[static_cast<std::size_t>(decided[k])];
    }
    h.late_decisions += late[k];
  }
  return h;
}

}  // namespace nbl::sim
