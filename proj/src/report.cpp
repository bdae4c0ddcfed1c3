#include "nbl/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace nbl::report {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json assignment_json(const std::vector<std::string>& inputs,
                     const netlist::InputVector& values) {
  json j = json::object();
  for (std::size_t i = 0; i < inputs.size() && i < values.size(); ++i) {
    j[inputs[i]] = values[i] ? 1 : 0;
  }
  return j;
}

json optional_step(const std::optional<std::size_t>& s) {
  return s ? json(*s) : json(nullptr);
}

}  // namespace

std::string network_json(const netlist::CompiledNetwork& net) {
  json j;
  j["inputs"] = net.inputs;
  json outs = json::array();
  for (const auto& o : net.outputs) outs.push_back({{"name", o.name}, {"wire", o.wire}});
  j["outputs"] = outs;
  json gates = json::array();
  for (const auto& g : net.gates) {
    json args = json::array();
    for (std::size_t k = 0; k < g.arity(); ++k) args.push_back(g.args[k]);
    gates.push_back({{"op", netlist::prim_name(g.op)},
                     {"args", args},
                     {"src", net.statements[g.source].name}});
  }
  j["gates"] = gates;
  return dump(j);
}

WaveformTable simulation_waveforms(const netlist::CompiledNetwork& net,
                                   const sim::SimulationRun& run) {
  WaveformTable t;
  t.add("H", run.h);
  t.add("L", run.l);
  const auto names = net.wire_names();
  for (std::size_t w = 0; w < run.waveforms.size(); ++w) {
    t.add(names[w], run.waveforms[w]);
  }
  return t;
}

std::string simulation_json(const netlist::CompiledNetwork& net,
                            const sim::SimulationRun& run) {
  const auto expected = netlist::eval_outputs(net, run.assignment);
  json j;
  j["backend"] = sim::backend_name(run.backend);
  j["seed"] = run.config.seed;
  j["steps"] = run.config.steps;
  j["assignment"] = assignment_json(net.inputs, run.assignment);
  j["first_discriminating_step"] = optional_step(run.first_discriminating_step);
  json outs = json::array();
  for (std::size_t i = 0; i < run.outputs.size(); ++i) {
    const auto& o = run.outputs[i];
    json e;
    e["name"] = o.name;
    e["value"] = logic_name(o.classification.value);
    e["expected"] = expected[i] ? "High" : "Low";
    e["decided_at"] = optional_step(o.classification.decided_at);
    if (!o.classification.diagnostic.empty()) e["diagnostic"] = o.classification.diagnostic;
    outs.push_back(e);
  }
  j["outputs"] = outs;
  json inc = json::array();
  for (const auto& i : run.incidents) inc.push_back({{"wire", i.wire}, {"cause", i.cause}});
  j["ambiguous"] = run.incidents.size();
  j["incidents"] = inc;
  return dump(j);
}

std::string equivalence_json(const netlist::CompiledNetwork& net,
                             std::span<const sim::EquivalenceReport> reports) {
  json j;
  j["inputs"] = net.inputs.size();
  j["primitives"] = net.gates.size();
  bool all = !reports.empty();
  json backends = json::array();
  for (const auto& r : reports) {
    all = all && r.pass();
    json b;
    b["backend"] = sim::backend_name(r.backend);
    b["mode"] = r.exhaustive ? "exhaustive" : "sampled";
    b["total"] = r.total;
    b["passed"] = r.passed;
    b["ambiguous"] = r.ambiguous;
    b["errors"] = r.errors;
    b["pass"] = r.pass();
    if (!r.exhaustive && r.inputs < 64) {
      b["coverage"] = static_cast<double>(r.total) /
                      static_cast<double>(std::uint64_t{1} << r.inputs);
    }
    if (r.failures.empty()) {
      b["counterexample"] = nullptr;
    } else {
      const auto& f = r.failures.front();
      json c;
      c["assignment"] = assignment_json(net.inputs, f.assignment);
      c["output"] = f.output;
      c["expected"] = f.expected ? "High" : "Low";
      c["got"] = logic_name(f.got);
      c["detail"] = f.detail;
      b["counterexample"] = c;
    }
    backends.push_back(b);
  }
  j["backends"] = backends;
  j["pass"] = all;
  return dump(j);
}

std::vector<StepsRow> steps_table(std::span<const double> epsilons) {
  std::vector<StepsRow> rows;
  for (double e : epsilons) {
    StepsRow r;
    r.epsilon = e;
    r.le_convention = sim::min_steps_for(e);
    if (e == 1e-25) r.quoted = sim::kQuotedStepsFor1e25;
    rows.push_back(r);
  }
  return rows;
}

std::string latency_json(const sim::LatencyHistogram& h) {
  json j;
  j["backend"] = sim::backend_name(h.backend);
  j["trials"] = h.trials;
  j["success_probability"] = h.success_probability;
  j["mean_decided_at"] = h.mean();
  j["ambiguous_windows"] = h.ambiguous_windows;
  j["late_decisions"] = h.late_decisions;
  // Trailing empty bins are trimmed.
  std::size_t last = h.counts.size();
  while (last > 0 && h.counts[last - 1] == 0) --last;
  j["histogram"] = std::vector<std::uint64_t>(h.counts.begin(), h.counts.begin() + last);
  return j.dump(2) + "\n";
}

std::string reliability_json(const sim::ReliabilityReport& r,
                             std::span<const StepsRow> table,
                             const sim::LatencyHistogram* latency) {
  json j;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["analytic"] = r.analytic;
  j["mc_estimate"] = r.mc_estimate;
  j["ambiguous_trials"] = r.ambiguous;
  j["sigma"] = r.sigma;
  j["band_4sigma"] = r.band;
  j["within_band"] = r.within_band();
  json rows = json::array();
  for (const auto& row : table) {
    json e;
    e["epsilon"] = row.epsilon;
    e["le_convention"] = row.le_convention;
    e["quoted"] = row.quoted ? json(*row.quoted) : json(nullptr);
    rows.push_back(e);
  }
  j["min_steps"] = rows;
  if (latency) j["decision_latency"] = json::parse(latency_json(*latency));
  return dump(j);
}

HyperspaceDemo hyperspace_demo(Family family, const hyper::BitPattern& bits,
                               const GeneratorConfig& config) {
  HyperspaceDemo d;
  d.family = family;
  d.bits = bits;
  d.steps = config.steps;
  if (family == Family::rtw) {
    const auto pairs = hyper::gen_rtw_pairs(config, bits.size());
    const auto full = hyper::rtw_product_vector(pairs, bits);
    const auto squeezed = hyper::squeezed_collapse_demo(pairs, bits);
    d.collapsed = full.collapsed();
    d.zero_count = full.zero_count();
    d.squeezed_collapsed = squeezed.collapsed();
    d.squeezed_zero_count = squeezed.zero_count();
    d.pattern_match = hyper::matches_pattern(full.combined, pairs, bits);
  } else {
    const auto pairs = hyper::gen_disjoint_spike_pairs(config, bits.size());
    auto summarize = [&](const hyper::SpikeHyperVector& v, bool& collapsed,
                         std::size_t& absent) {
      const auto m = hyper::recover_bits(v.combined, pairs);
      const auto text = hyper::format_membership(m);
      absent = static_cast<std::size_t>(std::count(text.begin(), text.end(), '?'));
      collapsed = text != hyper::format_bits(bits);
      return text;
    };
    d.recovered_bits = summarize(hyper::spike_superposition(pairs, bits),
                                 d.collapsed, d.zero_count);
    d.squeezed_recovered_bits =
        summarize(hyper::squeezed_spike_superposition(pairs, bits),
                  d.squeezed_collapsed, d.squeezed_zero_count);
  }
  return d;
}

std::string hyperspace_json(const HyperspaceDemo& d) {
  json j;
  j["family"] = family_name(d.family);
  j["N"] = d.bits.size();
  j["bits"] = hyper::format_bits(d.bits);
  j["steps"] = d.steps;
  j["collapsed"] = d.collapsed;
  j["zero_count"] = d.zero_count;
  j["squeezed_collapsed"] = d.squeezed_collapsed;
  j["squeezed_zero_count"] = d.squeezed_zero_count;
  j["recovered_bits"] = d.recovered_bits ? json(*d.recovered_bits) : json(nullptr);
  j["squeezed_recovered_bits"] =
      d.squeezed_recovered_bits ? json(*d.squeezed_recovered_bits) : json(nullptr);
  j["pattern_match"] = d.pattern_match ? json(*d.pattern_match) : json(nullptr);
  return dump(j);
}

}  // namespace nbl::report
