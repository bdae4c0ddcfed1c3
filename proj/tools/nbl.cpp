// nbl: command-line front end for the noise-based logic toolkit.
//
// Exit codes: 0 success, 1 verification failure (or Ambiguous under
// --strict), 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbl/csv.hpp"
#include "nbl/hyperspace.hpp"
#include "nbl/netlist.hpp"
#include "nbl/report.hpp"
#include "nbl/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  std::uint64_t seed = 0;
  std::size_t steps = 256;
  std::string backend = "rtw-multiplicative-not";
  std::string format;
  std::string out;
  double rate_h = 0.25;
  double rate_l = 0.25;
  unsigned threads = 0;

  nbl::GeneratorConfig config() const {
    nbl::GeneratorConfig c;
    c.seed = seed;
    c.steps = steps;
    c.rate_h = rate_h;
    c.rate_l = rate_l;
    c.validate();
    return c;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const GlobalFlags& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + g.out + "' for writing");
  f << text;
}

std::string format_or(const GlobalFlags& g, const char* fallback) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

nbl::netlist::NamedAssignment parse_assign(const std::string& text) {
  nbl::netlist::NamedAssignment out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("bad --assign entry '" + item + "', expected name=0|1");
    }
    const std::string value = item.substr(eq + 1);
    if (value != "0" && value != "1") {
      throw UsageError("bad value in --assign entry '" + item + "'");
    }
    out[item.substr(0, eq)] = value == "1";
  }
  return out;
}

std::string table_json(const nbl::WaveformTable& t) {
  std::ostringstream os;
  os << "{";
  for (std::size_t c = 0; c < t.names.size(); ++c) {
    os << (c ? ",\n " : "\n ") << '"' << t.names[c] << "\": [";
    for (std::size_t s = 0; s < t.columns[c].size(); ++s) {
      os << (s ? "," : "") << t.columns[c][s];
    }
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

int cmd_gen(const GlobalFlags& g) {
  const auto config = g.config();
  const auto backend = nbl::sim::parse_backend(g.backend);
  nbl::WaveformTable t;
  if (nbl::sim::backend_family(backend) == nbl::Family::rtw) {
    const auto pair = nbl::gen_rtw_pair(config);
    t.add("H", pair.h);
    t.add("L", pair.l);
    t.add("U", nbl::universe_rtw(pair));
  } else {
    const auto pair = nbl::gen_orthogonal_spike_pair(config);
    t.add("H", pair.h);
    t.add("L", pair.l);
    t.add("U", nbl::universe_spike(pair));
  }
  emit(g, format_or(g, "csv") == "csv" ? nbl::to_csv(t) : table_json(t));
  return kExitOk;
}

int cmd_compile(const GlobalFlags& g, const std::string& path) {
  const auto ast = nbl::netlist::parse(read_file(path));
  emit(g, nbl::report::network_json(nbl::netlist::lower(ast)));
  return kExitOk;
}

int cmd_simulate(const GlobalFlags& g, const std::string& path,
                 const std::string& assign, const std::string& waves,
                 bool strict) {
  const auto config = g.config();
  const auto ast = nbl::netlist::parse(read_file(path));
  const auto net = nbl::netlist::lower(ast);
  const auto backend = nbl::sim::parse_backend(g.backend);
  const auto run = nbl::sim::run(net, backend, parse_assign(assign), config);
  const auto table = nbl::report::simulation_waveforms(net, run);
  if (!waves.empty()) {
    std::ofstream f(waves, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + waves + "' for writing");
    nbl::write_csv(f, table);
  }
  if (format_or(g, "json") == "csv") {
    emit(g, nbl::to_csv(table));
  } else {
    emit(g, nbl::report::simulation_json(net, run));
  }
  if (!run.incidents.empty()) {
    std::cerr << "nbl: " << run.incidents.size() << " ambiguous wire(s), first: "
              << run.incidents.front().wire << ": "
              << run.incidents.front().cause << "\n";
    if (strict) return kExitFailed;
  }
  return kExitOk;
}

std::vector<nbl::sim::Backend> parse_backend_list(const std::string& text) {
  if (text == "all") {
    return {std::begin(nbl::sim::kAllBackends), std::end(nbl::sim::kAllBackends)};
  }
  std::vector<nbl::sim::Backend> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(nbl::sim::parse_backend(item));
  if (out.empty()) throw UsageError("--backends is empty");
  return out;
}

// Test fixture: lowers AND with the OR expansion.
nbl::netlist::ExpansionTable faulty_table(const std::string& fault) {
  using nbl::netlist::GateKind;
  auto table = nbl::netlist::canonical_expansions();
  if (fault == "and-as-or") {
    table[static_cast<std::size_t>(GateKind::AND)] =
        table[static_cast<std::size_t>(GateKind::OR)];
  } else if (!fault.empty()) {
    throw UsageError("unknown --inject-fault '" + fault + "'");
  }
  return table;
}

int cmd_verify(const GlobalFlags& g, const std::string& path,
               const std::string& backends, std::size_t samples,
               const std::string& fault) {
  const auto config = g.config();
  const auto ast = nbl::netlist::parse(read_file(path));
  const auto net = nbl::netlist::lower(ast, faulty_table(fault));
  if (samples == 0 && net.inputs.size() > nbl::sim::kExhaustiveInputLimit) {
    throw UsageError(std::to_string(net.inputs.size()) +
                     " inputs exceed the exhaustive limit of " +
                     std::to_string(nbl::sim::kExhaustiveInputLimit) +
                     "; rerun with --sample N to check N random assignments");
  }
  nbl::sim::VerifyOptions options;
  options.samples = samples;
  options.threads = g.threads;
  std::vector<nbl::sim::EquivalenceReport> reports;
  for (auto b : parse_backend_list(backends)) {
    reports.push_back(nbl::sim::verify_equivalence(ast, net, b, config, options));
  }
  emit(g, nbl::report::equivalence_json(net, reports));
  bool ok = true;
  for (const auto& r : reports) {
    if (r.pass()) continue;
    ok = false;
    std::cerr << "nbl: " << nbl::sim::backend_name(r.backend) << " FAILED";
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      std::cerr << " counterexample:";
      for (std::size_t i = 0; i < net.inputs.size(); ++i) {
        std::cerr << ' ' << net.inputs[i] << '=' << f.assignment[i];
      }
      std::cerr << " output " << f.output << " expected "
                << (f.expected ? "High" : "Low") << " got "
                << nbl::logic_name(f.got);
    }
    std::cerr << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_stats(const GlobalFlags& g, std::size_t n, std::uint64_t trials,
              std::vector<double> epsilons, bool latency_requested) {
  if (epsilons.empty()) epsilons = {0.5, 0.1, 1e-3, 1e-6, 1e-9, 1e-25};
  const auto report = nbl::sim::ambiguity_monte_carlo(n, trials, g.seed, g.threads);
  const auto table = nbl::report::steps_table(epsilons);
  const auto backend = nbl::sim::parse_backend(g.backend);
  if (latency_requested || backend == nbl::sim::Backend::spike) {
    const auto net = nbl::netlist::lower(
        nbl::netlist::parse("input a b\noutput y = AND a b\n"));
    const auto hist = nbl::sim::decision_latency(net, backend, g.config(),
                                                 trials, g.threads);
    emit(g, nbl::report::reliability_json(report, table, &hist));
  } else {
    emit(g, nbl::report::reliability_json(report, table));
  }
  return kExitOk;
}

int cmd_hyperspace(const GlobalFlags& g, const std::string& family,
                   const std::string& bits) {
  nbl::Family f;
  if (family == "rtw") {
    f = nbl::Family::rtw;
  } else if (family == "spike") {
    f = nbl::Family::spike;
  } else {
    throw UsageError("--family must be rtw or spike");
  }
  const auto demo =
      nbl::report::hyperspace_demo(f, nbl::hyper::parse_bits(bits), g.config());
  emit(g, nbl::report::hyperspace_json(demo));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise-based logic simulator, netlist compiler and verifier"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seed", g.seed, "PRNG seed")->capture_default_str();
  app.add_option("--steps", g.steps, "Clock steps per waveform")->capture_default_str();
  app.add_option("--backend", g.backend,
                 "rtw-additive-not | rtw-multiplicative-not | spike")
      ->capture_default_str();
  app.add_option("--format", g.format, "csv | json");
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--rate-h", g.rate_h, "Spike probability per step for H")
      ->capture_default_str();
  app.add_option("--rate-l", g.rate_l, "Spike probability per step for L")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");

  auto* gen = app.add_subcommand("gen", "Emit a reference pair and its universe");

  std::string netlist_path;
  auto* compile = app.add_subcommand("compile", "Lower a netlist and print it as JSON");
  compile->add_option("netlist", netlist_path, "Netlist file")->required();

  std::string assign;
  std::string waves;
  bool strict = false;
  auto* simulate = app.add_subcommand("simulate", "Run a netlist on one input assignment");
  simulate->add_option("netlist", netlist_path, "Netlist file")->required();
  simulate->add_option("--assign", assign, "Input binding, e.g. a=1,b=0");
  simulate->add_option("--waves", waves, "Also write all waveforms as CSV here");
  simulate->add_flag("--strict", strict, "Exit 1 if any wire is Ambiguous");

  std::string backends = "all";
  std::size_t samples = 0;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "Check a netlist against its Boolean oracle");
  verify->add_option("netlist", netlist_path, "Netlist file")->required();
  verify->add_option("--backends", backends, "all or a comma-separated list")
      ->capture_default_str();
  verify->add_option("--sample", samples, "Check N random assignments instead of all");
  verify->add_option("--inject-fault", fault, "Test fixture: and-as-or");

  std::size_t n = 10;
  std::uint64_t trials = 100000;
  std::vector<double> epsilons;
  bool latency = false;
  auto* stats = app.add_subcommand("stats", "Ambiguity probability and step requirements");
  stats->add_option("--n", n, "Window length for the Monte-Carlo check")->capture_default_str();
  stats->add_option("--trials", trials, "Monte-Carlo trials")->capture_default_str();
  stats->add_option("--epsilon", epsilons, "Target error rate(s) for the steps table");
  stats->add_flag("--latency", latency, "Include the decision-latency histogram");

  std::string family = "rtw";
  std::string bits;
  auto* hyperspace = app.add_subcommand("hyperspace", "Hyperspace product/superposition demo");
  hyperspace->add_option("--family", family, "rtw | spike")->capture_default_str();
  hyperspace->add_option("--bits", bits, "Bit pattern, e.g. 10110")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(g);
    if (compile->parsed()) return cmd_compile(g, netlist_path);
    if (simulate->parsed()) return cmd_simulate(g, netlist_path, assign, waves, strict);
    if (verify->parsed()) return cmd_verify(g, netlist_path, backends, samples, fault);
    if (stats->parsed()) return cmd_stats(g, n, trials, epsilons, latency);
    if (hyperspace->parsed()) return cmd_hyperspace(g, family, bits);
  } catch (const UsageError& e) {
    std::cerr << "nbl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nbl::Error& e) {
    std::cerr << "nbl: " << nbl::errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
