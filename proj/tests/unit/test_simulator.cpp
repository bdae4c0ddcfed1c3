#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "nbl/simulator.hpp"
#include "random_netlist.hpp"

using namespace nbl;
using namespace nbl::sim;
using netlist::InputVector;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GeneratorConfig cfg(std::uint64_t seed, std::size_t steps, double rh = 0.25,
                    double rl = 0.25) {
  GeneratorConfig c;
  c.seed = seed;
  c.steps = steps;
  c.rate_h = rh;
  c.rate_l = rl;
  return c;
}

const netlist::NetlistAst& full_adder() {
  static const auto ast = netlist::parse(read_file(NBL_TEST_DATA_DIR "/full_adder.net"));
  return ast;
}

}  // namespace

TEST_CASE("backend names round trip") {
  for (auto b : kAllBackends) CHECK(parse_backend(backend_name(b)) == b);
  CHECK_THROWS_AS(parse_backend("quantum"), Error);
  CHECK(backend_family(Backend::spike) == Family::spike);
  CHECK(backend_family(Backend::rtw_additive_not) == Family::rtw);
}

TEST_CASE("full adder simulation") {
  const auto net = netlist::lower(full_adder());
  for (auto b : kAllBackends) {
    const auto r = run(net, b, netlist::NamedAssignment{{"a", true}, {"b", true}, {"cin", false}},
                       cfg(1, 256));
    CAPTURE(backend_name(b));
    REQUIRE(r.outputs.size() == 2);
    CHECK(r.outputs[0].name == "sum");
    CHECK(r.outputs[0].classification.value == Logic::low);
    CHECK(r.outputs[1].classification.value == Logic::high);
    CHECK(r.incidents.empty());
    CHECK(r.waveforms.size() == net.wire_count());
    CHECK(r.first_discriminating_step.has_value());
  }
}

TEST_CASE("runs are deterministic per seed") {
  const auto net = netlist::lower(full_adder());
  const InputVector in{true, false, true};
  for (auto b : kAllBackends) {
    const auto r1 = run(net, b, in, cfg(9, 128));
    const auto r2 = run(net, b, in, cfg(9, 128));
    CHECK(r1.h == r2.h);
    CHECK(r1.l == r2.l);
    CHECK(r1.waveforms == r2.waveforms);
    const auto r3 = run(net, b, in, cfg(10, 128));
    CHECK_FALSE(r1.h == r3.h);
  }
}

TEST_CASE("backends agree with the Boolean oracle on random netlists") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto ast = netlist::parse(testing::random_netlist(seed, {6, 25, 3}));
    const auto net = netlist::lower(ast);
    for (auto b : kAllBackends) {
      const auto rep = verify_equivalence(ast, net, b, cfg(seed, 256));
      CAPTURE(seed);
      CAPTURE(backend_name(b));
      CHECK(rep.pass());
      CHECK(rep.total == (1ULL << ast.inputs.size()));
    }
  }
}

TEST_CASE("fault injection is detected") {
  auto table = netlist::canonical_expansions();
  // Treat AND as OR.
  table[static_cast<std::size_t>(netlist::GateKind::AND)] =
      table[static_cast<std::size_t>(netlist::GateKind::OR)];
  const auto bad = netlist::lower(full_adder(), table);
  for (auto b : kAllBackends) {
    const auto rep = verify_equivalence(full_adder(), bad, b, cfg(3, 256));
    CHECK_FALSE(rep.pass());
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures[0].assignment == InputVector{false, false, true});
    CHECK(rep.failures[0].output == "cout");
  }
}

TEST_CASE("large netlists require sampling") {
  const auto ast = netlist::parse(read_file(NBL_TEST_DATA_DIR "/parity21.net"));
  const auto net = netlist::lower(ast);
  try {
    verify_equivalence(ast, net, Backend::spike, cfg(1, 128));
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
  VerifyOptions opt;
  opt.samples = 64;
  const auto rep = verify_equivalence(ast, net, Backend::rtw_multiplicative_not, cfg(1, 128), opt);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.total == 64);
  CHECK(rep.pass());
}

TEST_CASE("parallel and serial verification agree") {
  const auto ast = netlist::parse(testing::layered_netlist(4, 10, 5, 6));
  const auto net = netlist::lower(ast);
  VerifyOptions serial;
  serial.threads = 1;
  VerifyOptions par;
  par.threads = 4;
  for (auto b : kAllBackends) {
    const auto a = verify_equivalence(ast, net, b, cfg(2, 64), serial);
    const auto c = verify_equivalence(ast, net, b, cfg(2, 64), par);
    CHECK(a.total == c.total);
    CHECK(a.passed == c.passed);
    CHECK(a.ambiguous == c.ambiguous);
    CHECK(a.errors == c.errors);
  }
}

TEST_CASE("short windows produce ambiguity incidents") {
  // With one step, H equals L half the time for RTW.
  const auto net = netlist::lower(netlist::parse("input a\noutput y = NOT a\n"));
  std::size_t ambiguous_runs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = run(net, Backend::rtw_multiplicative_not, InputVector{true}, cfg(seed, 1));
    if (!r.first_discriminating_step) {
      ++ambiguous_runs;
      CHECK_FALSE(r.incidents.empty());
      CHECK(r.outputs[0].classification.value == Logic::ambiguous);
    }
  }
  CHECK(ambiguous_runs > 50);
  CHECK(ambiguous_runs < 150);
}

TEST_CASE("analytic ambiguity and step counts") {
  CHECK(ambiguity_analytic(1) == 0.5);
  CHECK(ambiguity_analytic(3) == 0.125);
  CHECK(ambiguity_analytic(83) >= 1.03e-25);
  CHECK(ambiguity_analytic(83) <= 1.04e-25);
  CHECK_THROWS_AS(ambiguity_analytic(0), Error);
  CHECK(min_steps_for(0.5) == 1);
  CHECK(min_steps_for(0.1) == 4);
  CHECK(min_steps_for(0.125) == 3);
  CHECK(min_steps_for(1e-3) == 10);
  CHECK(min_steps_for(1e-25) == 84);
  CHECK(kQuotedStepsFor1e25 == 83);
  CHECK_THROWS_AS(min_steps_for(0.0), Error);
  CHECK_THROWS_AS(min_steps_for(1.0), Error);
}

TEST_CASE("Monte-Carlo ambiguity stays within 4 sigma") {
  for (std::size_t n : {1U, 5U, 10U, 20U}) {
    const auto r = ambiguity_monte_carlo(n, 100000, 77);
    CAPTURE(n);
    CHECK(r.analytic == ambiguity_analytic(n));
    CHECK(r.within_band());
  }
  CHECK(ambiguity_monte_carlo(3, 2000, 5, 1).ambiguous ==
        ambiguity_monte_carlo(3, 2000, 5, 8).ambiguous);
  CHECK_THROWS_AS(ambiguity_monte_carlo(0, 1000, 1), Error);
  CHECK_THROWS_AS(ambiguity_monte_carlo(21, 1000, 1), Error);
  CHECK_THROWS_AS(ambiguity_monte_carlo(4, 999, 1), Error);
}

TEST_CASE("spike decision latency follows the universe rate") {
  const auto net = netlist::lower(netlist::parse("input a b\noutput y = AND a b\n"));
  const auto h = decision_latency(net, Backend::spike, cfg(1, 64, 0.3, 0.3), 20000);
  CHECK(h.late_decisions == 0);
  CHECK(h.success_probability == doctest::Approx(0.6));
  // Geometric with p = 0.6 starting at 0 has mean (1 - p) / p.
  CHECK(h.mean() == doctest::Approx(0.4 / 0.6).epsilon(0.03));

  const auto always = decision_latency(net, Backend::spike, cfg(2, 16, 0.5, 0.5), 2000);
  REQUIRE_FALSE(always.counts.empty());
  CHECK(always.counts[0] == 2000);
  CHECK(always.ambiguous_windows == 0);
}

TEST_CASE("rtw decision latency") {
  const auto net = netlist::lower(full_adder());
  const auto h = decision_latency(net, Backend::rtw_multiplicative_not, cfg(5, 64), 10000);
  CHECK(h.late_decisions == 0);
  CHECK(h.success_probability == doctest::Approx(0.5));
  CHECK(h.mean() == doctest::Approx(1.0).epsilon(0.05));
}
