#include <doctest.h>

#include <functional>

#include "nbl/random.hpp"
#include "nbl/spike_gates.hpp"

using namespace nbl;
using namespace nbl::spike;

namespace {

SpikePair random_pair(std::uint64_t seed, std::size_t steps, double rh = 0.25,
                      double rl = 0.25) {
  GeneratorConfig c;
  c.seed = seed;
  c.steps = steps;
  c.rate_h = rh;
  c.rate_l = rl;
  return gen_orthogonal_spike_pair(c);
}

const SpikePair kHand{SpikeTrain{0, 1, 0, 0, 1}, SpikeTrain{0, 0, 1, 0, 0}};

}  // namespace

TEST_CASE("neuron") {
  CHECK(neuron_eval(SpikeTrain{1, 1, 0}, SpikeTrain{0, 1, 0}) == SpikeTrain{1, 0, 0});
  CHECK(neuron_eval(SpikeTrain{1, 0, 1}, SpikeTrain{0, 0, 0}) == SpikeTrain{1, 0, 1});
  CHECK(neuron_eval(SpikeTrain{0, 0, 0}, SpikeTrain{1, 0, 1}) == SpikeTrain{0, 0, 0});
  CHECK_THROWS_AS(neuron_eval(SpikeTrain{1}, SpikeTrain{1, 0}), Error);
}

TEST_CASE("orthon") {
  const auto o = orthon_eval(SpikeTrain{1, 0, 1, 1}, SpikeTrain{0, 0, 1, 0});
  CHECK(o.ab == SpikeTrain{0, 0, 1, 0});
  CHECK(o.a_not_b == SpikeTrain{1, 0, 0, 1});
  const SpikeTrain a{1, 0, 1};
  CHECK(orthon_eval(a, a).ab == a);
  CHECK(orthon_eval(a, a).a_not_b == SpikeTrain{0, 0, 0});
  const auto d = orthon_eval(a, SpikeTrain{0, 1, 0});
  CHECK(d.ab == SpikeTrain{0, 0, 0});
  CHECK(d.a_not_b == a);
}

TEST_CASE("orthon matches set formulas for all 2-bit columns") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    std::vector<Level> a(30), b(30);
    for (auto& v : a) v = rng.coin();
    for (auto& v : b) v = rng.coin();
    const SpikeTrain sa(a), sb(b);
    const auto o = orthon_eval(sa, sb);
    CHECK(o.ab == algebra::intersect(sa, sb));
    CHECK(o.a_not_b == algebra::intersect(sa, algebra::complement(sb)));
  }
}

TEST_CASE("adder saturates") {
  const SpikeTrain in[] = {SpikeTrain{1, 0, 0}, SpikeTrain{1, 1, 0}, SpikeTrain{0, 0, 0}};
  CHECK(adder_eval(in) == SpikeTrain{1, 1, 0});
}

TEST_CASE("spike_not") {
  CHECK(spike_not(kHand, kHand.h) == SpikeTrain{0, 0, 1, 0, 0});
  CHECK(spike_not(kHand, kHand.l) == kHand.h);
  try {
    spike_not(kHand, SpikeTrain{1, 0, 0, 0, 0});
    FAIL("expected invalid logic value");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_logic_value);
  }
  const SpikePair overlapping{SpikeTrain{1, 1}, SpikeTrain{0, 1}};
  try {
    spike_not(overlapping, overlapping.h);
    FAIL("expected orthogonality violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::orthogonality_violation);
  }
}

TEST_CASE("spike_and") {
  CHECK(spike_and(kHand, kHand.h, kHand.h) == kHand.h);
  CHECK(spike_and(kHand, kHand.h, kHand.l) == kHand.l);
  CHECK(spike_and(kHand, kHand.l, kHand.h) == kHand.l);
  CHECK(spike_and(kHand, kHand.l, kHand.l) == kHand.l);
  CHECK_THROWS_AS(spike_and(kHand, SpikeTrain{0, 0, 0, 0, 0}, kHand.h), Error);
}

TEST_CASE("circuits agree with set algebra and stay closed") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto p = random_pair(seed, 48, 0.2, 0.3);
    const auto u = universe_spike(p);
    for (int a = 0; a < 2; ++a) {
      const auto& x1 = p.ref(a);
      const auto y_not = spike_not(p, x1);
      REQUIRE(y_not == algebra::not_gate(p, x1));
      REQUIRE(y_not == p.ref(!a));
      for (int b = 0; b < 2; ++b) {
        const auto& x2 = p.ref(b);
        const auto y = spike_and(p, x1, x2);
        REQUIRE(y == algebra::and_gate(p, x1, x2));
        REQUIRE(y == p.ref(a && b));
        for (std::size_t t = 0; t < y.size(); ++t) {
          if (u[t] == 0) REQUIRE(y[t] == 0);
        }
      }
    }
  }
}

TEST_CASE("derived spike gates and De Morgan") {
  using Gate = std::function<SpikeTrain(const SpikePair&, const SpikeTrain&, const SpikeTrain&)>;
  const std::pair<Gate, std::function<bool(bool, bool)>> rows[] = {
      {spike_or, [](bool a, bool b) { return a || b; }},
      {spike_nand, [](bool a, bool b) { return !(a && b); }},
      {spike_nor, [](bool a, bool b) { return !(a || b); }},
      {spike_xor, [](bool a, bool b) { return a != b; }},
      {spike_xnor, [](bool a, bool b) { return a == b; }},
  };
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = random_pair(seed, 64);
    for (const auto& [gate, truth] : rows) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          CHECK(gate(p, p.ref(a), p.ref(b)) == p.ref(truth(a, b)));
        }
      }
    }
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        CHECK(spike_not(p, spike_and(p, p.ref(a), p.ref(b))) ==
              spike_or(p, spike_not(p, p.ref(a)), spike_not(p, p.ref(b))));
      }
    }
  }
  CHECK(spike_or(kHand, kHand.h, kHand.h) == kHand.h);
  CHECK(spike_nand(kHand, kHand.h, kHand.h) == kHand.l);
}

TEST_CASE("decision_step") {
  CHECK(decision_step(kHand, kHand.h) == 1);
  CHECK(decision_step(kHand, kHand.l) == 1);
  const SpikePair empty{SpikeTrain{0, 0, 0}, SpikeTrain{0, 0, 0}};
  try {
    decision_step(empty, empty.h);
    FAIL("expected ambiguous window");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ambiguous_window);
  }
}

TEST_CASE("spike gate prefix depends only on input prefix") {
  const auto p = random_pair(11, 40);
  const auto base = spike_and(p, p.h, p.h);
  for (std::size_t cut : {3U, 15U, 30U}) {
    // Regenerate the suffix with a different seed; keep the prefix.
    const auto other = random_pair(1000 + cut, 40);
    std::vector<Level> h(p.h.begin(), p.h.end()), l(p.l.begin(), p.l.end());
    for (std::size_t t = cut + 1; t < h.size(); ++t) {
      h[t] = other.h[t];
      l[t] = other.l[t];
    }
    const SpikePair q{SpikeTrain(h), SpikeTrain(l)};
    const auto y = spike_and(q, q.h, q.h);
    for (std::size_t t = 0; t <= cut; ++t) CHECK(y[t] == base[t]);
  }
}
