#include <doctest.h>

#include "nbl/hyperspace.hpp"
#include "nbl/random.hpp"

using namespace nbl;
using namespace nbl::hyper;

namespace {

GeneratorConfig cfg(std::uint64_t seed, std::size_t steps) {
  GeneratorConfig c;
  c.seed = seed;
  c.steps = steps;
  return c;
}

BitPattern random_bits(Rng& rng, std::size_t n) {
  BitPattern b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = rng.coin();
  return b;
}

}  // namespace

TEST_CASE("bit string parsing") {
  CHECK(parse_bits("101") == BitPattern{true, false, true});
  CHECK(format_bits(parse_bits("0110")) == "0110");
  CHECK_THROWS_AS(parse_bits(""), Error);
  CHECK_THROWS_AS(parse_bits("10a"), Error);
}

TEST_CASE("rtw product vector") {
  const std::vector<RtwPair> one = {{RtwSignal{1, -1, 1}, RtwSignal{-1, -1, 1}}};
  CHECK(rtw_product_vector(one, {true}).combined == Waveform{1, -1, 1});

  const std::vector<RtwPair> two = {{RtwSignal{1, -1}, RtwSignal{1, 1}},
                                    {RtwSignal{1, 1}, RtwSignal{-1, -1}}};
  CHECK(rtw_product_vector(two, {true, false}).combined == Waveform{-1, 1});

  CHECK_THROWS_AS(rtw_product_vector(two, {true}), Error);
  CHECK_THROWS_AS(rtw_product_vector(std::vector<RtwPair>{}, {}), Error);
}

TEST_CASE("non-collapse and squeezed collapse") {
  Rng rng(42);
  for (std::size_t n = 1; n <= kDefaultMaxBits; ++n) {
    const auto pairs = gen_rtw_pairs(cfg(n, 128), n);
    for (int rep = 0; rep < 5; ++rep) {
      const auto bits = random_bits(rng, n);
      const auto full = rtw_product_vector(pairs, bits);
      CHECK(full.zero_count() == 0);
      const auto squeezed = squeezed_collapse_demo(pairs, bits);
      const bool any_low = std::find(bits.begin(), bits.end(), false) != bits.end();
      CHECK(squeezed.collapsed() == any_low);
      if (!any_low) CHECK(squeezed.combined == full.combined);
    }
  }
  const auto pairs = gen_rtw_pairs(cfg(3, 64), 1);
  CHECK(squeezed_collapse_demo(pairs, {false}).collapsed());
  CHECK_THROWS_AS(gen_rtw_pairs(cfg(3, 64), kDefaultMaxBits + 1), Error);
}

TEST_CASE("product classification identifies the pattern") {
  Rng rng(7);
  const auto pairs = gen_rtw_pairs(cfg(9, 256), 12);
  for (int rep = 0; rep < 20; ++rep) {
    const auto bits = random_bits(rng, 12);
    const auto v = rtw_product_vector(pairs, bits);
    CHECK(matches_pattern(v.combined, pairs, bits));
    // Flip exactly one bit.
    auto wrong = bits;
    const auto i = rng.next() % 12;
    wrong[i] = !wrong[i];
    CHECK_FALSE(matches_pattern(v.combined, pairs, wrong));
  }
}

TEST_CASE("disjoint spike family") {
  const auto pairs = gen_disjoint_spike_pairs(cfg(5, 1000), 20);
  REQUIRE(pairs.size() == 20);
  std::vector<int> owners(1000, 0);
  for (const auto& p : pairs) {
    CHECK(spike_count(p.h) > 0);
    CHECK(spike_count(p.l) > 0);
    for (std::size_t t = 0; t < 1000; ++t) owners[t] += p.h[t] + p.l[t];
  }
  for (int o : owners) CHECK(o <= 1);
}

TEST_CASE("spike superposition membership recovery") {
  const auto one = gen_disjoint_spike_pairs(cfg(1, 64), 1);
  CHECK(spike_superposition(one, {false}).combined == one[0].l);

  const auto pairs = gen_disjoint_spike_pairs(cfg(3, 256), 3);
  const BitPattern bits = {true, false, true};
  const auto v = spike_superposition(pairs, bits);
  const auto m = recover_bits(v.combined, pairs);
  CHECK(format_membership(m) == "101");

  const auto squeezed = squeezed_spike_superposition(pairs, bits);
  CHECK(format_membership(recover_bits(squeezed.combined, pairs)) == "1?1");

  Rng rng(3);
  const auto big = gen_disjoint_spike_pairs(cfg(4, 1000), 20);
  for (int rep = 0; rep < 20; ++rep) {
    const auto b = random_bits(rng, 20);
    CHECK(format_membership(recover_bits(spike_superposition(big, b).combined, big)) ==
          format_bits(b));
  }
}

TEST_CASE("overlapping spike references are rejected") {
  const std::vector<SpikePair> pairs = {{SpikeTrain{1, 0}, SpikeTrain{0, 1}},
                                        {SpikeTrain{1, 0}, SpikeTrain{0, 0}}};
  try {
    spike_superposition(pairs, {true, true});
    FAIL("expected overlap error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::orthogonality_violation);
  }
}
