#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "icn/sim.hpp"
#include "icn/stationary.hpp"
#include "icn/topology.hpp"

using namespace icn;

namespace {

SimConfig base_config(ContentionGraph g, ChannelConfig ch, double rho,
                      double horizon, std::uint64_t seed) {
  SimConfig cfg;
  cfg.graph = std::move(g);
  cfg.channels = ch;
  cfg.rho = rho;
  cfg.horizon = horizon;
  cfg.seed = seed;
  return cfg;
}

} // namespace

TEST_SUITE("sim") {

TEST_CASE("isolated link at rho=1") {
  auto cfg = base_config(ContentionGraph(1, {}), {1, 1}, 1.0, 1e6, 42);
  const auto res = simulate(cfg);
  CHECK(res.links[0].ci90 <= 0.005);
  CHECK(std::abs(res.links[0].throughput - 0.5) <= 3.0 * res.links[0].ci90);
}

TEST_CASE("ring of four matches enumeration") {
  auto cfg = base_config(make_ring(4, 1), {1, 1}, 1.0, 1e6, 7);
  const auto res = simulate(cfg);
  for (const auto& st : res.links) {
    CHECK(std::abs(st.throughput - 2.0 / 7.0) <=
          std::max(3.0 * st.ci90, 0.01 * 2.0 / 7.0));
  }
}

TEST_CASE("trace is feasible and deterministic") {
  auto cfg = base_config(make_ring(5, 1), {2, 1}, 2.0, 2000, 99);
  cfg.record_trace = true;
  const auto res = simulate(cfg);
  CHECK(!res.trace.empty());
  CHECK(validate_trace(cfg.graph, cfg.channels, res.trace));

  const auto res2 = simulate(cfg);
  REQUIRE(res.trace.size() == res2.trace.size());
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    CHECK(res.trace[i].link == res2.trace[i].link);
    CHECK(res.trace[i].channel == res2.trace[i].channel);
    CHECK(res.trace[i].start == res2.trace[i].start);
    CHECK(res.trace[i].end == res2.trace[i].end);
  }

  // a different seed produces a different trace
  cfg.seed = 100;
  const auto res3 = simulate(cfg);
  CHECK((res3.trace.size() != res.trace.size() ||
         res3.trace[0].start != res.trace[0].start));
}

TEST_CASE("trace feasibility under multi-channel configs") {
  for (ChannelConfig ch : {ChannelConfig{2, 1}, ChannelConfig{2, 2},
                           ChannelConfig{3, 1}}) {
    auto cfg = base_config(make_ring(6, 2), ch, 5.0, 3000, 5);
    cfg.record_trace = true;
    const auto res = simulate(cfg);
    CHECK(validate_trace(cfg.graph, cfg.channels, res.trace));
  }
}

TEST_CASE("validator rejects broken traces") {
  const auto g = make_ring(4, 1);
  // neighbors sharing a channel
  CHECK(!validate_trace(g, {1, 1}, {{0, 0, 0.0, 1.0}, {1, 0, 0.5, 1.5}}));
  // same link overlapping itself on one channel
  CHECK(!validate_trace(g, {1, 1}, {{0, 0, 0.0, 1.0}, {0, 0, 0.5, 1.5}}));
  // more channels than k
  CHECK(!validate_trace(g, {2, 1}, {{0, 0, 0.0, 1.0}, {0, 1, 0.2, 0.8}}));
  CHECK(validate_trace(g, {2, 2}, {{0, 0, 0.0, 1.0}, {0, 1, 0.2, 0.8}}));
  // non-adjacent links may share
  CHECK(validate_trace(g, {1, 1}, {{0, 0, 0.0, 1.0}, {2, 0, 0.5, 1.5}}));
}

TEST_CASE("empirical state occupancy follows the product form") {
  std::map<std::string, std::pair<ContentionGraph, ChannelConfig>> cases;
  cases.emplace("path4_21",
                std::make_pair(make_linear(4, 1), ChannelConfig{2, 1}));
  cases.emplace("k3_22", std::make_pair(make_ring(3, 1), ChannelConfig{2, 2}));
  cases.emplace("c5_11", std::make_pair(make_ring(5, 1), ChannelConfig{1, 1}));
  for (auto& [name, pair] : cases) {
    INFO(name);
    auto cfg = base_config(pair.first, pair.second, 1.0, 2e5, 31);
    cfg.track_states = true;
    const auto res = simulate(cfg);
    const auto dist = stationary_distribution(pair.first, pair.second, 1.0);
    std::map<StateCode, double> exact;
    for (int i = 0; i < dist.space.size(); ++i)
      exact[dist.space.states()[i]] = dist.probs[i];
    int ok = 0, total = 0;
    for (std::size_t i = 0; i < res.occupancy.codes.size(); ++i) {
      REQUIRE(exact.count(res.occupancy.codes[i]) == 1); // always feasible
      const double err =
          std::abs(res.occupancy.freq[i] - exact[res.occupancy.codes[i]]);
      ++total;
      if (err <= 3.0 * res.occupancy.ci90[i] + 1e-4) ++ok;
    }
    CHECK(total >= static_cast<int>(exact.size()) - 1);
    CHECK(ok >= (total * 95) / 100);
  }
}

TEST_CASE("clique airtime on one channel never exceeds one") {
  auto cfg = base_config(make_ring(3, 1), {2, 1}, 10.0, 5e4, 13);
  cfg.record_trace = true;
  const auto res = simulate(cfg);
  for (int ch = 0; ch < 2; ++ch) {
    double total = 0.0;
    for (const auto& iv : res.trace)
      if (iv.channel == ch) total += iv.end - iv.start;
    CHECK(total <= cfg.horizon * (1.0 + 1e-9));
  }
}

TEST_CASE("two channels roughly double the ring throughput") {
  auto cfg1 = base_config(make_ring(4, 1), {1, 1}, 10.0, 4e5, 17);
  auto cfg2 = base_config(make_ring(4, 1), {2, 1}, 10.0, 4e5, 18);
  const double th1 = simulate(cfg1).mean_throughput;
  const double th2 = simulate(cfg2).mean_throughput;
  const double ratio = th2 / th1;
  CHECK(ratio >= 1.8);
  CHECK(ratio <= 2.1);
}

TEST_CASE("mrat estimators") {
  // deterministic samples: residual of a fixed cycle is c/2
  std::vector<double> det(500, 3.0);
  CHECK(mrat_from_samples(det).value == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(!mrat_from_samples(det).low_confidence);

  // few samples are flagged but still computed
  std::vector<double> few(10, 2.0);
  CHECK(mrat_from_samples(few).low_confidence);
  CHECK(mrat_from_samples(few).value == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(mrat_from_samples({}), std::runtime_error);

  // exponential(1) samples approach MRAT 1
  std::mt19937_64 rng(3);
  std::vector<double> ys;
  double u;
  for (int i = 0; i < 200000; ++i) {
    u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    ys.push_back(-std::log1p(-u));
  }
  CHECK(mrat_from_samples(ys).value == doctest::Approx(1.0).epsilon(0.02));

  // simulated isolated link at rho=1: (1+1+1)/(1+1)
  auto cfg = base_config(ContentionGraph(1, {}), {1, 1}, 1.0, 1e6, 4);
  const auto res = simulate(cfg);
  CHECK(res.links[0].n_samples > 100000);
  CHECK(res.links[0].mrat == doctest::Approx(1.5).epsilon(0.02));
}

TEST_CASE("isolated link under k=2 uses both channels") {
  auto cfg = base_config(ContentionGraph(1, {}), {2, 2}, 1.0, 4e5, 12);
  const auto res = simulate(cfg);
  // airtime 1 - (1/(1+rho))^2 = 3/4 at rho=1
  CHECK(res.links[0].throughput == doctest::Approx(0.75).epsilon(0.01));
}

TEST_CASE("insensitivity of mixing distribution pairs") {
  const auto rep = insensitivity_experiment(make_ring(4, 1), {1, 1}, 1.0,
                                            4e5, 21);
  const double want = 2.0 / 7.0;
  // exponential/exponential and uniform/exponential mix and match the
  // product form
  for (double th : rep.throughput[0]) CHECK(th == doctest::Approx(want).epsilon(0.02));
  for (double th : rep.throughput[2]) CHECK(th == doctest::Approx(want).epsilon(0.02));
}

TEST_CASE("configuration validation") {
  auto cfg = base_config(make_ring(4, 1), {1, 1}, 1.0, 100.0, 1);
  cfg.warmup = 100.0;
  CHECK_THROWS(simulate(cfg));
  cfg.warmup = -1.0;
  cfg.rho = 0.0;
  CHECK_THROWS(simulate(cfg));
}

} // TEST_SUITE
