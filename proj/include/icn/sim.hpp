#ifndef ICN_SIM_HPP
#define ICN_SIM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icn/channels.hpp"
#include "icn/contention_graph.hpp"
#include "icn/state_space.hpp"

namespace icn {

enum class Dist { exponential, deterministic, uniform };

Dist dist_from_string(const std::string& name);
std::string to_string(Dist d);

/// Event-driven (q,k) MAC simulation. Time is normalized so the mean packet
/// transmission equals one unit; the countdown mean is 1/rho. The uniform
/// distribution lives on [0, 2*mean].
struct SimConfig {
  ContentionGraph graph;
  ChannelConfig channels{1, 1};
  double rho = 1.0;
  Dist countdown = Dist::exponential;
  Dist transmission = Dist::exponential;
  double horizon = 1e6;
  double warmup = -1.0; // negative: default to 5% of the horizon
  std::uint64_t seed = 1;
  bool record_trace = false;
  bool collect_samples = false; // keep raw inter-access samples per link
  bool track_states = false;    // empirical joint-state occupancy
  int n_batches = 20;           // batch-means batches for the 90% CIs
};

struct TraceInterval {
  int link;
  int channel;
  double start;
  double end;
};

struct LinkStats {
  double throughput = 0.0; // airtime fraction (any channel active)
  double ci90 = 0.0;       // batch-means 90% half-width for the throughput
  double mrat = 0.0;       // NaN when the link never transmitted twice
  long n_samples = 0;      // inter-access sample count
  double sum_y = 0.0;
  double sum_y2 = 0.0;
  std::vector<double> inter_access_samples; // filled when collect_samples
};

struct StateOccupancy {
  std::vector<StateCode> codes; // observed states, ascending
  std::vector<double> freq;     // time fraction inside the measured window
  std::vector<double> ci90;     // batch-means half-width per state
};

struct SimResult {
  std::vector<LinkStats> links;
  std::vector<TraceInterval> trace; // when record_trace
  StateOccupancy occupancy;         // when track_states
  double measured_time = 0.0;       // horizon minus warmup
  double mean_throughput = 0.0;     // network mean link airtime
  double mean_throughput_ci90 = 0.0;
};

/// Runs the exact timer semantics: the timer of (link, channel) counts down
/// only while no neighbor occupies the channel, the link itself is not on
/// that channel, and the link holds fewer than k channels. Freezing stores
/// the remaining countdown, so arbitrary distributions work. Deterministic
/// given the seed; simultaneous events (possible with deterministic
/// distributions) are processed in (link, channel) order. Every timer
/// starts from its stationary-residual age to avoid the synchronized-boot
/// artifact that lattice distributions would otherwise lock into.
SimResult simulate(const SimConfig& config);

struct MratEstimate {
  double value = 0.0;
  bool low_confidence = false; // fewer than 100 samples
};

/// Sample-moment plug-in E[Y^2] / (2 E[Y]). Throws on an empty sample set
/// ("link never transmitted twice" is itself a starvation signal).
MratEstimate mrat_from_samples(const std::vector<double>& samples);

/// Checks LinkTrace feasibility: per-channel intervals of one link never
/// overlap, no link holds more than k channels at once, and no two
/// neighbors share a channel concurrently.
bool validate_trace(const ContentionGraph& g, ChannelConfig channels,
                    const std::vector<TraceInterval>& trace);

/// Same rho under three distribution pairings; per-link throughputs should
/// agree whenever the dynamics mix.
struct InsensitivityReport {
  static constexpr int n_combos = 3;
  std::array<const char*, n_combos> combo = {
      "exponential/exponential", "deterministic/deterministic",
      "uniform/exponential"};
  std::array<std::vector<double>, n_combos> throughput;
};

InsensitivityReport insensitivity_experiment(const ContentionGraph& g,
                                             ChannelConfig channels,
                                             double rho, double horizon,
                                             std::uint64_t seed);

} // namespace icn

#endif
