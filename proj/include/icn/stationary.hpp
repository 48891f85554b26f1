#ifndef ICN_STATIONARY_HPP
#define ICN_STATIONARY_HPP

#include <iosfwd>
#include <vector>

#include "icn/state_space.hpp"

namespace icn {

/// Product-form stationary distribution over the feasible states:
/// P(s) = rho^{n_s} / Z with n_s the number of ongoing (link, channel)
/// transmissions in s.
struct StationaryDistribution {
  StateSpace space;
  double rho = 1.0;
  std::vector<double> probs; // aligned with space.states()
  double z = 0.0;
};

StationaryDistribution stationary_distribution(const ContentionGraph& g,
                                               ChannelConfig config,
                                               double rho);

struct LinkThroughput {
  double airtime;       // fraction of time with at least one active channel
  double mean_channels; // expected number of active channels E[n_{s_i}]
};

LinkThroughput link_throughput_exact(const StationaryDistribution& dist,
                                     int link);

/// Expected total number of active (link, channel) transmissions E[n_s];
/// the quantity tied to Z through rho * d ln Z / d rho.
double mean_total_active(const StationaryDistribution& dist);

/// |E[n_s] - rho * d ln Z / d rho| with a central difference at relative
/// step 1e-5. Both sides come from enumeration, so this should sit at
/// numerical-noise level.
double throughput_z_identity_residual(const ContentionGraph& g,
                                      ChannelConfig config, double rho);

struct McsReport {
  int max_transmitting = 0;           // most links active in any state
  long num_mcs = 0;                   // states attaining the maximum
  bool all_links_in_every_mcs = false;
};

/// Maximum-channel-state analysis; requires k = 1, where "links
/// transmitting" and "channels in use" coincide.
McsReport mcs_analysis(const ContentionGraph& g, ChannelConfig config);

/// CSV dump: state_code,n_active,probability
void write_distribution_csv(const StationaryDistribution& dist,
                            std::ostream& out);

} // namespace icn

#endif
