#include "icn/stationary.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace icn {

namespace {

double partition_sum(const StateSpace& space, double rho) {
  double z = 0.0;
  for (StateCode s : space.states()) z += std::pow(rho, space.total_active(s));
  return z;
}

} // namespace

StationaryDistribution stationary_distribution(const ContentionGraph& g,
                                               ChannelConfig config,
                                               double rho) {
  if (rho <= 0) throw std::invalid_argument("access intensity must be > 0");
  StationaryDistribution dist{StateSpace(g, config), rho, {}, 0.0};
  dist.probs.reserve(dist.space.size());
  for (StateCode s : dist.space.states())
    dist.probs.push_back(std::pow(rho, dist.space.total_active(s)));
  for (double p : dist.probs) dist.z += p;
  for (double& p : dist.probs) p /= dist.z;
  return dist;
}

LinkThroughput link_throughput_exact(const StationaryDistribution& dist,
                                     int link) {
  if (link < 0 || link >= dist.space.n_links())
    throw std::invalid_argument("unknown link index");
  LinkThroughput th{0.0, 0.0};
  const auto& table = dist.space.table();
  for (int i = 0; i < dist.space.size(); ++i) {
    const int ls = dist.space.link_state(dist.space.states()[i], link);
    const int active = table.active_channels(ls);
    if (active > 0) th.airtime += dist.probs[i];
    th.mean_channels += active * dist.probs[i];
  }
  return th;
}

double mean_total_active(const StationaryDistribution& dist) {
  double e = 0.0;
  for (int i = 0; i < dist.space.size(); ++i)
    e += dist.space.total_active(dist.space.states()[i]) * dist.probs[i];
  return e;
}

double throughput_z_identity_residual(const ContentionGraph& g,
                                      ChannelConfig config, double rho) {
  const StationaryDistribution dist =
      stationary_distribution(g, config, rho);
  const double h = 1e-5 * rho;
  const double lz_plus = std::log(partition_sum(dist.space, rho + h));
  const double lz_minus = std::log(partition_sum(dist.space, rho - h));
  const double derivative = (lz_plus - lz_minus) / (2.0 * h);
  return std::abs(mean_total_active(dist) - rho * derivative);
}

McsReport mcs_analysis(const ContentionGraph& g, ChannelConfig config) {
  if (config.k != 1)
    throw std::invalid_argument("mcs_analysis is defined for k = 1");
  StateSpace space(g, config);
  McsReport report;
  for (StateCode s : space.states()) {
    const int active = space.total_active(s);
    if (active > report.max_transmitting) {
      report.max_transmitting = active;
      report.num_mcs = 1;
    } else if (active == report.max_transmitting) {
      ++report.num_mcs;
    }
  }
  report.all_links_in_every_mcs =
      report.max_transmitting == space.n_links();
  return report;
}

void write_distribution_csv(const StationaryDistribution& dist,
                            std::ostream& out) {
  out << "state_code,n_active,probability\n";
  for (int i = 0; i < dist.space.size(); ++i) {
    const StateCode s = dist.space.states()[i];
    out << s << "," << dist.space.total_active(s) << "," << dist.probs[i]
        << "\n";
  }
}

} // namespace icn
