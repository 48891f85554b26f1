#ifndef ICN_SWEEP_HPP
#define ICN_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "icn/channels.hpp"

namespace icn {

/// One output record. link_id -1 means "all links" (symmetric topologies
/// report the network mean). ci90 is blank for analytical sources; `note`
/// carries an error message when the point could not be computed.
struct ResultRow {
  std::string topology;
  int q = 1;
  int k = 1;
  double rho = 1.0;
  int n = 0; // ring size, torus side, chain length or unit count
  int link_id = -1;
  std::string metric; // throughput | mrat
  double value = 0.0;
  double ci90 = 0.0;
  bool has_ci = false;
  std::string source; // exact | tm | closed_form | sim
  std::string note;
};

/// Grid specification. Topology kinds: iso, ring (with l), linear (with l),
/// torus (n = side), ladder (closed strip of two-vertex units, n = units).
struct SweepSpec {
  std::string topology = "ring";
  int l = 1;
  std::vector<ChannelConfig> configs;
  std::vector<double> rho_grid;
  std::vector<int> n_list;
  std::vector<std::string> modes; // subset of exact, tm, closed_form, sim
  std::string metric = "throughput";
  double horizon = 1e6;
  std::uint64_t seed = 1;
  int workers = 0; // 0: ICN_WORKERS env var, falling back to hardware count
};

/// Runs every (config, rho, n) grid point in every requested mode. Points
/// execute concurrently; rows come back sorted by (topology, q, rho, n,
/// link_id, source) and are deterministic for a given seed. Per-point
/// failures become rows with a note instead of aborting the sweep.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

/// Paper-figure grids: fig4, fig5, fig6, fig8, fig9, fig10, fig11, trivial.
SweepSpec sweep_preset(const std::string& name);

void write_result_csv(const std::vector<ResultRow>& rows, std::ostream& out);

} // namespace icn

#endif
