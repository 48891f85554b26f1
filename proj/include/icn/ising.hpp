#ifndef ICN_ISING_HPP
#define ICN_ISING_HPP

#include <vector>

namespace icn {

/// Total-variation distance between the spin-to-occupancy transformed Ising
/// distribution (field h chosen so 2h - 2*K*degree = r) and the hard-core
/// CSMA distribution at rho = exp(r), for each ferromagnetic coupling in
/// k_values. As K -> -infinity the Ising distribution concentrates on the
/// feasible states and the distance vanishes.
std::vector<double> ising_ring_tv(int n, double r,
                                  const std::vector<double>& k_values);

std::vector<double> ising_torus_tv(int m, int n, double r,
                                   const std::vector<double>& k_values);

} // namespace icn

#endif
