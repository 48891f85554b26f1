#ifndef ICN_CLOSED_FORMS_HPP
#define ICN_CLOSED_FORMS_HPP

#include <string>

namespace icn {

/// Closed-form per-link throughput families for the regular topologies.
/// Finite-N families take the ring size through `n`; the open-chain
/// per-vertex family additionally takes the 1-based vertex index through
/// `vertex`.
enum class ThroughputFamily {
  ring11_finite,     // L=1 ring, exact finite-N eigenvalue formula
  ring11_inf,        // L=1 ring, large-N limit
  ring21_finite,     // (2,1) L=1 ring, finite N
  ring21_inf,        // (2,1) L=1 ring, large N
  iso_link,          // isolated link rho/(1+rho)
  lring11,           // L=2 ring, (1,1), large N
  lring21,           // L=2 ring, (2,1), large N
  lring31,           // L=2 ring, (3,1), large N (dominant root found numerically)
  torus11,           // two-phase torus approximation
  torus21,           // (2,1) torus ~ isolated link
  linear11_vertex_i, // open chain, vertex i, finite N
  linear11_edge,     // open chain edge vertex, large N
  linear11_middle,   // open chain interior vertex, large N
  strip21_inf,       // two-vertex-unit strip, (2,1), large rho and N
};

double closed_form_throughput(ThroughputFamily family, double rho, int n = 0,
                              int vertex = 1);

/// Large-N l-nearest (1,1) ring throughput for arbitrary l, via the real
/// positive root of z^{l+1} - z^l - rho.
double lring11_inf_throughput(int l, double rho);

/// Real positive dominant root of the (3,1) L=2 ring factor polynomial
/// z^4 - (1+rho) z^3 - rho z^2 - (2 rho^2 + rho) z - rho^2.
double lring31_dominant_root(double rho);

ThroughputFamily throughput_family_from_string(const std::string& name);
std::string to_string(ThroughputFamily family);

} // namespace icn

#endif
