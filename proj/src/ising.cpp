#include "icn/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace icn {

namespace {

// Both lattices are regular, so the spin-to-occupancy change of variable
// shifts the field uniformly: 2h - 2*K*degree = r.
std::vector<double> tv_distances(int n_sites, int degree,
                                 const std::vector<int>& edge_u,
                                 const std::vector<int>& edge_v, double r,
                                 const std::vector<double>& k_values) {
  if (n_sites > 16)
    throw std::runtime_error("spin enumeration limited to 16 sites");
  const std::size_t n_conf = std::size_t{1} << n_sites;
  const double rho = std::exp(r);

  // hard-core reference distribution over occupancy configurations
  std::vector<double> hard(n_conf, 0.0);
  double zc = 0.0;
  for (std::size_t m = 0; m < n_conf; ++m) {
    bool ok = true;
    for (std::size_t e = 0; e < edge_u.size() && ok; ++e)
      ok = !((m >> edge_u[e]) & 1 && (m >> edge_v[e]) & 1);
    if (!ok) continue;
    int occ = 0;
    for (int i = 0; i < n_sites; ++i) occ += (m >> i) & 1;
    hard[m] = std::pow(rho, occ);
    zc += hard[m];
  }
  for (double& p : hard) p /= zc;

  std::vector<double> result;
  std::vector<double> energy(n_conf);
  for (double k : k_values) {
    const double h = (r + 2.0 * k * degree) / 2.0;
    double emax = -1e300;
    for (std::size_t m = 0; m < n_conf; ++m) {
      double e = 0.0;
      for (int i = 0; i < n_sites; ++i)
        e += h * (2.0 * ((m >> i) & 1) - 1.0);
      for (std::size_t idx = 0; idx < edge_u.size(); ++idx) {
        const double su = 2.0 * ((m >> edge_u[idx]) & 1) - 1.0;
        const double sv = 2.0 * ((m >> edge_v[idx]) & 1) - 1.0;
        e += k * su * sv;
      }
      energy[m] = e;
      emax = std::max(emax, e);
    }
    double zi = 0.0;
    for (double e : energy) zi += std::exp(e - emax);
    double tv = 0.0;
    for (std::size_t m = 0; m < n_conf; ++m)
      tv += std::abs(std::exp(energy[m] - emax) / zi - hard[m]);
    result.push_back(0.5 * tv);
  }
  return result;
}

} // namespace

std::vector<double> ising_ring_tv(int n, double r,
                                  const std::vector<double>& k_values) {
  if (n < 3 || n > 16)
    throw std::invalid_argument("ring size must be in [3, 16]");
  std::vector<int> eu, ev;
  for (int i = 0; i < n; ++i) {
    eu.push_back(i);
    ev.push_back((i + 1) % n);
  }
  return tv_distances(n, 2, eu, ev, r, k_values);
}

std::vector<double> ising_torus_tv(int m, int n, double r,
                                   const std::vector<double>& k_values) {
  if (m < 3 || n < 3 || m > 4 || n > 4)
    throw std::invalid_argument("torus dimensions must be in [3, 4]");
  auto id = [n](int i, int j) { return i * n + j; };
  std::vector<int> eu, ev;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      eu.push_back(id(i, j));
      ev.push_back(id((i + 1) % m, j));
      eu.push_back(id(i, j));
      ev.push_back(id(i, (j + 1) % n));
    }
  return tv_distances(m * n, 4, eu, ev, r, k_values);
}

} // namespace icn
