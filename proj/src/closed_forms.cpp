#include "icn/closed_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace icn {

namespace {

struct RingRoots {
  double z1, z2;
};

// z^2 - z - rho, the (1,1) single-vertex ring pair
RingRoots ring11_roots(double rho) {
  const double s = std::sqrt(1.0 + 4.0 * rho);
  return {(1.0 + s) / 2.0, (1.0 - s) / 2.0};
}

// z^2 - (rho+1) z - rho, the quadratic factor of the (2,1) ring cubic
RingRoots ring21_roots(double rho) {
  const double s = std::sqrt((rho + 1.0) * (rho + 1.0) + 4.0 * rho);
  return {(rho + 1.0 + s) / 2.0, (rho + 1.0 - s) / 2.0};
}

double positive_root(double rho, double (*f)(double, double)) {
  double lo = 1.0, hi = 2.0 + 2.0 * rho;
  while (f(hi, rho) < 0.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid, rho) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double require_n(int n) {
  if (n < 2) throw std::invalid_argument("family needs a ring size n >= 2");
  return n;
}

} // namespace

double lring31_dominant_root(double rho) {
  return positive_root(rho, [](double z, double r) {
    return z * z * z * z - (1.0 + r) * z * z * z - r * z * z -
           (2.0 * r * r + r) * z - r * r;
  });
}

double lring11_inf_throughput(int l, double rho) {
  if (l < 1) throw std::invalid_argument("need l >= 1");
  double lo = 1.0, hi = 2.0 + rho;
  auto f = [l, rho](double z) {
    return std::pow(z, l + 1) - std::pow(z, l) - rho;
  };
  while (f(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  const double z1 = 0.5 * (lo + hi);
  const double lp = l + 1.0;
  return 1.0 / lp - 1.0 / (lp * (lp * z1 - l));
}

double closed_form_throughput(ThroughputFamily family, double rho, int n,
                              int vertex) {
  if (rho <= 0.0) throw std::invalid_argument("need rho > 0");
  switch (family) {
    case ThroughputFamily::ring11_finite: {
      require_n(n);
      const auto [z1, z2] = ring11_roots(rho);
      const double r = z2 / z1; // |r| < 1, keeps large n in range
      return (-z2 + z1 * std::pow(r, n)) /
             ((z1 - z2) * (1.0 + std::pow(r, n)));
    }
    case ThroughputFamily::ring11_inf:
      return 0.5 - 0.5 / std::sqrt(1.0 + 4.0 * rho);
    case ThroughputFamily::ring21_finite: {
      require_n(n);
      const auto [z1, z2] = ring21_roots(rho);
      const double r2 = z2 / z1, r3 = -rho / z1;
      const double num = (z1 - 1.0) / (z1 - z2) +
                         (1.0 - z2) / (z1 - z2) * std::pow(r2, n) +
                         std::pow(r3, n);
      return num / (1.0 + std::pow(r2, n) + std::pow(r3, n));
    }
    case ThroughputFamily::ring21_inf: {
      const double s = std::sqrt((rho + 1.0) * (rho + 1.0) + 4.0 * rho);
      return (s + rho - 1.0) / (2.0 * s);
    }
    case ThroughputFamily::iso_link:
    case ThroughputFamily::torus21:
      return rho / (1.0 + rho);
    case ThroughputFamily::lring11: {
      const double c = std::cbrt(rho);
      return 1.0 / 3.0 - 1.0 / (9.0 * c + 1.0 / c - 3.0);
    }
    case ThroughputFamily::lring21: {
      const double c = std::cbrt(rho);
      const double z1 = c * c + c / 3.0 + 2.0 / 3.0;
      return 2.0 / 3.0 - (c / 9.0 + 4.0 / 9.0) / z1;
    }
    case ThroughputFamily::lring31: {
      const double z = lring31_dominant_root(rho);
      const double num = rho * (z * z * z + z * z + z + 4.0 * rho * z + 2.0 * rho);
      const double den =
          z * (4.0 * z * z * z - 3.0 * rho * z * z - 3.0 * z * z -
               2.0 * rho * z - rho - 2.0 * rho * rho);
      return num / den;
    }
    case ThroughputFamily::torus11: {
      const double star =
          rho / (1.0 + 5.0 * rho + 6.0 * rho * rho + 4.0 * rho * rho * rho +
                 rho * rho * rho * rho);
      return 0.5 * (rho / (1.0 + rho) + star);
    }
    case ThroughputFamily::linear11_vertex_i: {
      require_n(n);
      if (vertex < 1 || vertex > n)
        throw std::invalid_argument("vertex index must be in 1..n");
      const auto [z1, z2] = ring11_roots(rho);
      const double r = z2 / z1;
      return rho * (1.0 - std::pow(r, vertex)) *
             (1.0 - std::pow(r, n + 1 - vertex)) /
             ((z1 - z2) * z1 * (1.0 - std::pow(r, n + 2)));
    }
    case ThroughputFamily::linear11_edge: {
      const double s = std::sqrt(1.0 + 4.0 * rho);
      return (s - 1.0) / (s + 1.0);
    }
    case ThroughputFamily::linear11_middle: {
      const double s = std::sqrt(1.0 + 4.0 * rho);
      return (s - 1.0) / (2.0 * s);
    }
    case ThroughputFamily::strip21_inf:
      return 1.0 - (rho + 2.0) / (rho * rho + 2.0 * rho + 2.0);
  }
  throw std::invalid_argument("unknown throughput family");
}

ThroughputFamily throughput_family_from_string(const std::string& name) {
  static const std::unordered_map<std::string, ThroughputFamily> map = {
      {"ring11_finite", ThroughputFamily::ring11_finite},
      {"ring11_inf", ThroughputFamily::ring11_inf},
      {"ring21_finite", ThroughputFamily::ring21_finite},
      {"ring21_inf", ThroughputFamily::ring21_inf},
      {"iso_link", ThroughputFamily::iso_link},
      {"Lring11", ThroughputFamily::lring11},
      {"Lring21", ThroughputFamily::lring21},
      {"Lring31", ThroughputFamily::lring31},
      {"torus11", ThroughputFamily::torus11},
      {"torus21", ThroughputFamily::torus21},
      {"linear11_vertex_i", ThroughputFamily::linear11_vertex_i},
      {"linear11_edge", ThroughputFamily::linear11_edge},
      {"linear11_middle", ThroughputFamily::linear11_middle},
      {"strip21_inf", ThroughputFamily::strip21_inf},
  };
  auto it = map.find(name);
  if (it == map.end())
    throw std::invalid_argument("unknown throughput family: " + name);
  return it->second;
}

std::string to_string(ThroughputFamily family) {
  switch (family) {
    case ThroughputFamily::ring11_finite: return "ring11_finite";
    case ThroughputFamily::ring11_inf: return "ring11_inf";
    case ThroughputFamily::ring21_finite: return "ring21_finite";
    case ThroughputFamily::ring21_inf: return "ring21_inf";
    case ThroughputFamily::iso_link: return "iso_link";
    case ThroughputFamily::lring11: return "Lring11";
    case ThroughputFamily::lring21: return "Lring21";
    case ThroughputFamily::lring31: return "Lring31";
    case ThroughputFamily::torus11: return "torus11";
    case ThroughputFamily::torus21: return "torus21";
    case ThroughputFamily::linear11_vertex_i: return "linear11_vertex_i";
    case ThroughputFamily::linear11_edge: return "linear11_edge";
    case ThroughputFamily::linear11_middle: return "linear11_middle";
    case ThroughputFamily::strip21_inf: return "strip21_inf";
  }
  return "?";
}

} // namespace icn
