#ifndef ICN_BIRTH_DEATH_HPP
#define ICN_BIRTH_DEATH_HPP

#include <string>
#include <vector>

namespace icn {

/// Continuous-time birth-death chain; rates in units of 1/mean-packet-time.
/// up[i] is the i -> i+1 rate, down[i] the i -> i-1 rate.
struct BirthDeathChain {
  std::vector<double> up;
  std::vector<double> down;
  int n_states() const { return static_cast<int>(up.size()); }
};

struct PassageMoments {
  double mean;   // E[T]
  double second; // E[T^2]
  double var;
};

/// First-passage time from `from` to `to` by first-step analysis: with
/// exponential holding times, E[T_x] = 1/R_x + sum_y p_xy E[T_y] and
/// E[T_x^2] = 2 E[T_x]/R_x + sum_y p_xy E[T_y^2]. Exact for CTMCs up to
/// linear-solver tolerance. Throws when `to` is unreachable.
PassageMoments passage_moments(const BirthDeathChain& chain, int from, int to);

/// Unnormalized-then-normalized stationary distribution of the chain.
std::vector<double> birth_death_stationary(const BirthDeathChain& chain);

/// The six-state chain seen by the center link of a four-leaf star: state 0
/// is "center transmitting", state 1 "all idle", states 2..5 "j outer links
/// transmitting". Each idle outer link counts down at rate rho, each active
/// one completes at rate 1.
BirthDeathChain star_center_chain(double rho);

/// Mean residual access time when the inter-access time is an exponential
/// unit-mean transmission followed by the passage back to transmission:
/// (2 + Var[T] + E[T]^2 + 2 E[T]) / (2 (1 + E[T])).
double mrat_from_passage(const PassageMoments& passage);

enum class MratFamily {
  isolated,    // countdown 1/rho then unit transmission
  torus21,     // behaves like an isolated link
  torus11,     // half isolated, half star-center, by phase symmetry
  center_star, // center of the four-leaf star
};

double closed_form_mrat(MratFamily family, double rho);

MratFamily mrat_family_from_string(const std::string& name);
std::string to_string(MratFamily family);

} // namespace icn

#endif
