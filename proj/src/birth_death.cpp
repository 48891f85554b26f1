#include "icn/birth_death.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace icn {

PassageMoments passage_moments(const BirthDeathChain& chain, int from,
                               int to) {
  const int m = chain.n_states();
  if (chain.down.size() != chain.up.size())
    throw std::invalid_argument("rate vector size mismatch");
  if (from < 0 || from >= m || to < 0 || to >= m || from == to)
    throw std::invalid_argument("bad passage endpoints");

  std::vector<int> rows; // transient states, i.e. everything but `to`
  std::vector<int> pos(m, -1);
  for (int s = 0; s < m; ++s)
    if (s != to) {
      pos[s] = static_cast<int>(rows.size());
      rows.push_back(s);
    }
  const int t = static_cast<int>(rows.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(t, t);
  Eigen::VectorXd hold(t);
  for (int r = 0; r < t; ++r) {
    const int s = rows[r];
    const double rate = chain.up[s] + chain.down[s];
    if (rate <= 0.0)
      throw std::runtime_error("target state unreachable: state " +
                               std::to_string(s) + " is absorbing");
    hold(r) = 1.0 / rate;
    a(r, r) = 1.0;
    if (chain.up[s] > 0.0 && s + 1 != to) {
      if (s + 1 >= m) throw std::invalid_argument("up rate off the chain end");
      a(r, pos[s + 1]) -= chain.up[s] / rate;
    }
    if (chain.down[s] > 0.0 && s - 1 != to) {
      if (s - 1 < 0) throw std::invalid_argument("down rate off the chain end");
      a(r, pos[s - 1]) -= chain.down[s] / rate;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible())
    throw std::runtime_error("first-step system is singular: target unreachable");
  const Eigen::VectorXd mean = lu.solve(hold);
  const Eigen::VectorXd second =
      lu.solve((2.0 * hold.array() * mean.array()).matrix());
  PassageMoments out{};
  out.mean = mean(pos[from]);
  out.second = second(pos[from]);
  out.var = out.second - out.mean * out.mean;
  return out;
}

std::vector<double> birth_death_stationary(const BirthDeathChain& chain) {
  const int m = chain.n_states();
  std::vector<double> pi(m, 0.0);
  pi[0] = 1.0;
  for (int s = 0; s + 1 < m; ++s) {
    if (chain.down[s + 1] <= 0.0)
      throw std::runtime_error("chain is not irreducible");
    pi[s + 1] = pi[s] * chain.up[s] / chain.down[s + 1];
  }
  double total = 0.0;
  for (double p : pi) total += p;
  for (double& p : pi) p /= total;
  return pi;
}

BirthDeathChain star_center_chain(double rho) {
  if (rho <= 0.0) throw std::invalid_argument("need rho > 0");
  BirthDeathChain c;
  //            c      i      1        2        3      4
  c.up = {1.0, 4.0 * rho, 3.0 * rho, 2.0 * rho, rho, 0.0};
  c.down = {0.0, rho, 1.0, 2.0, 3.0, 4.0};
  return c;
}

double mrat_from_passage(const PassageMoments& p) {
  return (2.0 + p.var + p.mean * p.mean + 2.0 * p.mean) /
         (2.0 * (1.0 + p.mean));
}

namespace {

double isolated_mrat(double rho) {
  return (rho * rho + rho + 1.0) / (rho * rho + rho);
}

// star-center MRAT as the closed rational function, Horner in rho
double center_star_mrat(double rho) {
  static const double num[] = {12.0, 108.0, 444.0,  924.0, 1156.0,
                               891.0, 429.0, 121.0, 15.0};
  static const double den[] = {1.0, 5.0, 6.0, 4.0, 1.0};
  double n = 0.0;
  for (int i = 8; i >= 0; --i) n = n * rho + num[i];
  double d = 0.0;
  for (int i = 4; i >= 0; --i) d = d * rho + den[i];
  return n / (12.0 * rho * d);
}

} // namespace

double closed_form_mrat(MratFamily family, double rho) {
  if (rho <= 0.0) throw std::invalid_argument("need rho > 0");
  switch (family) {
    case MratFamily::isolated:
    case MratFamily::torus21:
      return isolated_mrat(rho);
    case MratFamily::center_star:
      return center_star_mrat(rho);
    case MratFamily::torus11:
      return 0.5 * isolated_mrat(rho) + 0.5 * center_star_mrat(rho);
  }
  throw std::invalid_argument("unknown mrat family");
}

MratFamily mrat_family_from_string(const std::string& name) {
  static const std::unordered_map<std::string, MratFamily> map = {
      {"isolated", MratFamily::isolated},
      {"torus21", MratFamily::torus21},
      {"torus11", MratFamily::torus11},
      {"center_star", MratFamily::center_star},
  };
  auto it = map.find(name);
  if (it == map.end())
    throw std::invalid_argument("unknown mrat family: " + name);
  return it->second;
}

std::string to_string(MratFamily family) {
  switch (family) {
    case MratFamily::isolated: return "isolated";
    case MratFamily::torus21: return "torus21";
    case MratFamily::torus11: return "torus11";
    case MratFamily::center_star: return "center_star";
  }
  return "?";
}

} // namespace icn
