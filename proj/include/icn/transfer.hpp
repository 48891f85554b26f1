#ifndef ICN_TRANSFER_HPP
#define ICN_TRANSFER_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "icn/channels.hpp"
#include "icn/contention_graph.hpp"
#include "icn/state_space.hpp"

namespace icn {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Extended precision is the default for partition-function work: traces of
/// A^N leave double range well before they leave long double range.
using Real = long double;

/// One feasible state of a repeating unit.
struct UnitState {
  std::vector<std::uint32_t> masks; // channel mask per unit vertex
  int n_active = 0;                 // transmissions inside the unit
  StateCode code = 0;               // packed per-vertex state index
};

/// Feasible states of one repeating unit under (q,k), sorted by packed code
/// so the all-idle state is index 0.
class UnitStateSpace {
public:
  UnitStateSpace(const ContentionGraph& unit, ChannelConfig config)
      : space_(unit, config) {
    states_.reserve(space_.size());
    for (StateCode code : space_.states()) {
      UnitState s;
      s.code = code;
      s.masks.resize(unit.n_vertices());
      for (int v = 0; v < unit.n_vertices(); ++v)
        s.masks[v] = space_.table().mask(space_.link_state(code, v));
      s.n_active = space_.total_active(code);
      states_.push_back(std::move(s));
    }
  }

  int size() const { return static_cast<int>(states_.size()); }
  const UnitState& state(int i) const { return states_[i]; }
  int vertices_per_unit() const { return space_.graph().n_vertices(); }
  ChannelConfig config() const { return space_.table().config(); }

  /// phi(s) = rho^{n_s}
  template <class Scalar>
  std::vector<Scalar> weights(Scalar rho) const {
    std::vector<Scalar> w;
    w.reserve(states_.size());
    for (const auto& s : states_)
      w.push_back(std::pow(rho, Scalar(s.n_active)));
    return w;
  }

private:
  StateSpace space_;
  std::vector<UnitState> states_;
};

/// Transfer matrix A[s][s'] = psi(s,s') * rho^{e(s)} in both evaluated and
/// symbolic (psi + exponent) form; the symbolic form supports re-evaluation
/// at perturbed rho for numeric derivatives and exact fixture checks.
template <class Scalar>
struct TransferMatrix {
  Eigen::MatrixXi psi;          // 0/1 coupling
  Eigen::VectorXi row_exponent; // phi(s) = rho^row_exponent(s)
  int vertices_per_unit = 1;
  Scalar rho{};
  DenseMatrix<Scalar> a;

  int dimension() const { return static_cast<int>(psi.rows()); }

  DenseMatrix<Scalar> evaluate(Scalar r) const {
    DenseMatrix<Scalar> m(psi.rows(), psi.cols());
    for (Eigen::Index i = 0; i < psi.rows(); ++i) {
      const Scalar w = std::pow(r, Scalar(row_exponent(i)));
      for (Eigen::Index j = 0; j < psi.cols(); ++j)
        m(i, j) = psi(i, j) ? w : Scalar(0);
    }
    return m;
  }
};

/// Couple adjacent units through explicit (vertex-in-unit-i,
/// vertex-in-unit-i+1) edge pairs: states are compatible when every coupled
/// pair uses disjoint channel sets. The all-idle row constrains nothing.
template <class Scalar>
TransferMatrix<Scalar> build_transfer_matrix(
    const UnitStateSpace& space, const std::vector<Edge>& inter_unit_edges,
    Scalar rho) {
  const int vpu = space.vertices_per_unit();
  for (const auto& [a, b] : inter_unit_edges)
    if (a < 0 || b < 0 || a >= vpu || b >= vpu)
      throw std::invalid_argument("inter-unit edge references invalid vertex");
  const int d = space.size();
  TransferMatrix<Scalar> tm;
  tm.psi.setZero(d, d);
  tm.row_exponent.resize(d);
  tm.vertices_per_unit = vpu;
  tm.rho = rho;
  for (int i = 0; i < d; ++i) {
    tm.row_exponent(i) = space.state(i).n_active;
    for (int j = 0; j < d; ++j) {
      bool ok = true;
      for (const auto& [a, b] : inter_unit_edges)
        if (space.state(i).masks[a] & space.state(j).masks[b]) {
          ok = false;
          break;
        }
      tm.psi(i, j) = ok ? 1 : 0;
    }
  }
  tm.a = tm.evaluate(rho);
  return tm;
}

/// Transfer matrix for the l-nearest ring: the unit is a sliding window of
/// l consecutive vertices (mutually adjacent, so channel sets inside the
/// window are pairwise disjoint). A window state advances to a successor
/// that agrees on the l-1 shared vertices and whose incoming vertex does
/// not clash with the outgoing one; the weight counts only the outgoing
/// vertex, so every ring vertex is weighted exactly once. l = 1 yields the
/// ordinary single-vertex ring matrix.
template <class Scalar>
TransferMatrix<Scalar> lnearest_transfer_matrix(int l, ChannelConfig config,
                                                Scalar rho) {
  if (l < 1) throw std::invalid_argument("need l >= 1");
  // complete graph on the window
  std::vector<Edge> clique;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) clique.emplace_back(i, j);
  UnitStateSpace window(ContentionGraph(l, std::move(clique)), config);
  const int d = window.size();
  TransferMatrix<Scalar> tm;
  tm.psi.setZero(d, d);
  tm.row_exponent.resize(d);
  tm.vertices_per_unit = 1;
  tm.rho = rho;
  const LinkStateTable table(config);
  for (int i = 0; i < d; ++i) {
    const auto& s = window.state(i);
    tm.row_exponent(i) = table.active_channels(table.index_of(s.masks[0]));
    for (int j = 0; j < d; ++j) {
      const auto& t = window.state(j);
      bool ok = (s.masks[0] & t.masks[l - 1]) == 0;
      for (int v = 0; v + 1 < l && ok; ++v) ok = s.masks[v + 1] == t.masks[v];
      tm.psi(i, j) = ok ? 1 : 0;
    }
  }
  tm.a = tm.evaluate(rho);
  return tm;
}

template <class Scalar>
DenseMatrix<Scalar> matrix_power(DenseMatrix<Scalar> base, int n) {
  DenseMatrix<Scalar> result =
      DenseMatrix<Scalar>::Identity(base.rows(), base.cols());
  while (n > 0) {
    if (n & 1) result = (result * base).eval();
    base = (base * base).eval();
    n >>= 1;
  }
  return result;
}

/// Perron root of a nonnegative matrix whose square is strictly positive
/// (true for every transfer matrix here: the all-idle row and column are
/// positive). Power iteration with the Collatz-Wielandt sandwich as the
/// convergence certificate: min_i (Ax)_i/x_i and max_i (Ax)_i/x_i bracket
/// the root, so the returned value carries a proven relative tolerance.
template <class Scalar>
Scalar perron_root(const DenseMatrix<Scalar>& a, Scalar tol = Scalar(1e-12),
                   int max_iter = 200000) {
  const Eigen::Index d = a.rows();
  if (d == 0) throw std::invalid_argument("empty matrix");
  DenseVector<Scalar> x = DenseVector<Scalar>::Ones(d);
  for (int it = 0; it < max_iter; ++it) {
    DenseVector<Scalar> y = a * x;
    Scalar lo = y(0) / x(0), hi = lo;
    for (Eigen::Index i = 1; i < d; ++i) {
      const Scalar r = y(i) / x(i);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (lo <= Scalar(0))
      throw std::runtime_error("matrix is not irreducible enough for power iteration");
    if ((hi - lo) <= tol * hi) return (hi + lo) / Scalar(2);
    x = y / y.sum();
  }
  throw std::runtime_error(
      "power iteration did not converge; dominant eigenvalue is degenerate");
}

template <class Scalar>
struct PerronResult {
  Scalar z1;
  Scalar dz1_drho;
};

/// Dominant eigenvalue and its rho-derivative (central difference,
/// relative step 1e-6).
template <class Scalar>
PerronResult<Scalar> dominant_eigenvalue(const TransferMatrix<Scalar>& tm) {
  const Scalar h = Scalar(1e-6) * tm.rho;
  const Scalar z1 = perron_root(tm.a);
  const Scalar zp = perron_root(tm.evaluate(tm.rho + h));
  const Scalar zm = perron_root(tm.evaluate(tm.rho - h));
  return {z1, (zp - zm) / (2 * h)};
}

template <class Scalar>
struct PartitionValue {
  Scalar value;
  /// Set when N*ln(z1) > 700: the result is fine in extended precision but
  /// would overflow a plain double.
  bool exceeds_double_range;
};

/// Ring of n units: Z = Tr A^n.
template <class Scalar>
PartitionValue<Scalar> partition_ring(const TransferMatrix<Scalar>& tm,
                                      int n_units) {
  if (n_units < 2) throw std::invalid_argument("ring needs n >= 2");
  const Scalar z1 = perron_root(tm.a);
  const bool wide = Scalar(n_units) * std::log(z1) > Scalar(700);
  const Scalar z = matrix_power(tm.a, n_units).trace();
  if (!std::isfinite(static_cast<double>(z)) &&
      !std::isfinite(static_cast<long double>(z)))
    throw std::runtime_error("partition function overflowed extended precision");
  return {z, wide};
}

/// Open chain of n units: a phantom always-idle unit closes the product, so
/// Z = (all-ones row) * A^n * e_idle.
template <class Scalar>
PartitionValue<Scalar> partition_linear(const TransferMatrix<Scalar>& tm,
                                        int n_units) {
  if (n_units < 1) throw std::invalid_argument("chain needs n >= 1");
  const Scalar z1 = perron_root(tm.a);
  const bool wide = Scalar(n_units) * std::log(z1) > Scalar(700);
  const DenseMatrix<Scalar> p = matrix_power(tm.a, n_units);
  const Scalar z = p.col(0).sum();
  return {z, wide};
}

/// Per-vertex throughput of a ring of n units from the exact finite-n
/// partition function: (rho * d ln Z / d rho) / (n * vertices_per_unit),
/// derivative by central difference with relative step 1e-6.
template <class Scalar>
Scalar throughput_tm(const TransferMatrix<Scalar>& tm, int n_units) {
  if (tm.rho <= Scalar(0)) throw std::invalid_argument("need rho > 0");
  const Scalar h = Scalar(1e-6) * tm.rho;
  auto ln_z = [&](Scalar r) {
    TransferMatrix<Scalar> at{tm.psi, tm.row_exponent, tm.vertices_per_unit,
                              r, tm.evaluate(r)};
    return std::log(partition_ring(at, n_units).value);
  };
  const Scalar d = (ln_z(tm.rho + h) - ln_z(tm.rho - h)) / (2 * h);
  return tm.rho * d / (Scalar(n_units) * Scalar(tm.vertices_per_unit));
}

} // namespace icn

#endif
