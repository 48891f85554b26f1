#include <doctest.h>

#include <cmath>

#include "icn/closed_forms.hpp"
#include "icn/stationary.hpp"
#include "icn/topology.hpp"
#include "icn/transfer.hpp"

using namespace icn;

TEST_SUITE("closed_forms") {

TEST_CASE("exact-arithmetic spot values") {
  // finite ring of four at rho=1: 2/7, the enumeration value
  CHECK(closed_form_throughput(ThroughputFamily::ring11_finite, 1.0, 4) ==
        doctest::Approx(2.0 / 7.0).epsilon(1e-12));
  // large-ring limit at rho=2: 1/2 - 1/6
  CHECK(closed_form_throughput(ThroughputFamily::ring11_inf, 2.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(closed_form_throughput(ThroughputFamily::iso_link, 9.0) ==
        doctest::Approx(0.9).epsilon(1e-12));
  CHECK(closed_form_throughput(ThroughputFamily::torus21, 10.0) ==
        doctest::Approx(10.0 / 11.0).epsilon(1e-12));
  CHECK(closed_form_throughput(ThroughputFamily::linear11_edge, 2.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(closed_form_throughput(ThroughputFamily::torus11, 1.0) ==
        doctest::Approx(0.5 * (0.5 + 1.0 / 17.0)).epsilon(1e-12));
}

TEST_CASE("finite ring formulas match enumeration") {
  for (double rho : {0.5, 1.0, 2.0, 5.0})
    for (int n = 3; n <= 12; ++n) {
      const auto d11 = stationary_distribution(make_ring(n, 1), {1, 1}, rho);
      CHECK(closed_form_throughput(ThroughputFamily::ring11_finite, rho, n) ==
            doctest::Approx(link_throughput_exact(d11, 0).airtime)
                .epsilon(1e-9));
      const auto d21 = stationary_distribution(make_ring(n, 1), {2, 1}, rho);
      CHECK(closed_form_throughput(ThroughputFamily::ring21_finite, rho, n) ==
            doctest::Approx(link_throughput_exact(d21, 0).airtime)
                .epsilon(1e-9));
    }
}

TEST_CASE("open-chain formulas match enumeration") {
  for (double rho : {0.5, 1.0, 2.0, 5.0})
    for (int n : {4, 8, 12}) {
      const auto dist = stationary_distribution(make_linear(n, 1), {1, 1}, rho);
      for (int i = 1; i <= n; ++i)
        CHECK(closed_form_throughput(ThroughputFamily::linear11_vertex_i, rho,
                                     n, i) ==
              doctest::Approx(link_throughput_exact(dist, i - 1).airtime)
                  .epsilon(1e-9));
    }
}

TEST_CASE("edge beats the interior on open chains") {
  for (double rho : {0.5, 1.0, 5.0, 20.0, 100.0}) {
    const double edge =
        closed_form_throughput(ThroughputFamily::linear11_edge, rho);
    const double mid =
        closed_form_throughput(ThroughputFamily::linear11_middle, rho);
    CHECK(edge > mid);
    // interior equals the symmetric-ring limit
    CHECK(mid == doctest::Approx(closed_form_throughput(
                     ThroughputFamily::ring11_inf, rho))
                     .epsilon(1e-12));
  }
  // rho -> infinity: edge -> 1, interior -> 1/2
  CHECK(closed_form_throughput(ThroughputFamily::linear11_edge, 1e8) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(closed_form_throughput(ThroughputFamily::linear11_middle, 1e8) ==
        doctest::Approx(0.5).epsilon(1e-3));
  // finite-n edge > interior too
  for (int n : {6, 10})
    for (double rho : {1.0, 10.0})
      CHECK(closed_form_throughput(ThroughputFamily::linear11_vertex_i, rho, n,
                                   1) >
            closed_form_throughput(ThroughputFamily::linear11_vertex_i, rho, n,
                                   (n + 1) / 2));
}

TEST_CASE("finite formulas approach their limits") {
  for (double rho : {1.0, 5.0, 10.0, 20.0}) {
    for (int n : {64, 128})
      CHECK(std::abs(closed_form_throughput(ThroughputFamily::ring11_finite,
                                            rho, n) -
                     closed_form_throughput(ThroughputFamily::ring11_inf,
                                            rho)) <= 1e-6);
    // the (2,1) family carries a -rho eigenvalue whose decay is slower,
    // (rho/z1)^n, so the same bound holds further out
    const double inf21 =
        closed_form_throughput(ThroughputFamily::ring21_inf, rho);
    double prev = 1.0;
    for (int n : {32, 64, 128, 256}) {
      const double gap = std::abs(
          closed_form_throughput(ThroughputFamily::ring21_finite, rho, n) -
          inf21);
      CHECK(gap <= prev + 1e-15);
      prev = gap;
    }
    CHECK(prev <= 1e-6);
  }
}

TEST_CASE("closed forms track the transfer matrix") {
  // finite families agree with throughput_tm to numerical-derivative noise
  for (double rho : {1.0, 5.0, 20.0}) {
    const auto a11 = lnearest_transfer_matrix<Real>(1, {1, 1}, Real(rho));
    CHECK(closed_form_throughput(ThroughputFamily::ring11_finite, rho, 10) ==
          doctest::Approx(static_cast<double>(throughput_tm(a11, 10)))
              .epsilon(1e-6));
    const auto a21 = lnearest_transfer_matrix<Real>(1, {2, 1}, Real(rho));
    CHECK(closed_form_throughput(ThroughputFamily::ring21_finite, rho, 10) ==
          doctest::Approx(static_cast<double>(throughput_tm(a21, 10)))
              .epsilon(1e-6));
  }
  // infinite-n approximations within 1% of the n=64 transfer value
  for (double rho : {5.0, 10.0, 20.0}) {
    const auto a11 = lnearest_transfer_matrix<Real>(1, {1, 1}, Real(rho));
    CHECK(closed_form_throughput(ThroughputFamily::ring11_inf, rho) ==
          doctest::Approx(static_cast<double>(throughput_tm(a11, 64)))
              .epsilon(1e-2));
    const auto w2 = lnearest_transfer_matrix<Real>(2, {1, 1}, Real(rho));
    CHECK(closed_form_throughput(ThroughputFamily::lring11, rho) ==
          doctest::Approx(static_cast<double>(throughput_tm(w2, 64)))
              .epsilon(1e-2));
    const auto w221 = lnearest_transfer_matrix<Real>(2, {2, 1}, Real(rho));
    CHECK(closed_form_throughput(ThroughputFamily::lring21, rho) ==
          doctest::Approx(static_cast<double>(throughput_tm(w221, 64)))
              .epsilon(1e-2));
    const auto w231 = lnearest_transfer_matrix<Real>(2, {3, 1}, Real(rho));
    CHECK(closed_form_throughput(ThroughputFamily::lring31, rho) ==
          doctest::Approx(static_cast<double>(throughput_tm(w231, 64)))
              .epsilon(1e-2));
  }
}

TEST_CASE("the (3,1) dominant root solves its quartic") {
  for (double rho : {0.5, 1.0, 5.0, 10.0, 20.0}) {
    const double z = lring31_dominant_root(rho);
    const double p = z * z * z * z - (1.0 + rho) * z * z * z - rho * z * z -
                     (2.0 * rho * rho + rho) * z - rho * rho;
    CHECK(std::abs(p) < 1e-7 * std::pow(z, 4));
    // the quartic root dominates the companion window matrix spectrum
    const auto w = lnearest_transfer_matrix<Real>(2, {3, 1}, Real(rho));
    CHECK(static_cast<double>(perron_root(w.a)) ==
          doctest::Approx(z).epsilon(1e-9));
  }
}

TEST_CASE("generic l-ring family agrees with the l=2 shortcut") {
  for (double rho : {5.0, 10.0, 20.0, 100.0}) {
    // the cube-root expansion is an approximation of the exact-root form
    CHECK(lring11_inf_throughput(2, rho) ==
          doctest::Approx(closed_form_throughput(ThroughputFamily::lring11,
                                                 rho))
              .epsilon(2e-2));
  }
  // l=1 reduces to the square-root formula
  for (double rho : {1.0, 4.0})
    CHECK(lring11_inf_throughput(1, rho) ==
          doctest::Approx(
              closed_form_throughput(ThroughputFamily::ring11_inf, rho))
              .epsilon(1e-9));
}

TEST_CASE("family name round trip") {
  for (const char* name :
       {"ring11_finite", "ring11_inf", "ring21_finite", "ring21_inf",
        "iso_link", "Lring11", "Lring21", "Lring31", "torus11", "torus21",
        "linear11_vertex_i", "linear11_edge", "linear11_middle",
        "strip21_inf"})
    CHECK(to_string(throughput_family_from_string(name)) == name);
  CHECK_THROWS(throughput_family_from_string("ring99"));
}

TEST_CASE("argument guards") {
  CHECK_THROWS(closed_form_throughput(ThroughputFamily::ring11_inf, 0.0));
  CHECK_THROWS(closed_form_throughput(ThroughputFamily::ring11_finite, 1.0, 0));
  CHECK_THROWS(
      closed_form_throughput(ThroughputFamily::linear11_vertex_i, 1.0, 5, 9));
}

} // TEST_SUITE
