#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "icn/birth_death.hpp"

using namespace icn;

TEST_SUITE("mrat") {

TEST_CASE("two-state chain has exponential passage moments") {
  for (double lambda : {0.5, 1.0, 4.0}) {
    BirthDeathChain c;
    c.up = {lambda, 0.0};
    c.down = {0.0, 1.0};
    const auto m = passage_moments(c, 0, 1);
    CHECK(m.mean == doctest::Approx(1.0 / lambda).epsilon(1e-12));
    CHECK(m.second == doctest::Approx(2.0 / (lambda * lambda)).epsilon(1e-12));
    CHECK(m.var == doctest::Approx(1.0 / (lambda * lambda)).epsilon(1e-12));
  }
}

TEST_CASE("three-state symmetric chain by hand") {
  // unit holding times with a half-half split: E0 = 1 + E1 and
  // E1 = 1 + E0/2 give E0 = 4
  BirthDeathChain c;
  c.up = {1.0, 0.5, 0.0};
  c.down = {0.0, 0.5, 1.0};
  const auto m = passage_moments(c, 0, 2);
  CHECK(m.mean == doctest::Approx(4.0).epsilon(1e-12));

  // doubling the middle rates halves its holding time: E0 = 3
  BirthDeathChain fast;
  fast.up = {1.0, 1.0, 0.0};
  fast.down = {0.0, 1.0, 1.0};
  CHECK(passage_moments(fast, 0, 2).mean ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("moment consistency") {
  for (double rho : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const auto chain = star_center_chain(rho);
    const auto m = passage_moments(chain, 1, 0);
    CHECK(m.var >= 0.0);
    CHECK(m.second >= m.mean * m.mean);
  }
}

TEST_CASE("unreachable targets are rejected") {
  BirthDeathChain c;
  c.up = {0.0, 1.0, 0.0}; // state 0 cannot move up
  c.down = {0.0, 0.0, 1.0};
  CHECK_THROWS_AS(passage_moments(c, 0, 2), std::runtime_error);
  CHECK_THROWS(passage_moments(c, 0, 0));
}

TEST_CASE("star-center chain matches the quoted stationary probability") {
  for (double rho : {0.5, 1.0, 2.0, 5.0}) {
    const auto pi = birth_death_stationary(star_center_chain(rho));
    const double denom = 1.0 + 5.0 * rho + 6.0 * rho * rho +
                         4.0 * rho * rho * rho + rho * rho * rho * rho;
    CHECK(pi[0] == doctest::Approx(rho / denom).epsilon(1e-12));
  }
}

TEST_CASE("first-step solve reproduces the closed rational form") {
  for (double rho : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const auto chain = star_center_chain(rho);
    const double via_solve =
        mrat_from_passage(passage_moments(chain, 1, 0));
    const double literal = closed_form_mrat(MratFamily::center_star, rho);
    CHECK(via_solve == doctest::Approx(literal).epsilon(1e-9));
  }
  CHECK(closed_form_mrat(MratFamily::center_star, 1.0) ==
        doctest::Approx(4100.0 / 204.0).epsilon(1e-12));
}

TEST_CASE("closed-form families") {
  CHECK(closed_form_mrat(MratFamily::isolated, 1.0) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(closed_form_mrat(MratFamily::isolated, 2.0) ==
        doctest::Approx(7.0 / 6.0).epsilon(1e-12));
  CHECK(closed_form_mrat(MratFamily::torus21, 3.0) ==
        closed_form_mrat(MratFamily::isolated, 3.0));
  CHECK(closed_form_mrat(MratFamily::torus11, 1.0) ==
        doctest::Approx(0.5 * 1.5 + 0.5 * 4100.0 / 204.0).epsilon(1e-12));

  // large-rho growth of the star-center form: ~ (15/12) rho^3
  const double big = closed_form_mrat(MratFamily::center_star, 1e6);
  CHECK(big / (1.25 * 1e18) == doctest::Approx(1.0).epsilon(1e-4));

  // isolated-link residual time falls toward 1 from above
  double prev = closed_form_mrat(MratFamily::isolated, 1.0);
  for (double rho : {2.0, 5.0, 10.0, 50.0, 500.0}) {
    const double m = closed_form_mrat(MratFamily::isolated, rho);
    CHECK(m < prev);
    CHECK(m > 1.0);
    prev = m;
  }
}

TEST_CASE("family parsing") {
  CHECK(mrat_family_from_string("center_star") == MratFamily::center_star);
  CHECK(to_string(MratFamily::torus11) == "torus11");
  CHECK_THROWS(mrat_family_from_string("nope"));
}

} // TEST_SUITE
