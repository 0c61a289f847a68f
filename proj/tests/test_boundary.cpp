#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "cases.hpp"
#include "kp/boundary.hpp"

using kp::cplx;
using kp::MatchBranch;

TEST_CASE("left match: moderate transmission") {
  const auto c = kp::test::case1();
  const auto m = kp::match_left(c.params, c.R0, c.R1, c.k);
  CHECK(m.branch == MatchBranch::NegativeArg);
  CHECK(std::string(kp::to_string(m.branch)) == "negative-arg");
  CHECK(m.arg_varphi0 == doctest::Approx(-1.276608915670709).epsilon(1e-12));
  CHECK(m.a == doctest::Approx(1.276608915670709).epsilon(1e-12));
  CHECK(m.coeff1.A.real() == doctest::Approx(0.1 / 0.373996675903592).epsilon(1e-12));
  CHECK(m.coeff1.A.imag() == 0.0);
  CHECK(m.coeff1.B.real() == 0.0);
  CHECK(m.coeff1.B.imag() == doctest::Approx(-0.2822 / 0.945330939376423).epsilon(1e-12));
  CHECK(std::abs(m.coeff1.A.real() - 0.2674) < 1e-3);
  CHECK(std::abs(std::abs(m.coeff1.B) - 0.2985) < 1e-3);
}

TEST_CASE("left match: near-total reflection uses the positive branch") {
  const auto c = kp::test::case2();
  const auto m = kp::match_left(c.params, c.R0, c.R1, c.k);
  CHECK(m.branch == MatchBranch::PositiveArg);
  CHECK(m.a == doctest::Approx(2.353917357).epsilon(1e-9));
  CHECK(std::abs(m.coeff1.A) == doctest::Approx(std::sqrt(0.78)).epsilon(1e-3));
  CHECK(std::abs(m.coeff1.B) == doctest::Approx(std::sqrt(0.13)).epsilon(1e-3));
}

TEST_CASE("left match: near-total transmission") {
  const auto c = kp::test::case3();
  const auto m = kp::match_left(c.params, c.R0, c.R1, c.k);
  CHECK(std::abs(m.coeff1.A.real() - 0.0027) < 1e-3);
  CHECK(std::abs(std::abs(m.coeff1.B) - 0.2985) < 1e-3);
  CHECK(std::abs(m.a - 1.2766) < 1e-3);
}

TEST_CASE("left match reproduces the incident plus reflected wave at the origin") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> e(0.3, 3.0), f(0.005, 0.05), r(0.0, 1.0), kk(0.2, 2.0);
  int pos = 0, neg = 0;
  for (int i = 0; i < 200; ++i) {
    kp::ModelParams p{e(rng), f(rng), 0.0, 0.0, 10};
    const double R0 = 0.05 + r(rng);
    const double R1 = R0 * r(rng);
    const double k = kk(rng);
    const auto m = kp::match_left(p, R0, R1, k);
    (m.branch == MatchBranch::PositiveArg ? pos : neg)++;
    const auto b = kp::basis_at(p, 0.0);
    const cplx psi0 = m.coeff1.A * b.varphi + m.coeff1.B * b.phi;
    CHECK(std::abs(psi0 - kp::left_value(R0, R1, k, m.a)) < 1e-10);
    CHECK(m.a >= 0.0);
  }
  // Both branches are exercised.
  CHECK(pos > 0);
  CHECK(neg > 0);
}

TEST_CASE("left match input validation") {
  const auto p = kp::test::case1().params;
  CHECK_THROWS_AS((void)kp::match_left(p, 0.1, 0.2, 1.0), kp::InvalidInput);
  CHECK_THROWS_AS((void)kp::match_left(p, 0.2, -0.1, 1.0), kp::InvalidInput);
  CHECK_THROWS_AS((void)kp::match_left(p, 0.2, 0.1, 0.0), kp::InvalidInput);
  CHECK_NOTHROW((void)kp::match_left(p, 0.2, 0.0, 1.0));
}

TEST_CASE("right scan: moderate transmission") {
  const auto c = kp::test::case1();
  const auto sol = kp::solve_case(c.params, c.R0, c.R1, c.k);
  CHECK(sol.scan.lengths == std::vector<int>{6, 45, 46});
  REQUIRE(sol.admissible.size() == 3);
  CHECK(sol.admissible[0].b == doctest::Approx(-6.58797601661915).epsilon(1e-9));
  CHECK(sol.admissible[1].b == doctest::Approx(-44.53892699530501).epsilon(1e-9));
  CHECK(sol.admissible[2].b == doctest::Approx(-46.527767230928035).epsilon(1e-9));
  CHECK(sol.admissible[0].residual == doctest::Approx(0.020590910435344258).epsilon(1e-8));
  // Distinct lengths carry distinct phases.
  CHECK(sol.admissible[1].b != sol.admissible[2].b);
  CHECK(sol.boundary.T * sol.boundary.T == doctest::Approx(0.0696).epsilon(1e-3));
}

TEST_CASE("right scan residuals against the 40-digit reference") {
  const auto c3 = kp::test::case3();
  const auto s3 = kp::solve_case(c3.params, c3.R0, c3.R1, c3.k);
  CHECK(s3.scan.residual[10] == doctest::Approx(-0.16219489231036133).epsilon(1e-8));
  CHECK(s3.scan.residual[14] == doctest::Approx(0.3206126206277957).epsilon(1e-8));
  CHECK(s3.scan.residual[58] == doctest::Approx(-0.429176188337793).epsilon(1e-8));
  CHECK(kp::phase_b(c3.params, s3.scan.prop, 11, c3.k) == doctest::Approx(-9.895896605938276).epsilon(1e-9));

  const auto c2 = kp::test::case2();
  const auto s2 = kp::solve_case(c2.params, c2.R0, c2.R1, c2.k);
  CHECK(s2.match.branch == MatchBranch::PositiveArg);
  CHECK(s2.scan.residual[16] == doctest::Approx(13.872538195355203).epsilon(1e-7));
}

TEST_CASE("right scan tolerance semantics") {
  const auto c = kp::test::case1();
  const auto m = kp::match_left(c.params, c.R0, c.R1, c.k);
  const double T = kp::make_boundary(c.R0, c.R1, c.k).T;
  const auto wide = kp::scan_right(c.params, m, T, 0.05);
  CHECK(wide.lengths == std::vector<int>{6, 45, 46, 56});
  const auto none = kp::scan_right(c.params, m, T, 1e-4);
  CHECK(none.lengths.empty());
  for (int L : wide.lengths) CHECK(std::abs(wide.residual[L - 1]) <= 0.05);
  // T = 0 falls back to the absolute floor.
  const auto zero = kp::scan_right(c.params, m, 0.0, 1.0);
  for (std::size_t i = 0; i < zero.psi.size(); ++i) {
    CHECK(zero.residual[i] == doctest::Approx(std::norm(zero.psi[i]) / kp::kMatchFloor));
  }
}

TEST_CASE("transmitted phase") {
  CHECK(kp::phase_b(cplx(0.3, 0.0), 7, 1.0) == -7.0);
  CHECK(kp::phase_b(cplx(0.0, 0.3), 2, 2.0) == doctest::Approx(M_PI / 4.0 - 2.0));
  CHECK(kp::phase_b(cplx(-0.3, 0.0), 0, 1.0) == doctest::Approx(M_PI));
}

TEST_CASE("transmission coefficient") {
  CHECK(kp::transmission_coefficient(0.2822, 0.1) == doctest::Approx(0.8744).epsilon(1e-4));
  CHECK(std::abs(kp::transmission_coefficient(0.2822, 0.1) - 0.8744) < 1e-4);
  CHECK(std::abs(kp::transmission_coefficient(0.2822, 0.2821) - 0.00071) < 1e-5);
  CHECK(kp::transmission_coefficient(0.5, 0.0) == 1.0);
  CHECK_THROWS_AS((void)kp::transmission_coefficient(0.1, 0.2), kp::InvalidInput);
  CHECK_THROWS_AS((void)kp::transmission_coefficient(0.0, 0.0), kp::InvalidInput);
  double prev = 2.0;
  for (double r1 = 0.0; r1 <= 0.2822; r1 += 0.01) {
    const double t = kp::transmission_coefficient(0.2822, r1);
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("Landauer ratio") {
  CHECK(kp::conductance_landauer(0.0) == 0.0);
  CHECK(kp::conductance_landauer(0.5) == doctest::Approx(1.0));
  CHECK(kp::conductance_landauer(0.8744) == doctest::Approx(6.962).epsilon(1e-3));
  CHECK(kp::conductance_landauer(1.0) == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS((void)kp::conductance_landauer(1.5), kp::InvalidInput);
  CHECK_THROWS_AS((void)kp::conductance_landauer(-0.1), kp::InvalidInput);
}

TEST_CASE("outer wave data") {
  const auto b = kp::make_boundary(0.2822, 0.001, 1.0);
  CHECK(b.T * b.T == doctest::Approx(0.0796).epsilon(1e-3));
  CHECK(b.t == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(kp::make_boundary(0.2822, 0.2821, 1.0).T * kp::make_boundary(0.2822, 0.2821, 1.0).T < 1e-4);
}
