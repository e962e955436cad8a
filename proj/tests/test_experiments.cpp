#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "vcpack/constructions.hpp"
#include "vcpack/errors.hpp"
#include "vcpack/experiments.hpp"

using namespace vcpack;

TEST_CASE("exact projection collision probability on the order-4 matrix") {
  auto h = sylvester_hadamard(2);
  auto s2 = projection_collision(h, 2, CollisionMode::Exhaustive);
  CHECK(s2.p_collision == Rational(3, 8));
  CHECK(s2.lower_envelope == Rational(1, 4));
  CHECK(s2.upper_envelope == Rational(1, 2));
  CHECK(s2.p_collision >= s2.lower_envelope);
  CHECK(s2.p_collision < s2.upper_envelope);  // strict
  CHECK_FALSE(s2.in_proof_range);  // r = 2 < 2d = 4

  auto s4 = projection_collision(h, 4, CollisionMode::Exhaustive);
  CHECK(s4.p_collision == Rational(1, 4));  // distinct rows, one index set
  CHECK(s4.lower_envelope == Rational(1, 11));
  CHECK(s4.upper_envelope == Rational(5, 16));
  CHECK(s4.in_proof_range);
  CHECK(s4.p_collision < s4.upper_envelope);

  CHECK_THROWS_AS(projection_collision(h, 0, CollisionMode::Exhaustive),
                  domain_error);
  CHECK_THROWS_AS(projection_collision(h, 5, CollisionMode::Exhaustive),
                  domain_error);
  CHECK_THROWS_AS(
      projection_collision(h, 2, CollisionMode::Exhaustive, 0, 1, 10),
      budget_error);
}

TEST_CASE("envelopes hold exhaustively on small random classes") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto fc = greedy_packing(6, Rational(1, 3), seed, 300);
    for (int r = 2 * fc.vc_dimension(); r <= fc.n(); ++r) {
      if (r < 1) continue;
      auto s = projection_collision(fc, r, CollisionMode::Exhaustive);
      CHECK(s.in_proof_range);
      CHECK(s.p_collision >= s.lower_envelope);
      CHECK(s.p_collision < s.upper_envelope);
    }
  }
}

TEST_CASE("sampled estimator agrees with the exact value") {
  auto h = sylvester_hadamard(2);
  auto s = projection_collision(h, 2, CollisionMode::Sampled, 42, 20000);
  CHECK(s.trials == 20000);
  CHECK(s.std_error > 0.0);
  CHECK(std::abs(s.estimate - 0.375) < 4.0 * s.std_error + 1e-9);
  // Seeded determinism; a different seed moves the estimate.
  auto again = projection_collision(h, 2, CollisionMode::Sampled, 42, 20000);
  CHECK(again.estimate == s.estimate);
  CHECK_THROWS_AS(projection_collision(h, 2, CollisionMode::Sampled, 42, 0),
                  domain_error);
}

TEST_CASE("conditional collision floors") {
  auto h = sylvester_hadamard(2);
  const int all[] = {0, 1, 2, 3};
  const int pair[] = {1, 2};
  const int one[] = {0};
  CHECK(collision_floor_check(h, all));
  CHECK(collision_floor_check(h, pair));
  CHECK(collision_floor_check(h, one));
  auto g = greedy_packing(6, Rational(1, 3), 5, 300);
  const int some[] = {0, 2, 4};
  CHECK(collision_floor_check(g, some));
}

TEST_CASE("key inequality on the order-4 matrix") {
  auto h = sylvester_hadamard(2);
  auto r4 = key_inequality_check(h, 4);
  CHECK(r4.preconditions_met);
  CHECK(r4.pass);
  // lhs = 1.02/16, rhs = 1/4 + 1/16.
  CHECK(r4.lhs.mid_double() == doctest::Approx(0.06375).epsilon(1e-12));
  CHECK(r4.rhs.mid_double() == doctest::Approx(0.3125).epsilon(1e-12));
  CHECK(r4.margin.lo_double() > 0.248);
  CHECK(r4.margin.hi_double() < 0.249);

  auto r3 = key_inequality_check(h, 3);  // r < 2d
  CHECK_FALSE(r3.preconditions_met);
  CHECK_FALSE(r3.pass);
  auto r9 = key_inequality_check(h, 9);  // r > n
  CHECK_FALSE(r9.preconditions_met);
}

TEST_CASE("r-star selection and verification") {
  auto r = rstar_choice(0.25, 3);
  CHECK(r.r_star == 17);  // ceil(3 * 5.5839...)
  CHECK(r.verification_pass);
  auto z = rstar_choice(0.0, 1);
  CHECK(z.r_star == 2);
  CHECK(z.verification_pass);
  for (long d : {1L, 2L, 5L, 10L}) {
    for (double g : {0.0, 0.1, 0.3, 0.6}) {
      CHECK(rstar_choice(g, d).verification_pass);
    }
  }
  CHECK_THROWS_AS(rstar_choice(0.1, 0), domain_error);
}

TEST_CASE("figure data is well-formed and bit-stable") {
  auto g1 = default_figure1_grid();
  auto g2 = default_figure2_grid();
  CHECK(g1.size() == 151);
  CHECK(g2.size() == 251);
  const std::string f1 = figure1_data(g1);
  CHECK(f1.rfind("gamma,gkm_log_per_d,haussler_log_per_d\n", 0) == 0);
  CHECK(f1.find("\n0,1.38629436112,2.38629436112\n") != std::string::npos);
  CHECK(figure1_data(g1) == f1);
  const std::string f2 = figure2_data(g2);
  CHECK(f2.rfind("gamma,beta\n", 0) == 0);
  CHECK(f2.find("\n0,2\n") != std::string::npos);
  CHECK(figure2_data(g2) == f2);
  // Row counts: header plus one line per grid point.
  CHECK(std::count(f1.begin(), f1.end(), '\n') == 152);
  CHECK(std::count(f2.begin(), f2.end(), '\n') == 252);
}

TEST_CASE("lemma sweep verifies everything at desk scale") {
  auto rep = lemma_sweep(12, {3});
  CHECK(rep.total == 66);  // 36 binary pairs + 30 admissible ternary triples
  CHECK(rep.verified == rep.total);
  CHECK(rep.counterexamples == 0);
  CHECK(rep.precision_insufficient == 0);
  CHECK(rep.tightest_ratio > 0.0);
  CHECK(rep.tightest_ratio < 1.0);
  CHECK(rep.tight_n >= 2);
  CHECK_THROWS_AS(lemma_sweep(1, {}), domain_error);
}

TEST_CASE("bound comparison table cells") {
  const std::string t = bound_comparison_table({0.0, 0.9}, {1, 4}, 16);
  CHECK(t.rfind("gamma,d,", 0) == 0);
  CHECK(std::count(t.begin(), t.end(), '\n') == 5);
  // gamma = 0.9 with n = 16: 0.81 >= 1/16, the ratio bound is vacuous.
  CHECK(t.find("n/a: vacuous") != std::string::npos);
  // Sauer column is exact: binom_sum(16,1) = 17.
  CHECK(t.find(",17,") != std::string::npos);
  const std::string no_n = bound_comparison_table({0.0}, {2});
  CHECK(no_n.find("n/a: needs n") != std::string::npos);
  CHECK(bound_comparison_table({0.0, 0.9}, {1, 4}, 16) == t);
}
