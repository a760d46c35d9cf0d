#include <doctest.h>

#include "conntop/hm_sim.hpp"
#include "test_support.hpp"

using namespace conntop;
using namespace conntop::hm;
using conntop::testsupport::Rng;
using conntop::testsupport::random_step_function;

namespace {
StepFunction one_on(const BaseGroup& b, const Rat& t) {
  return StepFunction::prefix(b, make_finite_elem(b, 1), t);
}
}  // namespace

TEST_CASE("step function group operations") {
  BaseGroup z2 = BaseGroup::finite({2});
  StepFunction f = one_on(z2, Rat(1, 3));
  CHECK(sf_add(f, sf_neg(f)).is_zero());
  CHECK(sf_eq(sf_add(f, StepFunction(z2)), f));

  // xor of the prefixes [0,1/3) and [0,1/2) lives on [1/3,1/2)
  StepFunction g = one_on(z2, Rat(1, 2));
  StepFunction sum = sf_add(f, g);
  REQUIRE(sum.cuts().size() == 2);
  CHECK(sum.cuts()[0] == Rat(1, 3));
  CHECK(sum.cuts()[1] == Rat(1, 2));
  CHECK(sum.values()[0].idx == 0);
  CHECK(sum.values()[1].idx == 1);
  CHECK(sum.values()[2].idx == 0);
}

TEST_CASE("measure of disagreement") {
  BaseGroup z2 = BaseGroup::finite({2});
  StepFunction f = one_on(z2, Rat(1, 3));
  CHECK(mu_diff(f, f) == 0);
  CHECK(mu_diff(f, StepFunction(z2)) == Rat(1, 3));
  // prefixes of the same non-zero element differ on the symmetric difference
  for (auto [s, t] : {std::pair{Rat(1, 4), Rat(2, 3)}, {Rat(1, 2), Rat(1, 2)}, {Rat(5, 6), Rat(1, 6)}}) {
    CHECK(mu_diff(one_on(z2, s), one_on(z2, t)) == abs(s - t));
  }
}

TEST_CASE("convergence-in-measure distance") {
  BaseGroup circle = BaseGroup::circle();
  StepFunction quarter = StepFunction::prefix(circle, make_circle_elem(Rat(1, 4)), 1);
  StepFunction zero(circle);
  CHECK(kyfan(quarter, quarter) == 0);
  CHECK(kyfan(quarter, zero) == Rat(1, 4));

  // distance 1/4 on [0,1/2), distance 1/10 after: the excess measure at
  // eps in [1/10,1/4) is 1/2, too big, so the distance settles at 1/4
  StepFunction two_levels = StepFunction::from_pieces(
      circle, {Rat(1, 2)}, {make_circle_elem(Rat(1, 4)), make_circle_elem(Rat(1, 10))});
  CHECK(kyfan(two_levels, zero) == Rat(1, 4));

  // a thin spike of distance 1/2 on [0,1/5): the measure bound wins
  StepFunction spike = StepFunction::prefix(circle, make_circle_elem(Rat(1, 2)), Rat(1, 5));
  CHECK(kyfan(spike, zero) == Rat(1, 5));

  // distance 1/4 on a thin prefix, 1/3 on the rest: the tail forces 1/3
  StepFunction heavy_tail = StepFunction::from_pieces(
      circle, {Rat(1, 10)}, {make_circle_elem(Rat(1, 4)), make_circle_elem(Rat(1, 3))});
  CHECK(kyfan(heavy_tail, zero) == Rat(1, 3));

  // on a discrete base the distance collapses to the measure of disagreement
  BaseGroup z6 = BaseGroup::finite({6});
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    StepFunction a = random_step_function(rng, z6);
    StepFunction b = random_step_function(rng, z6);
    Rat m = mu_diff(a, b);
    CHECK(kyfan(a, b) == (m <= 1 ? m : Rat(1)));
  }
}

TEST_CASE("metric axioms hold exactly") {
  Rng rng(22);
  for (const BaseGroup& base : {BaseGroup::finite({2}), BaseGroup::finite({2, 3}),
                                BaseGroup::finite({8}), BaseGroup::circle()}) {
    for (int i = 0; i < 150; ++i) {
      StepFunction a = random_step_function(rng, base);
      StepFunction b = random_step_function(rng, base);
      StepFunction c = random_step_function(rng, base);
      CHECK(mu_diff(a, b) == mu_diff(b, a));
      CHECK(kyfan(a, b) == kyfan(b, a));
      CHECK(mu_diff(a, c) <= mu_diff(a, b) + mu_diff(b, c));
      CHECK(kyfan(a, c) <= kyfan(a, b) + kyfan(b, c));
      CHECK((mu_diff(a, b) == 0) == sf_eq(a, b));
      CHECK((kyfan(a, b) == 0) == sf_eq(a, b));
      // translation invariance
      CHECK(mu_diff(sf_add(a, c), sf_add(b, c)) == mu_diff(a, b));
      CHECK(kyfan(sf_add(a, c), sf_add(b, c)) == kyfan(a, b));
      // group laws
      CHECK(sf_eq(sf_add(a, b), sf_add(b, a)));
      CHECK(sf_eq(sf_add(sf_add(a, b), c), sf_add(a, sf_add(b, c))));
      CHECK(sf_add(a, sf_neg(a)).is_zero());
    }
  }
}

TEST_CASE("base groups must match") {
  StepFunction f(BaseGroup::finite({2}));
  StepFunction g(BaseGroup::finite({3}));
  CHECK_THROWS_AS((void)sf_add(f, g), BaseMismatch);
  CHECK_THROWS_AS((void)mu_diff(f, g), BaseMismatch);
  CHECK_THROWS_AS((void)kyfan(f, g), BaseMismatch);
}

TEST_CASE("truncation") {
  BaseGroup z8 = BaseGroup::finite({8});
  Rng rng(23);
  StepFunction h = random_step_function(rng, z8);
  CHECK(truncate(h, 0).is_zero());
  CHECK(sf_eq(truncate(h, 1), h));
  // prefix of a prefix
  BaseGroup z2 = BaseGroup::finite({2});
  for (auto [t, s] : {std::pair{Rat(2, 3), Rat(1, 4)}, {Rat(1, 4), Rat(2, 3)}, {Rat(1, 2), Rat(1, 2)}}) {
    CHECK(sf_eq(truncate(one_on(z2, t), s), one_on(z2, std::min(s, t))));
  }
}

TEST_CASE("truncation is 1-Lipschitz into the measure metric") {
  Rng rng(24);
  for (const BaseGroup& base : {BaseGroup::finite({6}), BaseGroup::circle()}) {
    for (int i = 0; i < 100; ++i) {
      StepFunction h = random_step_function(rng, base);
      for (int k = 0; k < 10; ++k) {
        Rat s(static_cast<long>(rng.below(25)), 24);
        s.canonicalize();
        Rat t(static_cast<long>(rng.below(25)), 24);
        t.canonicalize();
        CHECK(mu_diff(truncate(h, s), truncate(h, t)) <= abs(s - t));
      }
    }
  }
  // equality when h is nonzero almost everywhere on the spanned interval
  BaseGroup z2 = BaseGroup::finite({2});
  StepFunction ones = StepFunction::prefix(z2, make_finite_elem(z2, 1), 1);
  CHECK(mu_diff(truncate(ones, Rat(1, 5)), truncate(ones, Rat(4, 5))) == Rat(3, 5));
}

TEST_CASE("paths inside a ball stay inside it") {
  BaseGroup z2 = BaseGroup::finite({2});
  StepFunction h = one_on(z2, Rat(1, 4));
  PathCheckReport report = ball_path_check(h, Rat(1, 3), 100);
  CHECK(report.passed);
  CHECK(report.max_deviation == 0);
  CHECK(report.samples_checked >= 101);

  CHECK(ball_path_check(StepFunction(z2), Rat(1, 100), 50).passed);

  StepFunction big = one_on(z2, Rat(1, 2));
  CHECK_THROWS_AS((void)ball_path_check(big, Rat(1, 3), 10), PreconditionFailed);
}

TEST_CASE("rounding into the cyclic subgroup") {
  BaseGroup circle = BaseGroup::circle();
  StepFunction quarter = StepFunction::prefix(circle, make_circle_elem(Rat(1, 4)), 1);
  DensityResult r = density_approx(quarter, 2, Rat(1, 3));
  CHECK(r.error <= Rat(1, 4));
  CHECK(r.bound == Rat(1, 4));
  for (const auto& v : r.approx.values()) {
    CHECK((v.q == 0 || v.q == Rat(1, 2)));
  }

  // a function already in the subgroup is untouched
  StepFunction in_sub = StepFunction::prefix(circle, make_circle_elem(Rat(3, 4)), Rat(1, 2));
  DensityResult exact = density_approx(in_sub, 4, Rat(1, 10));
  CHECK(exact.error == 0);
  CHECK(sf_eq(exact.approx, in_sub));

  // denominators at most M, N = M: distance 0
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    StepFunction f = random_step_function(rng, circle);
    mpz_class lcm = 1;
    for (const auto& v : f.values()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.q.get_den_mpz_t());
    REQUIRE(lcm.fits_ulong_p());
    DensityResult d = density_approx(f, lcm.get_ui(), Rat(1, 2));
    CHECK(d.error == 0);
  }

  CHECK_THROWS_AS((void)density_approx(StepFunction(BaseGroup::finite({2})), 2, Rat(1, 2)),
                  BaseMismatch);
}
