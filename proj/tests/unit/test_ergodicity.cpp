#include <cmath>
#include <variant>

#include "doctest.h"
#include "imc/accessibility.hpp"
#include "imc/ergodicity.hpp"
#include "imc/error.hpp"
#include "support/approx.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace imc;
using namespace imc::testing;

namespace {

LimitResult result(const ExpectationLimit& r) {
  REQUIRE(std::holds_alternative<LimitResult>(r));
  return std::get<LimitResult>(r);
}

LimitResult result(const AverageLimit& r) {
  REQUIRE(std::holds_alternative<LimitResult>(r));
  return std::get<LimitResult>(r);
}

}  // namespace

TEST_CASE("classify") {
  const auto r1 = classify(swap_chain());
  CHECK(r1.weakly_ergodic);
  CHECK_FALSE(r1.ergodic);
  CHECK(r1.top_class_period == 2);

  const auto r2 = classify(vacuous_forced_chain());
  CHECK(r2.weakly_ergodic);
  CHECK(r2.ergodic);

  const auto r3 = classify(two_isolated());
  CHECK_FALSE(r3.has_top_class);
  CHECK_FALSE(r3.weakly_ergodic);
  CHECK(r3.maximal_classes.size() == 2);

  const auto r4 = classify(trapped_pair());
  CHECK(r4.has_top_class);
  CHECK(r4.tcr);
  CHECK_FALSE(r4.tca);
  CHECK_FALSE(r4.ergodic);
}

TEST_CASE("report invariants") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto r = classify(random_mixed_model(rng, 1 + pick(rng, 5)));
    CHECK(r.weakly_ergodic == r.tca);
    CHECK(r.ergodic == (r.tcr && r.tca));
    if (r.ergodic) CHECK(r.weakly_ergodic);
    if (r.tcr || r.tca) CHECK(r.has_top_class);
    CHECK(r.has_top_class == (r.maximal_classes.size() == 1));
  }
}

TEST_CASE("limit_upper_expectation") {
  const auto a = result(limit_upper_expectation(vacuous_forced_chain(), Gamble{0, 1}));
  CHECK(a.value == 1.0);
  CHECK(a.error_bound == 0.0);
  CHECK(a.iterations == 2);
  CHECK(a.method == LimitMethod::SeminormContraction);

  const auto c = result(limit_upper_expectation(vacuous_forced_chain(), Gamble{0.3, 0.3}));
  CHECK(c.value == 0.3);
  CHECK(c.iterations == 0);

  CHECK(result(limit_upper_expectation(vacuous_forced_chain(), Gamble{2, -1})).value == 2.0);
  CHECK(std::holds_alternative<NotErgodic>(limit_upper_expectation(swap_chain(), Gamble{1, 0})));
  CHECK_THROWS_AS(limit_upper_expectation(vacuous_forced_chain(), Gamble{0, 1}, {0.0, 10, 0}),
                  Error);
}

TEST_CASE("limit_upper_average") {
  const auto a = result(limit_upper_average(vacuous_forced_chain(), Gamble{0, 1}));
  CHECK(a.value == 0.5);
  CHECK(a.error_bound == 0.0);
  CHECK(a.method == LimitMethod::PeriodLock);
  REQUIRE(a.lock);
  CHECK(a.lock->period == 2);
  CHECK(a.lock->increment == 1.0);

  Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    const Gamble f = random_gamble(rng, 2, 5.0);
    const auto r = result(limit_upper_average(swap_chain(), f));
    CHECK(r.method == LimitMethod::PeriodLock);
    CHECK(r.lock->period == 2);
    CHECK(r.value == doctest::Approx((f[0] + f[1]) / 2).epsilon(1e-14));
  }

  const auto c = result(limit_upper_average(feeder_chain(), Gamble::constant(3, -0.75)));
  CHECK(c.value == -0.75);
  CHECK(c.lock->period == 1);

  CHECK(std::holds_alternative<NotWeaklyErgodic>(limit_upper_average(two_isolated(), Gamble{1, 0})));
  CHECK(std::holds_alternative<NotWeaklyErgodic>(
      limit_upper_average(trapped_pair(), Gamble{0, 1, 1})));
}

TEST_CASE("limit_lower_average and lower expectation") {
  const auto a = result(limit_lower_average(vacuous_forced_chain(), Gamble{0, 1}));
  CHECK(a.value == 0.0);
  CHECK(result(limit_lower_average(vacuous_forced_chain(), Gamble{4, 4})).value == 4.0);
  CHECK(result(limit_lower_average(swap_chain(), Gamble{1, 0})).value == 0.5);
  CHECK(result(limit_lower_expectation(vacuous_forced_chain(), Gamble{2, -1})).value == -1.0);

  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + pick(rng, 4);
    const auto t = random_mixed_model(rng, n);
    if (!classify(t).tca) continue;
    const Gamble f = random_gamble(rng, n);
    const auto lo = result(limit_lower_average(t, f));
    const auto up = result(limit_upper_average(t, -f));
    CHECK(lo.value == -up.value);
    CHECK(lo.error_bound == up.error_bound);
    CHECK(lo.value <= result(limit_upper_average(t, f)).value + 2e-8);
  }
}

TEST_CASE("class_average_limit") {
  const auto iso = two_isolated();
  const Gamble f{2, -1};
  CHECK(class_average_limit(iso, f, {0}).value == 2.0);
  CHECK(class_average_limit(iso, f, {1}).value == -1.0);
  CHECK(class_average_limit(iso, f, {0}).method == LimitMethod::ClassRestricted);

  const auto full = result(limit_upper_average(swap_chain(), Gamble{0.2, 0.9}));
  CHECK(class_average_limit(swap_chain(), Gamble{0.2, 0.9}, {0, 1}).value == full.value);

  CHECK(class_average_limit(absorbing_singleton(), Gamble{0, 1, 1}, {0}).value == 0.0);
  CHECK_THROWS_AS(class_average_limit(vacuous_forced_chain(), Gamble{0, 1}, {0}), NotMaximalClass);

  // Class {a,b} of the feeder chain ignores f on c.
  const Gamble g{0.5, -0.5, 100.0};
  const auto r1 = class_average_limit(feeder_chain(), g, {0, 1});
  const auto r2 = class_average_limit(feeder_chain(), Gamble{0.5, -0.5, 0.0}, {0, 1});
  CHECK(r1.value == r2.value);
  CHECK(r1.error_bound <= 1e-8);
}

TEST_CASE("average_slope falls back to the certified window") {
  // Linear chain with stationary law (2/3, 1/3); the slope for f = 1_b is 1/3.
  const UpperTransitionOperator t(StateSpace::anonymous(2), {CredalRow::precise({0.9, 0.1}),
                                                             CredalRow::precise({0.2, 0.8})});
  const Gamble f{0, 1};
  auto step = [&](const Gamble& h) { return apply_average_map(t, f, h); };
  LimitOptions opts;
  opts.tolerance = 1e-3;
  const auto r = average_slope(step, 2, opts);
  CHECK(r.method == LimitMethod::CesaroWindow);
  CHECK(r.error_bound <= 1e-3);
  CHECK(std::fabs(r.value - 1.0 / 3.0) <= r.error_bound + 1e-15);

  opts.max_iterations = 3;
  opts.tolerance = 1e-14;
  const auto b = average_slope(step, 2, opts);
  CHECK(b.budget_exceeded);
  CHECK(b.iterations == 3);
  CHECK(std::fabs(b.value - 1.0 / 3.0) <= b.error_bound + 1e-15);

  // Default tolerance.
  const auto l = average_slope(step, 2, LimitOptions{});
  CHECK(std::fabs(l.value - 1.0 / 3.0) <= l.error_bound + 1e-12);
  CHECK(l.error_bound <= 1e-8);
}

TEST_CASE("dominance of averages by expectations") {
  Rng rng(24);
  int ergodic = 0;
  for (int i = 0; i < 300 && ergodic < 60; ++i) {
    const std::size_t n = 1 + pick(rng, 4);
    const auto t = random_mixed_model(rng, n);
    if (!classify(t).ergodic) continue;
    ++ergodic;
    const Gamble f = random_gamble(rng, n);
    const auto av = result(limit_upper_average(t, f));
    const auto ex = result(limit_upper_expectation(t, f));
    CHECK(av.value <= ex.value + av.error_bound + ex.error_bound + 1e-12);
  }
  CHECK(ergodic >= 30);
}

TEST_CASE("period-lock soundness") {
  Rng rng(25);
  int locks = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + pick(rng, 4);
    const auto t = random_mixed_model(rng, n);
    if (!classify(t).tca) continue;
    const Gamble f = random_gamble(rng, n);
    const auto r = result(limit_upper_average(t, f));
    if (!r.lock) continue;
    ++locks;
    Gamble hk = Gamble::zero(n);
    for (std::size_t j = 0; j < r.lock->k; ++j) hk = apply_average_map(t, f, hk);
    Gamble h = hk;
    for (std::size_t m = 1; m <= 5; ++m) {
      for (std::size_t j = 0; j < r.lock->period; ++j) h = apply_average_map(t, f, h);
      CHECK(max_gap(h, hk + static_cast<double>(m) * r.lock->increment) <= 5e-12);
    }
  }
  CHECK(locks > 0);
  // The period-two swap chain always locks.
  const auto s = result(limit_upper_average(swap_chain(), Gamble{0.125, 3.0}));
  REQUIRE(s.lock);
}

TEST_CASE("scale equivariance of the average limit") {
  Rng rng(26);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + pick(rng, 4);
    const auto t = random_mixed_model(rng, n);
    if (!classify(t).tca) continue;
    const Gamble f = random_gamble(rng, n);
    const double lambda = uniform(rng, 0, 5);
    const auto a = result(limit_upper_average(t, f));
    const auto b = result(limit_upper_average(t, lambda * f));
    CHECK(std::fabs(b.value - lambda * a.value) <=
          b.error_bound + lambda * a.error_bound + 1e-9 * (1 + lambda));
  }
}

TEST_CASE("non-absorbing witness set") {
  Rng rng(27);
  int found = 0;
  std::vector<UpperTransitionOperator> cases{trapped_pair(), absorbing_singleton()};
  for (int i = 0; i < 600; ++i) cases.push_back(random_mixed_model(rng, 2 + pick(rng, 4)));
  for (const auto& t : cases) {
    const auto r = classify(t);
    if (!r.has_top_class || r.tca) continue;
    ++found;
    const std::size_t n = t.size();
    const StateSet a = non_absorbing_set(t);
    REQUIRE_FALSE(a.empty());
    const Gamble ia = indicator(n, a);
    const Gamble ta = t.apply_upper(ia);
    for (StateIndex x = 0; x < n; ++x) CHECK(ia[x] <= ta[x]);
    AverageIterator it(t, ia);
    for (int k = 1; k <= 50; ++k) {
      it = it.step();
      const Gamble avg = it.average();
      for (StateIndex x : a) CHECK(avg[x] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(found >= 10);
}
