#include <cmath>

#include "doctest.h"
#include "imc/accessibility.hpp"
#include "imc/class_restriction.hpp"
#include "imc/error.hpp"
#include "imc/transition_operator.hpp"
#include "support/approx.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace imc;
using namespace imc::testing;

TEST_CASE("apply_upper") {
  CHECK(vacuous_forced_chain().apply_upper(Gamble{0, 1}) == Gamble{1, 0});
  CHECK(swap_chain().apply_upper(Gamble{0.3, -2}) == Gamble{-2, 0.3});
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto t = random_mixed_model(rng, 1 + pick(rng, 5));
    const double c = uniform(rng, -3, 3);
    CHECK(max_gap(t.apply_upper(Gamble::constant(t.size(), c)), Gamble::constant(t.size(), c)) <=
          1e-12);
  }
  CHECK_THROWS_AS(swap_chain().apply_upper(Gamble{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("apply_lower") {
  // Row a: -max(-h) = min h = 0; row b: h(a) = 0.
  CHECK(vacuous_forced_chain().apply_lower(Gamble{0, 1}) == Gamble{0, 0});
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    std::vector<CredalRow> rows;
    const std::size_t n = 1 + pick(rng, 5);
    for (std::size_t x = 0; x < n; ++x) rows.push_back(random_precise(rng, n, 0.7));
    const UpperTransitionOperator t(StateSpace::anonymous(n), rows);
    const Gamble h = random_gamble(rng, n);
    CHECK(max_gap(t.apply_lower(h), t.apply_upper(h)) <= 1e-15);
    CHECK(max_gap(t.apply_lower(Gamble::constant(n, 0.7)), Gamble::constant(n, 0.7)) <= 1e-12);
  }
}

TEST_CASE("iterate_upper") {
  CHECK(iterate_upper(vacuous_forced_chain(), Gamble{0, 1}, 2) == Gamble{1, 1});
  CHECK(iterate_upper(swap_chain(), Gamble{1, 0}, 2) == Gamble{1, 0});
  CHECK(iterate_upper(swap_chain(), Gamble{1, 0}, 3) == Gamble{0, 1});
  CHECK(iterate_upper(swap_chain(), Gamble{1, 0}, 0) == Gamble{1, 0});
  Rng rng(3);
  const auto t = random_mixed_model(rng, 4);
  CHECK(max_gap(iterate_upper(t, Gamble::constant(4, -1.5), 7), Gamble::constant(4, -1.5)) <= 1e-12);
}

TEST_CASE("average_step accumulates f + T m") {
  AverageIterator it(vacuous_forced_chain(), Gamble{0, 1});
  CHECK(it.k() == 0);
  CHECK(it.accumulated() == Gamble{0, 1});
  const auto next = it.step();
  CHECK(next.k() == 1);
  CHECK(next.accumulated() == Gamble{1, 1});
  CHECK(it.k() == 0);  // stepping is functional

  AverageIterator zero(swap_chain(), Gamble::zero(2));
  for (int i = 0; i < 5; ++i) zero = zero.step();
  CHECK(zero.accumulated() == Gamble::zero(2));

  Rng rng(4);
  AverageIterator c(random_mixed_model(rng, 3), Gamble::constant(3, 0.25));
  for (int i = 0; i < 6; ++i) c = c.step();
  CHECK(max_gap(c.accumulated(), Gamble::constant(3, 7 * 0.25)) <= 1e-12);
}

TEST_CASE("upper_expected_average") {
  for (std::size_t l = 1; l <= 6; ++l) {
    CHECK(upper_expected_average(vacuous_forced_chain(), Gamble{0, 1}, 2 * l - 1) ==
          Gamble{0.5, 0.5});
  }
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const Gamble f = random_gamble(rng, 2);
    const double mean = (f[0] + f[1]) / 2;
    for (std::size_t l = 1; l <= 4; ++l) {
      const Gamble avg = upper_expected_average(swap_chain(), f, 2 * l - 1);
      CHECK(avg[0] == doctest::Approx(mean).epsilon(1e-14));
      CHECK(avg[1] == doctest::Approx(mean).epsilon(1e-14));
    }
  }
}

TEST_CASE("lower_expected_average") {
  const Gamble f{1, 0};
  CHECK(lower_expected_average(swap_chain(), f, 3) == upper_expected_average(swap_chain(), f, 3));
  CHECK(lower_expected_average(swap_chain(), f, 3) == Gamble{0.5, 0.5});
  CHECK(max_gap(lower_expected_average(feeder_chain(), Gamble::constant(3, 4.0), 9),
                Gamble::constant(3, 4.0)) <= 1e-12);
  // From a the chain may stay in a; from b it must spend step 0 in b, then a.
  CHECK(lower_expected_average(vacuous_forced_chain(), Gamble{0, 1}, 1) == Gamble{0, 0.5});
}

TEST_CASE("coherence_selftest") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto t = random_mixed_model(rng, 2 + pick(rng, 4));
    CHECK(coherence_selftest(t, 50, 100 + i).worst_violation() <= 1e-9);
  }

  std::vector<CredalRow> rows;
  for (int x = 0; x < 3; ++x) rows.push_back(random_precise(rng, 3, 0.8));
  const UpperTransitionOperator precise(StateSpace::anonymous(3), rows);
  const auto r = coherence_selftest(precise, 200, 7);
  CHECK(r.worst[static_cast<std::size_t>(CoherenceProperty::SubAdditivity)] <= 1e-12);

  const auto broken = UpperTransitionOperator::unchecked(
      StateSpace::anonymous(2), {CredalRow::precise({0.55, 0.55}), CredalRow::vacuous()});
  const auto bad = coherence_selftest(broken, 20, 8);
  CHECK(bad.worst_violation() > 1e-3);
  CHECK(bad.worst[static_cast<std::size_t>(CoherenceProperty::ConstantAdditivity)] > 1e-3);
  CHECK_THROWS_AS(UpperTransitionOperator(StateSpace::anonymous(2),
                                          {CredalRow::precise({0.55, 0.55}), CredalRow::vacuous()}),
                  InvalidRow);
}

TEST_CASE("iterated operators stay coherent") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto t = random_mixed_model(rng, 2 + pick(rng, 3));
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(coherence_selftest(t, 20, 300 + i, k).worst_violation() <= 1e-9);
    }
  }
}

TEST_CASE("non-expansiveness, drift bound and average bounds") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + pick(rng, 4);
    const auto t = random_mixed_model(rng, n);
    const Gamble h = random_gamble(rng, n, 2.0);
    const Gamble g = random_gamble(rng, n, 2.0);
    const Gamble f = random_gamble(rng, n);
    CHECK(sup_norm(t.apply_upper(h) - t.apply_upper(g)) <= sup_norm(h - g) + 1e-12);
    CHECK(hilbert_seminorm(t.apply_upper(h) - t.apply_upper(g)) <=
          hilbert_seminorm(h - g) + 1e-12);

    const std::size_t k = pick(rng, 11);
    Gamble tf = h;
    for (std::size_t j = 0; j < k; ++j) tf = apply_average_map(t, f, tf);
    CHECK(sup_norm(iterate_upper(t, h, k) - tf) <= static_cast<double>(k) * sup_norm(f) + 1e-12);

    const Gamble avg = upper_expected_average(t, f, k);
    CHECK(avg.min() >= f.min() - 1e-12);
    CHECK(avg.max() <= f.max() + 1e-12);

    // Topicality of the average map.
    const double mu = uniform(rng, -2, 2);
    CHECK(max_gap(apply_average_map(t, f, h + mu), apply_average_map(t, f, h) + mu) <= 1e-12);
    std::vector<double> bump(n);
    for (double& b : bump) b = uniform(rng, 0, 1);
    const Gamble dominated = apply_average_map(t, f, h);
    const Gamble dominating = apply_average_map(t, f, h + Gamble(bump));
    for (std::size_t x = 0; x < n; ++x) CHECK(dominated[x] <= dominating[x] + 1e-12);
  }
}

TEST_CASE("expected averages on a maximal class ignore f outside it") {
  Rng rng(9);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + pick(rng, 4);
    const auto t = random_mixed_model(rng, n);
    const auto d = decompose(build_upper_graph(t));
    const Gamble f = random_gamble(rng, n);
    for (std::size_t c : d.maximal) {
      const auto& cls = d.classes[c];
      const Gamble restricted = f.pointwise(indicator(n, cls));
      const std::size_t k = 1 + pick(rng, 12);
      const Gamble full = upper_expected_average(t, f, k);
      const Gamble part = upper_expected_average(t, restricted, k);
      for (StateIndex x : cls) CHECK(full[x] == part[x]);
      ++checked;
    }
  }
  CHECK(checked >= 300);
}

TEST_CASE("restrict_to_class") {
  // Strongly connected: the restriction is the full average map.
  const auto swap = swap_chain();
  const auto whole = restrict_to_class(swap, Gamble{1, 0}, {0, 1});
  CHECK(whole.apply(Gamble{0.5, 2}) == apply_average_map(swap, Gamble{1, 0}, Gamble{0.5, 2}));

  // In the vacuous/forced chain the two states communicate, so {a} is not maximal.
  CHECK_THROWS_AS(restrict_to_class(vacuous_forced_chain(), Gamble{0, 1}, {0}), NotMaximalClass);

  // Absorbing singleton class {a}: the iterates of f = 1_b stay 0 on it.
  const auto abs = absorbing_singleton();
  const auto on_a = restrict_to_class(abs, Gamble{0, 1, 0}, {0});
  Gamble h = Gamble::zero(1);
  for (int k = 0; k < 10; ++k) {
    h = on_a.apply(h);
    CHECK(h == Gamble{0});
  }

  // Class {a,b} of the feeder chain: restricted and full iteration agree on the class.
  const auto feeder = feeder_chain();
  const Gamble f{0.4, -1.0, 3.0};
  const auto map = restrict_to_class(feeder, f, {0, 1});
  Gamble full = Gamble::zero(3);
  Gamble part = Gamble::zero(2);
  for (int k = 1; k <= 10; ++k) {
    full = apply_average_map(feeder, f, full);
    part = map.apply(part);
    CHECK(part == map.restrict(full));
  }
  CHECK_THROWS_AS(restrict_to_class(feeder, f, {2}), NotMaximalClass);
  CHECK_THROWS_AS(restrict_to_class(feeder, f, {0}), NotMaximalClass);
}
