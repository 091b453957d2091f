#include "imc/transition_operator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "imc/error.hpp"

namespace imc {

UpperTransitionOperator::UpperTransitionOperator(StateSpace space, std::vector<CredalRow> rows)
    : UpperTransitionOperator(unchecked(std::move(space), std::move(rows))) {
  for (StateIndex x = 0; x < size(); ++x) require_valid_row(row(x), size(), space_->label(x));
}

UpperTransitionOperator UpperTransitionOperator::unchecked(StateSpace space,
                                                           std::vector<CredalRow> rows) {
  if (rows.size() != space.size()) {
    throw DimensionMismatch("operator has " + std::to_string(rows.size()) + " rows for " +
                            std::to_string(space.size()) + " states");
  }
  UpperTransitionOperator t;
  t.space_ = std::make_shared<const StateSpace>(std::move(space));
  t.rows_ = std::make_shared<const std::vector<CredalRow>>(std::move(rows));
  return t;
}

Gamble UpperTransitionOperator::apply_upper(const Gamble& h) const {
  if (h.size() != size()) {
    throw DimensionMismatch("gamble has " + std::to_string(h.size()) + " entries, operator has " +
                            std::to_string(size()) + " states");
  }
  std::vector<double> out(size());
  for (StateIndex x = 0; x < size(); ++x) out[x] = upper_row_expectation((*rows_)[x], h.values());
  return Gamble(std::move(out));
}

Gamble UpperTransitionOperator::apply_lower(const Gamble& h) const { return -apply_upper(-h); }

Gamble iterate_upper(const UpperTransitionOperator& t, const Gamble& f, std::size_t k) {
  Gamble h = f;
  for (std::size_t i = 0; i < k; ++i) h = t.apply_upper(h);
  return h;
}

Gamble iterate_lower(const UpperTransitionOperator& t, const Gamble& f, std::size_t k) {
  return -iterate_upper(t, -f, k);
}

Gamble apply_average_map(const UpperTransitionOperator& t, const Gamble& f, const Gamble& h) {
  return f + t.apply_upper(h);
}

AverageIterator::AverageIterator(UpperTransitionOperator t, Gamble f)
    : t_(std::move(t)), f_(f), k_(0), m_(std::move(f)) {
  if (f_.size() != t_.size()) throw DimensionMismatch("gamble size does not match operator");
}

AverageIterator::AverageIterator(UpperTransitionOperator t, Gamble f, std::size_t k, Gamble m)
    : t_(std::move(t)), f_(std::move(f)), k_(k), m_(std::move(m)) {}

AverageIterator AverageIterator::step() const {
  return AverageIterator(t_, f_, k_ + 1, apply_average_map(t_, f_, m_));
}

Gamble AverageIterator::average() const {
  std::vector<double> v(m_.values().begin(), m_.values().end());
  const auto d = static_cast<double>(k_ + 1);
  for (double& x : v) x /= d;
  return Gamble(std::move(v));
}

Gamble upper_expected_average(const UpperTransitionOperator& t, const Gamble& f, std::size_t k) {
  AverageIterator it(t, f);
  while (it.k() < k) it = it.step();
  return it.average();
}

Gamble lower_expected_average(const UpperTransitionOperator& t, const Gamble& f, std::size_t k) {
  return -upper_expected_average(t, -f, k);
}

const char* coherence_property_name(CoherenceProperty p) {
  switch (p) {
    case CoherenceProperty::Boundedness:
      return "boundedness";
    case CoherenceProperty::SubAdditivity:
      return "sub-additivity";
    case CoherenceProperty::Homogeneity:
      return "non-negative homogeneity";
    case CoherenceProperty::ConstantAdditivity:
      return "constant additivity";
    case CoherenceProperty::Monotonicity:
      return "monotonicity";
    case CoherenceProperty::MixedSubAdditivity:
      return "mixed sub-additivity";
  }
  return "?";
}

double CoherenceReport::worst_violation() const {
  return *std::max_element(worst.begin(), worst.end());
}

CoherenceReport coherence_selftest(const UpperTransitionOperator& t, std::size_t samples,
                                   std::uint64_t seed, std::size_t power) {
  const std::size_t n = t.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> nonneg(0.0, 1.0);
  auto draw = [&](auto& dist, double scale) {
    std::vector<double> v(n);
    for (double& x : v) x = scale * dist(rng);
    return Gamble(std::move(v));
  };
  auto op = [&](const Gamble& h) { return iterate_upper(t, h, power); };

  CoherenceReport r;
  r.samples = samples;
  auto record = [&](CoherenceProperty p, double v) {
    auto& w = r.worst[static_cast<std::size_t>(p)];
    w = std::max(w, v);
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const double scale = std::pow(10.0, static_cast<double>(s % 3));
    const Gamble h = draw(unit, scale);
    const Gamble g = draw(unit, scale);
    const Gamble d = draw(nonneg, scale);
    const double lambda = 3.0 * nonneg(rng);
    const double mu = 2.0 * scale * unit(rng);

    const Gamble th = op(h);
    const Gamble tg = op(g);
    const Gamble t_sum = op(h + g);
    const Gamble t_scaled = op(lambda * h);
    const Gamble t_shift = op(h + mu);
    const Gamble t_dom = op(h + d);
    const Gamble t_diff = op(h - g);
    const double lo = h.min();
    const double hi = h.max();

    for (StateIndex x = 0; x < n; ++x) {
      record(CoherenceProperty::Boundedness, std::max({0.0, lo - th[x], th[x] - hi}));
      record(CoherenceProperty::SubAdditivity, std::max(0.0, t_sum[x] - th[x] - tg[x]));
      record(CoherenceProperty::Homogeneity, std::fabs(t_scaled[x] - lambda * th[x]));
      record(CoherenceProperty::ConstantAdditivity, std::fabs(t_shift[x] - mu - th[x]));
      record(CoherenceProperty::Monotonicity, std::max(0.0, th[x] - t_dom[x]));
      record(CoherenceProperty::MixedSubAdditivity, std::max(0.0, th[x] - tg[x] - t_diff[x]));
    }
  }
  return r;
}

}  // namespace imc
