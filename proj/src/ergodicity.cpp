#include "imc/ergodicity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "imc/class_restriction.hpp"
#include "imc/error.hpp"

namespace imc {

ErgodicityReport classify(const UpperTransitionOperator& t) {
  const auto g = build_upper_graph(t);
  const auto d = decompose(g);
  ErgodicityReport r;
  for (std::size_t c : d.maximal) r.maximal_classes.push_back(d.classes[c]);
  if (const StateSet* top = d.top_class()) {
    r.has_top_class = true;
    r.top_class = *top;
    r.top_class_period = class_period(g, *top);
    r.tcr = *r.top_class_period == 1;
    r.tca = absorbing_closure(t).size() == t.size();
  }
  r.weakly_ergodic = r.tca;
  r.ergodic = r.tcr && r.tca;
  return r;
}

const char* limit_method_name(LimitMethod m) {
  switch (m) {
    case LimitMethod::SeminormContraction:
      return "seminorm-contraction";
    case LimitMethod::PeriodLock:
      return "period-lock";
    case LimitMethod::CesaroWindow:
      return "cesaro-window";
    case LimitMethod::ClassRestricted:
      return "class-restricted";
  }
  return "?";
}

ExpectationLimit limit_upper_expectation(const UpperTransitionOperator& t, const Gamble& f,
                                         const LimitOptions& opts) {
  if (!(opts.tolerance > 0.0)) throw Error("tolerance must be positive");
  auto report = classify(t);
  if (!report.ergodic) return NotErgodic{std::move(report)};

  Gamble h = f;
  double spread = hilbert_seminorm(h);
  std::size_t k = 0;
  for (;;) {
    if (spread <= 2.0 * opts.tolerance || k >= opts.max_iterations) {
      LimitResult r;
      r.value = 0.5 * (h.max() + h.min());
      r.error_bound = 0.5 * spread;
      r.iterations = k;
      r.method = LimitMethod::SeminormContraction;
      r.budget_exceeded = spread > 2.0 * opts.tolerance;
      return r;
    }
    h = t.apply_upper(h);
    ++k;
    const double next = hilbert_seminorm(h);
    if (next > spread + 1e-12 * std::max(1.0, sup_norm(h))) {
      throw InternalCheckFailed("Hilbert seminorm increased from " + std::to_string(spread) +
                                " to " + std::to_string(next) + " at step " + std::to_string(k));
    }
    spread = next;
  }
}

ExpectationLimit limit_lower_expectation(const UpperTransitionOperator& t, const Gamble& f,
                                         const LimitOptions& opts) {
  auto r = limit_upper_expectation(t, -f, opts);
  if (auto* lr = std::get_if<LimitResult>(&r)) lr->value = -lr->value;
  return r;
}

LimitResult average_slope(const std::function<Gamble(const Gamble&)>& step, std::size_t dim,
                          const LimitOptions& opts) {
  if (!(opts.tolerance > 0.0)) throw Error("tolerance must be positive");
  const std::size_t max_period = opts.max_period ? opts.max_period : dim;

  // history[i] holds h_{k - (history.size() - 1) + i}.
  std::deque<Gamble> history{Gamble::zero(dim)};
  LimitResult best;
  best.method = LimitMethod::CesaroWindow;
  best.error_bound = std::numeric_limits<double>::infinity();

  for (std::size_t k = 1; k <= opts.max_iterations; ++k) {
    history.push_back(step(history.back()));
    if (history.size() > max_period + 1) history.pop_front();
    const Gamble& h = history.back();

    // For a topical map G = F^p, h + a <= G h <= h + b pins the growth rate of
    // every orbit to [a/p, b/p]. A constant increment is therefore exact.
    const auto kd = static_cast<double>(k);
    double lo = h.min() / kd;
    double hi = h.max() / kd;
    const std::size_t reach = std::min(max_period, history.size() - 1);
    for (std::size_t p = 1; p <= reach; ++p) {
      const Gamble diff = h - history[history.size() - 1 - p];
      const double a = diff.min();
      const double b = diff.max();
      const auto pd = static_cast<double>(p);
      if (b - a <= kPeriodLockTolerance) {
        LimitResult r;
        r.value = 0.5 * (a + b) / pd;
        r.error_bound = 0.5 * (b - a) / pd;
        r.iterations = k;
        r.method = LimitMethod::PeriodLock;
        r.lock = PeriodLock{k - p, p, 0.5 * (a + b)};
        return r;
      }
      lo = std::max(lo, a / pd);
      hi = std::min(hi, b / pd);
    }
    if (hi < lo) hi = lo = 0.5 * (hi + lo);  // rounding only
    best.value = 0.5 * (lo + hi);
    best.error_bound = 0.5 * (hi - lo);
    best.iterations = k;
    if (best.error_bound <= opts.tolerance) return best;
  }
  best.budget_exceeded = true;
  return best;
}

AverageLimit limit_upper_average(const UpperTransitionOperator& t, const Gamble& f,
                                 const LimitOptions& opts) {
  if (f.size() != t.size()) throw DimensionMismatch("gamble size does not match operator");
  auto report = classify(t);
  if (!report.tca) return NotWeaklyErgodic{std::move(report)};
  return average_slope([&](const Gamble& h) { return apply_average_map(t, f, h); }, t.size(), opts);
}

AverageLimit limit_lower_average(const UpperTransitionOperator& t, const Gamble& f,
                                 const LimitOptions& opts) {
  auto r = limit_upper_average(t, -f, opts);
  if (auto* lr = std::get_if<LimitResult>(&r)) {
    lr->value = -lr->value;
    if (lr->lock) lr->lock->increment = -lr->lock->increment;
  }
  return r;
}

LimitResult class_average_limit(const UpperTransitionOperator& t, const Gamble& f,
                                const StateSet& cls, const LimitOptions& opts) {
  const auto restricted = restrict_to_class(t, f, cls);
  auto r = average_slope([&](const Gamble& h) { return restricted.apply(h); }, restricted.size(),
                         opts);
  r.method = LimitMethod::ClassRestricted;
  return r;
}

}  // namespace imc
