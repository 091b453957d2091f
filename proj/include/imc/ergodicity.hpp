#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "imc/accessibility.hpp"
#include "imc/gamble.hpp"
#include "imc/transition_operator.hpp"

namespace imc {

struct ErgodicityReport {
  bool has_top_class = false;
  std::optional<StateSet> top_class;
  std::optional<std::size_t> top_class_period;
  std::vector<StateSet> maximal_classes;
  bool tcr = false;
  bool tca = false;
  bool ergodic = false;
  bool weakly_ergodic = false;
};

ErgodicityReport classify(const UpperTransitionOperator& t);

enum class LimitMethod { SeminormContraction, PeriodLock, CesaroWindow, ClassRestricted };

const char* limit_method_name(LimitMethod m);

/// h_{k+period} - h_k was constant (within kPeriodLockTolerance) at step k.
struct PeriodLock {
  std::size_t k = 0;
  std::size_t period = 0;
  double increment = 0.0;
};

inline constexpr double kPeriodLockTolerance = 1e-12;

struct LimitResult {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t iterations = 0;
  LimitMethod method = LimitMethod::SeminormContraction;
  /// The iteration budget ran out before error_bound reached the tolerance;
  /// value and error_bound are still a valid enclosure.
  bool budget_exceeded = false;
  std::optional<PeriodLock> lock;
};

struct LimitOptions {
  double tolerance = 1e-8;
  std::size_t max_iterations = 100000;
  /// Largest lock period tried; 0 means the number of states involved.
  std::size_t max_period = 0;
};

struct NotErgodic {
  ErgodicityReport report;
};

struct NotWeaklyErgodic {
  ErgodicityReport report;
};

using ExpectationLimit = std::variant<LimitResult, NotErgodic>;
using AverageLimit = std::variant<LimitResult, NotWeaklyErgodic>;

/// Limit of T^k f for an ergodic operator, stopped once the Hilbert seminorm of
/// the iterate is at most 2 * tolerance. Throws InternalCheckFailed if the
/// seminorm ever increases.
ExpectationLimit limit_upper_expectation(const UpperTransitionOperator& t, const Gamble& f,
                                         const LimitOptions& opts = {});
ExpectationLimit limit_lower_expectation(const UpperTransitionOperator& t, const Gamble& f,
                                         const LimitOptions& opts = {});

/// Limit upper expected time average; NotWeaklyErgodic unless the top class
/// absorbs.
AverageLimit limit_upper_average(const UpperTransitionOperator& t, const Gamble& f,
                                 const LimitOptions& opts = {});
AverageLimit limit_lower_average(const UpperTransitionOperator& t, const Gamble& f,
                                 const LimitOptions& opts = {});

/// Common limit of the upper expected average on a maximal class. Defined for
/// every operator. Throws NotMaximalClass.
LimitResult class_average_limit(const UpperTransitionOperator& t, const Gamble& f,
                                const StateSet& cls, const LimitOptions& opts = {});

/// Slope extraction for an arbitrary topical map F, iterating h_k = F^k(0).
/// Exposed for testing.
LimitResult average_slope(const std::function<Gamble(const Gamble&)>& step, std::size_t dim,
                          const LimitOptions& opts);

}  // namespace imc
