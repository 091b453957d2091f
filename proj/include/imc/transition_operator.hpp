#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "imc/credal_row.hpp"
#include "imc/gamble.hpp"
#include "imc/state_space.hpp"

namespace imc {

/// Upper transition operator: one credal row per state. Cheap to copy; the
/// rows are shared and immutable.
class UpperTransitionOperator {
 public:
  /// Validates every row; throws InvalidRow naming the offending state.
  UpperTransitionOperator(StateSpace space, std::vector<CredalRow> rows);

  /// Skips row validation. Only for diagnostics such as coherence_selftest on
  /// deliberately broken models; the row count must still match.
  static UpperTransitionOperator unchecked(StateSpace space, std::vector<CredalRow> rows);

  const StateSpace& space() const noexcept { return *space_; }
  std::size_t size() const noexcept { return rows_->size(); }
  const CredalRow& row(StateIndex x) const { return (*rows_).at(x); }
  std::span<const CredalRow> rows() const noexcept { return *rows_; }

  /// (T h)(x) = upper_row_expectation(row x, h). Throws DimensionMismatch.
  Gamble apply_upper(const Gamble& h) const;
  /// -apply_upper(-h).
  Gamble apply_lower(const Gamble& h) const;

 private:
  UpperTransitionOperator() = default;

  std::shared_ptr<const StateSpace> space_;
  std::shared_ptr<const std::vector<CredalRow>> rows_;
};

/// T^k f, i.e. the upper expectation of f(X_k) given X_0 = x for every x.
Gamble iterate_upper(const UpperTransitionOperator& t, const Gamble& f, std::size_t k);

/// Lower counterpart of iterate_upper.
Gamble iterate_lower(const UpperTransitionOperator& t, const Gamble& f, std::size_t k);

/// One application of the average map h -> f + T h.
Gamble apply_average_map(const UpperTransitionOperator& t, const Gamble& f, const Gamble& h);

/// Stepped accumulation of m_{f,k} = f + T m_{f,k-1}, starting from m_{f,0} = f.
class AverageIterator {
 public:
  AverageIterator(UpperTransitionOperator t, Gamble f);

  /// Returns the next iterate; this one is unchanged.
  [[nodiscard]] AverageIterator step() const;

  std::size_t k() const noexcept { return k_; }
  const Gamble& accumulated() const noexcept { return m_; }
  const Gamble& f() const noexcept { return f_; }
  /// m_{f,k} / (k+1).
  Gamble average() const;

 private:
  AverageIterator(UpperTransitionOperator t, Gamble f, std::size_t k, Gamble m);

  UpperTransitionOperator t_;
  Gamble f_;
  std::size_t k_ = 0;
  Gamble m_;
};

/// Upper expected time average of f(X_0), ..., f(X_k) given X_0 = x, for all x.
Gamble upper_expected_average(const UpperTransitionOperator& t, const Gamble& f, std::size_t k);
Gamble lower_expected_average(const UpperTransitionOperator& t, const Gamble& f, std::size_t k);

enum class CoherenceProperty : std::size_t {
  Boundedness,
  SubAdditivity,
  Homogeneity,
  ConstantAdditivity,
  Monotonicity,
  MixedSubAdditivity,
};
inline constexpr std::size_t kCoherencePropertyCount = 6;

const char* coherence_property_name(CoherenceProperty p);

struct CoherenceReport {
  std::size_t samples = 0;
  std::array<double, kCoherencePropertyCount> worst{};  // largest violation per property
  double worst_violation() const;
};

/// Evaluates the six coherence properties of T^power on random gamble pairs.
CoherenceReport coherence_selftest(const UpperTransitionOperator& t, std::size_t samples,
                                   std::uint64_t seed, std::size_t power = 1);

}  // namespace imc
