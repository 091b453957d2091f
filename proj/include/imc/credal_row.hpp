#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "imc/gamble.hpp"
#include "imc/state_space.hpp"

namespace imc {

/// Absolute tolerance for stochasticity and interval feasibility checks.
inline constexpr double kStochasticTolerance = 1e-12;

/// Largest row dimension accepted by interval vertex enumeration.
inline constexpr std::size_t kMaxIntervalVertexDimension = 12;

using MassFunction = std::vector<double>;

struct PreciseRow {
  MassFunction mass;
};

struct VertexListRow {
  std::vector<MassFunction> vertices;
};

struct IntervalRow {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// The set of all mass functions on the state space.
struct VacuousRow {};

enum class RowKind { Precise, Vertices, Intervals, Vacuous };

/// The credal set of transition mass functions out of one state.
///
/// Construction stores the data as given; validate_row() checks the
/// invariants. UpperTransitionOperator refuses invalid rows.
class CredalRow {
 public:
  using Variant = std::variant<PreciseRow, VertexListRow, IntervalRow, VacuousRow>;

  static CredalRow precise(MassFunction mass) { return CredalRow(PreciseRow{std::move(mass)}); }
  static CredalRow vertices(std::vector<MassFunction> v) {
    return CredalRow(VertexListRow{std::move(v)});
  }
  static CredalRow intervals(std::vector<double> lower, std::vector<double> upper) {
    return CredalRow(IntervalRow{std::move(lower), std::move(upper)});
  }
  static CredalRow vacuous() { return CredalRow(VacuousRow{}); }

  explicit CredalRow(Variant v) : v_(std::move(v)) {}

  const Variant& variant() const noexcept { return v_; }
  RowKind kind() const noexcept { return static_cast<RowKind>(v_.index()); }

  /// Number of states the row is defined over; empty for a vacuous row.
  std::optional<std::size_t> dimension() const;

  friend bool operator==(const CredalRow& a, const CredalRow& b);

 private:
  Variant v_;
};

struct RowValidation {
  bool valid = true;
  std::string violation;  // empty when valid
  // Interval rows only: bounds that no mass function in the set attains.
  bool bounds_reachable = true;
  std::vector<StateIndex> unreachable_lower;
  std::vector<StateIndex> unreachable_upper;
};

/// Checks the row invariants. `n` is the state count the row must match.
RowValidation validate_row(const CredalRow& row, std::size_t n);

/// Throws InvalidRow naming `label` when the row is invalid.
void require_valid_row(const CredalRow& row, std::size_t n, const std::string& label);

/// sup over the row's credal set of sum_y p(y) h(y). Precondition: row valid.
/// Throws InvalidRow when the row dimension does not match h.
double upper_row_expectation(const CredalRow& row, const Gamble& h);
double upper_row_expectation(const CredalRow& row, std::span<const double> h);

/// -upper_row_expectation(row, -h).
double lower_row_expectation(const CredalRow& row, const Gamble& h);

/// Extreme points of a probability-interval credal set.
/// Throws InvalidRow or SizeLimit (more than kMaxIntervalVertexDimension states).
VertexListRow interval_row_vertices(const IntervalRow& row);

/// Finite generating vertex set for any row variant (vacuous rows yield the n
/// degenerate mass functions).
std::vector<MassFunction> row_vertices(const CredalRow& row, std::size_t n);

/// Whether some mass function in the row puts positive mass on state j, decided
/// from the row's structure rather than a floating envelope.
bool upper_mass_positive(const CredalRow& row, StateIndex j, std::size_t n);

/// Whether every mass function in the row puts positive mass on `set`
/// (membership mask of length n).
bool lower_mass_positive(const CredalRow& row, const std::vector<bool>& set);

}  // namespace imc
