#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "imc/state_space.hpp"

namespace imc {

/// A real-valued function on a finite state space. Entries are always finite.
class Gamble {
 public:
  /// Throws InvalidGamble on an empty vector or a non-finite entry.
  explicit Gamble(std::vector<double> values);
  Gamble(std::initializer_list<double> values) : Gamble(std::vector<double>(values)) {}

  static Gamble constant(std::size_t n, double c);
  static Gamble zero(std::size_t n) { return constant(n, 0.0); }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  double min() const;
  double max() const;

  Gamble operator-() const;
  Gamble& operator+=(const Gamble& o);
  Gamble& operator-=(const Gamble& o);
  Gamble& operator+=(double c);
  Gamble& operator*=(double c);

  friend Gamble operator+(Gamble a, const Gamble& b) { return a += b; }
  friend Gamble operator-(Gamble a, const Gamble& b) { return a -= b; }
  friend Gamble operator+(Gamble a, double c) { return a += c; }
  friend Gamble operator+(double c, Gamble a) { return a += c; }
  friend Gamble operator*(double c, Gamble a) { return a *= c; }
  friend Gamble operator*(Gamble a, double c) { return a *= c; }

  /// Pointwise product, e.g. f * 1_S.
  Gamble pointwise(const Gamble& o) const;

  friend bool operator==(const Gamble&, const Gamble&) = default;

 private:
  void require_same_size(const Gamble& o) const;
  void require_finite() const;

  std::vector<double> values_;
};

/// max h - min h.
double hilbert_seminorm(const Gamble& h);

/// max |h(x)|.
double sup_norm(const Gamble& h);

/// 1 on `states`, 0 elsewhere.
Gamble indicator(std::size_t n, std::span<const StateIndex> states);

/// Label-based variant. Throws UnknownState.
Gamble indicator(const StateSpace& space, std::span<const std::string> labels);
Gamble indicator(const StateSpace& space, std::initializer_list<std::string_view> labels);

/// Indicator of a single state.
Gamble unit(std::size_t n, StateIndex x);

}  // namespace imc
