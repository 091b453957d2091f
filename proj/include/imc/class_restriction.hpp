#pragma once

#include <vector>

#include "imc/accessibility.hpp"
#include "imc/gamble.hpp"
#include "imc/transition_operator.hpp"

namespace imc {

/// The average map h -> f + T h confined to a maximal communication class S:
/// a gamble on S is zero-extended to the whole space, mapped, and restricted
/// back to S. Iterating it reproduces the unrestricted iterates on S.
class RestrictedAverageMap {
 public:
  const StateSet& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }

  /// h has one entry per state of the class, in the order of states().
  Gamble apply(const Gamble& h) const;

  /// k-fold application starting from h.
  Gamble iterate(const Gamble& h, std::size_t k) const;

  Gamble restrict(const Gamble& full) const;
  /// Zero extension to the full state space.
  Gamble extend(const Gamble& on_class) const;

 private:
  friend RestrictedAverageMap restrict_to_class(const UpperTransitionOperator&, const Gamble&,
                                                const StateSet&);
  RestrictedAverageMap(UpperTransitionOperator t, Gamble f, StateSet states);

  UpperTransitionOperator t_;
  Gamble f_;
  StateSet states_;
};

/// Throws NotMaximalClass unless `cls` is a maximal communication class of T.
RestrictedAverageMap restrict_to_class(const UpperTransitionOperator& t, const Gamble& f,
                                       const StateSet& cls);

}  // namespace imc
