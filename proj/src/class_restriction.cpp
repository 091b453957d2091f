#include "imc/class_restriction.hpp"

#include <algorithm>

#include "imc/error.hpp"

namespace imc {

RestrictedAverageMap::RestrictedAverageMap(UpperTransitionOperator t, Gamble f, StateSet states)
    : t_(std::move(t)), f_(std::move(f)), states_(std::move(states)) {}

Gamble RestrictedAverageMap::restrict(const Gamble& full) const {
  std::vector<double> v;
  v.reserve(states_.size());
  for (StateIndex x : states_) v.push_back(full[x]);
  return Gamble(std::move(v));
}

Gamble RestrictedAverageMap::extend(const Gamble& on_class) const {
  if (on_class.size() != states_.size()) {
    throw DimensionMismatch("gamble does not match class size");
  }
  std::vector<double> v(t_.size(), 0.0);
  for (std::size_t i = 0; i < states_.size(); ++i) v[states_[i]] = on_class[i];
  return Gamble(std::move(v));
}

Gamble RestrictedAverageMap::apply(const Gamble& h) const {
  const Gamble ext = extend(h);
  std::vector<double> v;
  v.reserve(states_.size());
  for (StateIndex x : states_) v.push_back(f_[x] + upper_row_expectation(t_.row(x), ext.values()));
  return Gamble(std::move(v));
}

Gamble RestrictedAverageMap::iterate(const Gamble& h, std::size_t k) const {
  Gamble out = h;
  for (std::size_t i = 0; i < k; ++i) out = apply(out);
  return out;
}

RestrictedAverageMap restrict_to_class(const UpperTransitionOperator& t, const Gamble& f,
                                       const StateSet& cls) {
  if (f.size() != t.size()) throw DimensionMismatch("gamble size does not match operator");
  StateSet sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  const auto d = decompose(build_upper_graph(t));
  if (!d.is_maximal(sorted)) {
    throw NotMaximalClass("state set " + format_state_set(t.space(), sorted) +
                          " is not a maximal communication class");
  }
  return RestrictedAverageMap(t, f, std::move(sorted));
}

}  // namespace imc
