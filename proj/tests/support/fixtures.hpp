#pragma once

// Small hand-built models used across the suites.

#include "imc/transition_operator.hpp"

namespace imc::testing {

/// Two states that deterministically swap: the single matrix [[0,1],[1,0]].
/// Weakly ergodic but periodic.
inline UpperTransitionOperator swap_chain() {
  return UpperTransitionOperator(StateSpace({"a", "b"}),
                                 {CredalRow::precise({0, 1}), CredalRow::precise({1, 0})});
}

/// State a may go anywhere (vacuous row); state b always moves to a.
inline UpperTransitionOperator vacuous_forced_chain() {
  return UpperTransitionOperator(StateSpace({"a", "b"}),
                                 {CredalRow::vacuous(), CredalRow::precise({1, 0})});
}

/// Two absorbing states with no transitions between them.
inline UpperTransitionOperator two_isolated() {
  return UpperTransitionOperator(StateSpace({"a", "b"}),
                                 {CredalRow::precise({1, 0}), CredalRow::precise({0, 1})});
}

/// Top class {a} (absorbing); c and d may swap forever, so the top class does
/// not absorb.
inline UpperTransitionOperator trapped_pair() {
  return UpperTransitionOperator(
      StateSpace({"a", "c", "d"}),
      {CredalRow::precise({1, 0, 0}), CredalRow::vertices({{0, 0, 1}, {1, 0, 0}}),
       CredalRow::vertices({{0, 1, 0}, {1, 0, 0}})});
}

/// Maximal class {a, b} (imprecise, aperiodic) fed by a transient state c.
inline UpperTransitionOperator feeder_chain() {
  return UpperTransitionOperator(
      StateSpace({"a", "b", "c"}),
      {CredalRow::vertices({{0.3, 0.7, 0}, {0.9, 0.1, 0}}),
       CredalRow::intervals({0.2, 0.1, 0}, {0.9, 0.8, 0}),
       CredalRow::vertices({{0.2, 0.3, 0.5}, {0, 0.1, 0.9}})});
}

/// Top class {a}. b enters it with lower probability 0.1 per step; the
/// vacuous state c may stay put forever.
inline UpperTransitionOperator absorbing_singleton() {
  return UpperTransitionOperator(
      StateSpace({"a", "b", "c"}),
      {CredalRow::precise({1, 0, 0}), CredalRow::intervals({0.1, 0.2, 0}, {0.8, 0.9, 0.3}),
       CredalRow::vacuous()});
}

}  // namespace imc::testing
