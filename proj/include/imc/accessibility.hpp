#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "imc/state_space.hpp"
#include "imc/transition_operator.hpp"

namespace imc {

/// Upper accessibility graph: edge x -> y iff (T 1_y)(x) > 0.
class AccessibilityGraph {
 public:
  AccessibilityGraph(StateSpace space, std::vector<bool> adjacency);

  const StateSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_.size(); }
  bool edge(StateIndex from, StateIndex to) const { return adj_[from * size() + to]; }
  std::vector<StateIndex> successors(StateIndex x) const;

 private:
  StateSpace space_;
  std::vector<bool> adj_;  // row-major n x n
};

/// Positivity is decided per row variant from the row's structure.
AccessibilityGraph build_upper_graph(const UpperTransitionOperator& t);

struct ClassDecomposition {
  /// Communication classes, each sorted; classes ordered by their smallest state.
  std::vector<StateSet> classes;
  /// class_of[x] is the index into `classes` of the class containing x.
  std::vector<std::size_t> class_of;
  /// reaches[i * classes.size() + j]: class i accesses class j (reflexive).
  std::vector<bool> reaches;
  /// Indices of the undominated classes.
  std::vector<std::size_t> maximal;
  /// Index of the top class, present iff exactly one class is maximal.
  std::optional<std::size_t> top;

  bool class_reaches(std::size_t i, std::size_t j) const {
    return reaches[i * classes.size() + j];
  }
  const StateSet* top_class() const { return top ? &classes[*top] : nullptr; }
  bool is_maximal(const StateSet& set) const;
};

ClassDecomposition decompose(const AccessibilityGraph& g);

/// Whether a directed path with exactly k >= 1 edges leads from x to y.
bool path_of_length_exists(const AccessibilityGraph& g, StateIndex x, StateIndex y, std::size_t k);

/// gcd of cycle lengths through the class; 0 for a single state without a
/// self-loop.
std::size_t class_period(const AccessibilityGraph& g, const StateSet& cls);

/// Regularity of the top class decided by iterating Boolean matrix powers
/// until the sequence repeats, checking that from some power onward every
/// state reaches every top-class state. Independent of class_period.
bool regular_by_boolean_powers(const AccessibilityGraph& g, const StateSet& top);

/// Top class exists and is aperiodic.
bool is_tcr(const UpperTransitionOperator& t);

/// Closure B of the top class under "positive lower probability to enter":
/// B_0 = R, B_{m+1} = B_m plus every x whose row puts positive lower mass on
/// B_m. Empty when there is no top class.
StateSet absorbing_closure(const UpperTransitionOperator& t);

/// Top class exists and the absorbing closure covers every state.
bool is_tca(const UpperTransitionOperator& t);

/// Complement of the absorbing closure when a top class exists but does not
/// absorb: a nonempty A with 1_A <= T 1_A. Empty otherwise.
StateSet non_absorbing_set(const UpperTransitionOperator& t);

}  // namespace imc
