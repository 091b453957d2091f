#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace imc {

using StateIndex = std::size_t;

/// An ordered set of distinct, named states. States are addressed by dense
/// index internally and by label at every external boundary.
class StateSpace {
 public:
  /// Throws imc::Error on an empty list or duplicate labels.
  explicit StateSpace(std::vector<std::string> labels);

  /// Space with labels "s0", "s1", ...
  static StateSpace anonymous(std::size_t n);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& label(StateIndex i) const { return (*labels_).at(i); }
  std::span<const std::string> labels() const noexcept { return *labels_; }

  /// Throws UnknownState.
  StateIndex index_of(std::string_view label) const;
  bool contains(std::string_view label) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::unordered_map<std::string, StateIndex>> index_;
};

/// Sorted, duplicate-free set of state indices.
using StateSet = std::vector<StateIndex>;

/// Label list rendered as "{a,b}".
std::string format_state_set(const StateSpace& space, std::span<const StateIndex> set);

}  // namespace imc
