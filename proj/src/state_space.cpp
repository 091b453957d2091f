#include "imc/state_space.hpp"

#include "imc/error.hpp"

namespace imc {

StateSpace::StateSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw Error("state space must contain at least one state");
  auto index = std::make_shared<std::unordered_map<std::string, StateIndex>>();
  for (StateIndex i = 0; i < labels.size(); ++i) {
    if (!index->emplace(labels[i], i).second) {
      throw Error("duplicate state label '" + labels[i] + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  index_ = std::move(index);
}

StateSpace StateSpace::anonymous(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  return StateSpace(std::move(labels));
}

StateIndex StateSpace::index_of(std::string_view label) const {
  auto it = index_->find(std::string(label));
  if (it == index_->end()) throw UnknownState("unknown state '" + std::string(label) + "'");
  return it->second;
}

bool StateSpace::contains(std::string_view label) const {
  return index_->contains(std::string(label));
}

std::string format_state_set(const StateSpace& space, std::span<const StateIndex> set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += space.label(set[i]);
  }
  out += '}';
  return out;
}

}  // namespace imc
