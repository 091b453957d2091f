#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imc/gamble.hpp"
#include "imc/transition_operator.hpp"

namespace imc {

inline constexpr int kModelSchemaVersion = 1;

/// An operator together with the named gambles declared next to it.
struct Model {
  UpperTransitionOperator op;
  std::vector<std::pair<std::string, Gamble>> gambles;

  /// Throws UnknownGamble.
  const Gamble& gamble(std::string_view name) const;
};

/// Parses a model document. Throws ParseError (syntax, with line and column;
/// schema, with the offending field path) or InvalidRow (with the state label).
Model parse_model(std::string_view json_text);

Model load_model(const std::filesystem::path& path);

/// Serializes with 17 significant digits per number, which round-trips every
/// double exactly. Output is deterministic.
std::string serialize_model(const Model& model);

void save_model(const Model& model, const std::filesystem::path& path);

}  // namespace imc
