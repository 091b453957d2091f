#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "imc/ergodicity.hpp"
#include "imc/model_io.hpp"
#include "imc/oracle.hpp"

namespace imc::cli {

enum class OutputFormat { Text, Json };
enum class Bound { Upper, Lower };

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitSizeLimit = 3;

struct CommonOptions {
  OutputFormat format = OutputFormat::Text;
  LimitOptions limits;
};

struct ExpectArgs {
  std::string gamble;
  std::size_t k = 0;
  bool limit = false;
  Bound bound = Bound::Upper;
  std::optional<std::string> state;
};

struct AverageArgs {
  std::string gamble;
  std::size_t k = 0;
  bool limit = false;
  Bound bound = Bound::Upper;
  std::optional<std::string> state;
};

struct OracleArgs {
  std::string gamble;
  std::size_t k = 1;
  OracleMode mode = OracleMode::Instant;
  Bound bound = Bound::Upper;
};

// Each command writes its report to `out` and returns the exit code. Library
// errors propagate as exceptions; run() maps them to exit codes.
int cmd_check(const Model& model, const CommonOptions& opts, std::ostream& out);
int cmd_expect(const Model& model, const ExpectArgs& args, const CommonOptions& opts,
               std::ostream& out);
int cmd_average(const Model& model, const AverageArgs& args, const CommonOptions& opts,
                std::ostream& out);
int cmd_graph(const Model& model, std::ostream& out);
int cmd_oracle(const Model& model, const OracleArgs& args, const CommonOptions& opts,
               std::ostream& out);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace imc::cli
