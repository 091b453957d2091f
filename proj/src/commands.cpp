#include "imc/commands.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "imc/accessibility.hpp"
#include "imc/error.hpp"
#include "imc/format.hpp"
#include "json.hpp"

namespace imc::cli {

namespace {

using Json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bound_name(Bound b) { return b == Bound::Upper ? "upper" : "lower"; }

std::string classes_text(const StateSpace& space, const std::vector<StateSet>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += ',';
    s += format_state_set(space, classes[i]);
  }
  return s;
}

Json labels_json(const StateSpace& space, const StateSet& set) {
  Json arr = Json::array();
  for (StateIndex x : set) arr.push_back(space.label(x));
  return arr;
}

Json report_json(const StateSpace& space, const ErgodicityReport& r) {
  Json j;
  j["has_top_class"] = r.has_top_class;
  j["top_class"] = r.top_class ? labels_json(space, *r.top_class) : Json(nullptr);
  j["top_class_period"] = r.top_class_period ? Json(*r.top_class_period) : Json(nullptr);
  Json maximal = Json::array();
  for (const auto& c : r.maximal_classes) maximal.push_back(labels_json(space, c));
  j["maximal_classes"] = maximal;
  j["tcr"] = r.tcr;
  j["tca"] = r.tca;
  j["ergodic"] = r.ergodic;
  j["weakly_ergodic"] = r.weakly_ergodic;
  return j;
}

Json limit_json(const LimitResult& r) {
  Json j;
  j["value"] = report_round(r.value);
  j["error_bound"] = report_round(r.error_bound);
  j["iterations"] = r.iterations;
  j["method"] = limit_method_name(r.method);
  j["budget_exceeded"] = r.budget_exceeded;
  if (r.lock) {
    j["period"] = r.lock->period;
    j["lock_k"] = r.lock->k;
  }
  return j;
}

void limit_text(std::ostream& out, const LimitResult& r, const std::string& indent = "") {
  out << indent << "value: " << format_number(r.value) << '\n'
      << indent << "error bound: " << format_number(r.error_bound) << '\n'
      << indent << "method: " << limit_method_name(r.method) << '\n'
      << indent << "iterations: " << r.iterations << '\n';
  if (r.lock) out << indent << "period: " << r.lock->period << '\n';
  if (r.budget_exceeded) out << indent << "budget exceeded: yes\n";
}

// Per-state values, optionally narrowed to one state.
void values_out(std::ostream& out, const CommonOptions& opts, const StateSpace& space,
                const Gamble& values, const std::optional<std::string>& state, Json header) {
  std::vector<StateIndex> which;
  if (state) {
    which.push_back(space.index_of(*state));
  } else {
    for (StateIndex x = 0; x < space.size(); ++x) which.push_back(x);
  }
  if (opts.format == OutputFormat::Json) {
    Json vals = Json::object();
    for (StateIndex x : which) vals[space.label(x)] = report_round(values[x]);
    header["values"] = vals;
    out << header.dump(2) << '\n';
    return;
  }
  for (StateIndex x : which) out << space.label(x) << ": " << format_number(values[x]) << '\n';
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

int cmd_check(const Model& model, const CommonOptions& opts, std::ostream& out) {
  const auto& space = model.op.space();
  const auto report = classify(model.op);
  const auto d = decompose(build_upper_graph(model.op));
  if (opts.format == OutputFormat::Json) {
    out << report_json(space, report).dump(2) << '\n';
    return kExitOk;
  }
  if (report.has_top_class) {
    out << "weakly ergodic: " << yes_no(report.weakly_ergodic)
        << "; ergodic: " << yes_no(report.ergodic)
        << "; top class: " << format_state_set(space, *report.top_class)
        << "; period: " << *report.top_class_period << '\n';
  } else {
    out << "no top class; maximal classes: " << classes_text(space, report.maximal_classes)
        << "; weakly ergodic: " << yes_no(report.weakly_ergodic) << '\n';
  }
  out << "communication classes: " << classes_text(space, d.classes) << '\n'
      << "maximal classes: " << classes_text(space, report.maximal_classes) << '\n'
      << "top class regular (TCR): " << yes_no(report.tcr) << '\n'
      << "top class absorbing (TCA): " << yes_no(report.tca) << '\n'
      << "report: " << report_json(space, report).dump() << '\n';
  return kExitOk;
}

int cmd_expect(const Model& model, const ExpectArgs& args, const CommonOptions& opts,
               std::ostream& out) {
  const auto& space = model.op.space();
  const Gamble& f = model.gamble(args.gamble);
  if (args.state) space.index_of(*args.state);

  if (args.limit) {
    const auto r = args.bound == Bound::Upper ? limit_upper_expectation(model.op, f, opts.limits)
                                              : limit_lower_expectation(model.op, f, opts.limits);
    if (const auto* ne = std::get_if<NotErgodic>(&r)) {
      if (opts.format == OutputFormat::Json) {
        Json j{{"gamble", args.gamble}, {"bound", bound_name(args.bound)}, {"ergodic", false}};
        j["report"] = report_json(space, ne->report);
        out << j.dump(2) << '\n';
      } else {
        out << "not ergodic\n";
      }
      return kExitOk;
    }
    const auto& lr = std::get<LimitResult>(r);
    if (opts.format == OutputFormat::Json) {
      Json j{{"gamble", args.gamble}, {"bound", bound_name(args.bound)}, {"ergodic", true}};
      j["limit"] = limit_json(lr);
      out << j.dump(2) << '\n';
    } else {
      limit_text(out, lr);
    }
    return kExitOk;
  }

  const Gamble v = args.bound == Bound::Upper ? iterate_upper(model.op, f, args.k)
                                              : iterate_lower(model.op, f, args.k);
  values_out(out, opts, space, v, args.state,
             Json{{"gamble", args.gamble}, {"bound", bound_name(args.bound)}, {"k", args.k}});
  return kExitOk;
}

int cmd_average(const Model& model, const AverageArgs& args, const CommonOptions& opts,
                std::ostream& out) {
  const auto& space = model.op.space();
  const Gamble& f = model.gamble(args.gamble);
  if (args.state) space.index_of(*args.state);

  if (!args.limit) {
    const Gamble v = args.bound == Bound::Upper ? upper_expected_average(model.op, f, args.k)
                                                : lower_expected_average(model.op, f, args.k);
    values_out(out, opts, space, v, args.state,
               Json{{"gamble", args.gamble}, {"bound", bound_name(args.bound)}, {"k", args.k}});
    return kExitOk;
  }

  const auto r = args.bound == Bound::Upper ? limit_upper_average(model.op, f, opts.limits)
                                            : limit_lower_average(model.op, f, opts.limits);
  if (const auto* lr = std::get_if<LimitResult>(&r)) {
    if (opts.format == OutputFormat::Json) {
      Json j{{"gamble", args.gamble}, {"bound", bound_name(args.bound)}, {"weakly_ergodic", true}};
      j["limit"] = limit_json(*lr);
      out << j.dump(2) << '\n';
    } else {
      limit_text(out, *lr);
    }
    return kExitOk;
  }

  // Not weakly ergodic: report the per-class limits instead.
  const auto& report = std::get<NotWeaklyErgodic>(r).report;
  const Gamble g = args.bound == Bound::Upper ? f : -f;
  const double sign = args.bound == Bound::Upper ? 1.0 : -1.0;
  Json classes = Json::array();
  if (opts.format == OutputFormat::Text) out << "not weakly ergodic\n";
  for (const auto& cls : report.maximal_classes) {
    auto cr = class_average_limit(model.op, g, cls, opts.limits);
    cr.value *= sign;
    if (opts.format == OutputFormat::Json) {
      Json c = limit_json(cr);
      c["class"] = labels_json(space, cls);
      classes.push_back(c);
    } else {
      out << "class " << format_state_set(space, cls) << ":\n";
      limit_text(out, cr, "  ");
    }
  }
  if (opts.format == OutputFormat::Json) {
    Json j{{"gamble", args.gamble}, {"bound", bound_name(args.bound)}, {"weakly_ergodic", false}};
    j["report"] = report_json(space, report);
    j["class_limits"] = classes;
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_graph(const Model& model, std::ostream& out) {
  const auto g = build_upper_graph(model.op);
  const auto d = decompose(g);
  const auto& space = model.op.space();
  std::vector<bool> clustered(space.size(), false);

  out << "digraph accessibility {\n";
  for (std::size_t i = 0; i < d.maximal.size(); ++i) {
    const std::size_t c = d.maximal[i];
    const bool top = d.top && *d.top == c;
    out << "  subgraph cluster_" << i << " {\n"
        << "    label=\"" << (top ? "top class" : "maximal class") << "\";\n";
    for (StateIndex x : d.classes[c]) {
      out << "    " << dot_id(space.label(x)) << ";\n";
      clustered[x] = true;
    }
    out << "  }\n";
  }
  for (StateIndex x = 0; x < space.size(); ++x) {
    if (!clustered[x]) out << "  " << dot_id(space.label(x)) << ";\n";
  }
  for (StateIndex x = 0; x < space.size(); ++x) {
    for (StateIndex y = 0; y < space.size(); ++y) {
      if (g.edge(x, y)) out << "  " << dot_id(space.label(x)) << " -> " << dot_id(space.label(y)) << ";\n";
    }
  }
  out << "}\n";
  return kExitOk;
}

int cmd_oracle(const Model& model, const OracleArgs& args, const CommonOptions& opts,
               std::ostream& out) {
  const auto& space = model.op.space();
  const Gamble& f = model.gamble(args.gamble);
  const bool upper = args.bound == Bound::Upper;
  const Gamble brute = upper ? brute_force_upper(model.op, f, args.k, args.mode)
                             : brute_force_lower(model.op, f, args.k, args.mode);
  Gamble recursion = Gamble::zero(f.size());
  if (args.mode == OracleMode::Instant) {
    recursion = upper ? iterate_upper(model.op, f, args.k) : iterate_lower(model.op, f, args.k);
  } else {
    recursion = upper ? upper_expected_average(model.op, f, args.k)
                      : lower_expected_average(model.op, f, args.k);
  }
  const double gap = sup_norm(brute - recursion);
  const char* mode = args.mode == OracleMode::Instant ? "instant" : "average";

  if (opts.format == OutputFormat::Json) {
    Json rows = Json::object();
    for (StateIndex x = 0; x < space.size(); ++x) {
      rows[space.label(x)] = {{"brute_force", report_round(brute[x])},
                              {"recursion", report_round(recursion[x])}};
    }
    Json j{{"gamble", args.gamble}, {"bound", bound_name(args.bound)}, {"k", args.k}, {"mode", mode}};
    j["values"] = rows;
    j["max_gap"] = report_round(gap);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "state: brute-force recursion\n";
  for (StateIndex x = 0; x < space.size(); ++x) {
    out << space.label(x) << ": " << format_number(brute[x]) << ' ' << format_number(recursion[x])
        << '\n';
  }
  out << "max gap: " << format_number(gap) << '\n';
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inference and ergodicity analysis for imprecise Markov chains", "imc"};
  app.require_subcommand(1);

  std::string model_path;
  std::string format = "text";
  CommonOptions common;
  app.add_option("--model", model_path, "Model JSON file")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", common.limits.tolerance, "Limit tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iter", common.limits.max_iterations, "Iteration budget for limits");

  auto* check = app.add_subcommand("check", "Classify ergodicity and weak ergodicity");

  ExpectArgs expect;
  std::string expect_bound = "upper";
  auto* expect_cmd = app.add_subcommand("expect", "Upper/lower expectation of f(X_k)");
  expect_cmd->add_option("--gamble,-g", expect.gamble, "Gamble name")->required();
  expect_cmd->add_option("-k", expect.k, "Time step");
  expect_cmd->add_flag("--limit", expect.limit, "Limit as k grows (ergodic models)");
  expect_cmd->add_option("--bound", expect_bound)->check(CLI::IsMember({"upper", "lower"}));
  expect_cmd->add_option("--state", expect.state, "Report one initial state");

  AverageArgs average;
  std::string average_bound = "upper";
  auto* average_cmd = app.add_subcommand("average", "Upper/lower expected time average");
  average_cmd->add_option("--gamble,-g", average.gamble, "Gamble name")->required();
  auto* k_opt = average_cmd->add_option("-k", average.k, "Time step");
  average_cmd->add_flag("--limit", average.limit, "Limit as k grows")->excludes(k_opt);
  average_cmd->add_option("--bound", average_bound)->check(CLI::IsMember({"upper", "lower"}));
  average_cmd->add_option("--state", average.state, "Report one initial state");

  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "Upper accessibility graph as DOT");
  graph_cmd->add_flag("--dot", "Emit Graphviz DOT (the only format)");
  graph_cmd->add_option("--out", graph_out, "Write to a file instead of stdout");

  OracleArgs oracle;
  std::string oracle_mode = "instant";
  std::string oracle_bound = "upper";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force check against the recursion");
  oracle_cmd->add_option("--gamble,-g", oracle.gamble, "Gamble name")->required();
  oracle_cmd->add_option("-k", oracle.k, "Horizon");
  oracle_cmd->add_option("--mode", oracle_mode)->check(CLI::IsMember({"instant", "average"}));
  oracle_cmd->add_option("--bound", oracle_bound)->check(CLI::IsMember({"upper", "lower"}));

  for (auto* sub : {check, expect_cmd, average_cmd, graph_cmd, oracle_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  common.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  expect.bound = expect_bound == "lower" ? Bound::Lower : Bound::Upper;
  average.bound = average_bound == "lower" ? Bound::Lower : Bound::Upper;
  oracle.bound = oracle_bound == "lower" ? Bound::Lower : Bound::Upper;
  oracle.mode = oracle_mode == "average" ? OracleMode::Average : OracleMode::Instant;

  try {
    const Model model = load_model(model_path);
    if (check->parsed()) return cmd_check(model, common, out);
    if (expect_cmd->parsed()) return cmd_expect(model, expect, common, out);
    if (average_cmd->parsed()) return cmd_average(model, average, common, out);
    if (oracle_cmd->parsed()) return cmd_oracle(model, oracle, common, out);
    if (graph_out.empty()) return cmd_graph(model, out);
    std::ofstream file(graph_out);
    if (!file) {
      err << "error: cannot write '" << graph_out << "'\n";
      return kExitInvalid;
    }
    return cmd_graph(model, file);
  } catch (const SizeLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace imc::cli
