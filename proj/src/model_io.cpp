#include "imc/model_io.hpp"

#include <fstream>
#include <sstream>

#include "imc/error.hpp"
#include "imc/format.hpp"
#include "json.hpp"

namespace imc {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ParseError("field " + path + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path + "/" + key, "missing");
  return *it;
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) field_error(path + "/" + std::to_string(i), "expected a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

std::vector<double> sized_numbers(const Json& j, const std::string& path, std::size_t n) {
  auto v = numbers(j, path);
  if (v.size() != n) {
    field_error(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  }
  return v;
}

CredalRow parse_row(const Json& j, const std::string& path, std::size_t n) {
  if (!j.is_object()) field_error(path, "expected an object");
  const Json& type = require(j, "type", path);
  if (!type.is_string()) field_error(path + "/type", "expected a string");
  const auto tag = type.get<std::string>();
  if (tag == "precise") {
    return CredalRow::precise(sized_numbers(require(j, "mass", path), path + "/mass", n));
  }
  if (tag == "vertices") {
    const Json& vs = require(j, "vertices", path);
    if (!vs.is_array()) field_error(path + "/vertices", "expected an array of mass functions");
    std::vector<MassFunction> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out.push_back(sized_numbers(vs[i], path + "/vertices/" + std::to_string(i), n));
    }
    return CredalRow::vertices(std::move(out));
  }
  if (tag == "intervals") {
    return CredalRow::intervals(sized_numbers(require(j, "lower", path), path + "/lower", n),
                                sized_numbers(require(j, "upper", path), path + "/upper", n));
  }
  if (tag == "vacuous") return CredalRow::vacuous();
  field_error(path + "/type", "unknown row type '" + tag + "'");
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

void write_numbers(std::ostream& os, const std::vector<double>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_exact(v[i]);
  os << ']';
}

}  // namespace

const Gamble& Model::gamble(std::string_view name) const {
  for (const auto& [n, g] : gambles) {
    if (n == name) return g;
  }
  throw UnknownGamble("unknown gamble '" + std::string(name) + "'");
}

Model parse_model(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    // what() reads "[json.exception.parse_error.101] parse error at line L, column C: ..."
    std::string msg = e.what();
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(msg);
  }
  if (!doc.is_object()) field_error("/", "expected a JSON object");

  const Json& version = require(doc, "schema_version", "");
  if (!version.is_number_integer() || version.get<int>() != kModelSchemaVersion) {
    field_error("/schema_version", "unsupported schema version (expected " +
                                       std::to_string(kModelSchemaVersion) + ")");
  }

  const Json& states = require(doc, "states", "");
  if (!states.is_array() || states.empty()) field_error("/states", "expected a nonempty array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!states[i].is_string()) field_error("/states/" + std::to_string(i), "expected a string");
    labels.push_back(states[i].get<std::string>());
  }
  StateSpace space = [&] {
    try {
      return StateSpace(labels);
    } catch (const Error& e) {
      field_error("/states", e.what());
    }
  }();
  const std::size_t n = space.size();

  const Json& rows = require(doc, "rows", "");
  if (!rows.is_object()) field_error("/rows", "expected an object keyed by state label");
  for (const auto& [label, _] : rows.items()) {
    if (!space.contains(label)) field_error("/rows/" + label, "row for undeclared state");
  }
  std::vector<CredalRow> parsed;
  for (const auto& label : labels) {
    auto it = rows.find(label);
    if (it == rows.end()) field_error("/rows/" + label, "missing row");
    parsed.push_back(parse_row(*it, "/rows/" + label, n));
  }

  Model model{UpperTransitionOperator(std::move(space), std::move(parsed)), {}};

  if (auto g = doc.find("gambles"); g != doc.end()) {
    if (!g->is_object()) field_error("/gambles", "expected an object keyed by gamble name");
    for (const auto& [name, values] : g->items()) {
      const std::string path = "/gambles/" + name;
      auto v = sized_numbers(values, path, n);
      try {
        model.gambles.emplace_back(name, Gamble(std::move(v)));
      } catch (const Error& e) {
        field_error(path, e.what());
      }
    }
  }
  return model;
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string serialize_model(const Model& model) {
  const auto& space = model.op.space();
  std::ostringstream os;
  os << "{\n  \"schema_version\": " << kModelSchemaVersion << ",\n  \"states\": [";
  for (std::size_t i = 0; i < space.size(); ++i) os << (i ? ", " : "") << quoted(space.label(i));
  os << "],\n  \"rows\": {";
  for (StateIndex x = 0; x < space.size(); ++x) {
    os << (x ? ",\n" : "\n") << "    " << quoted(space.label(x)) << ": {\"type\": ";
    const auto& v = model.op.row(x).variant();
    if (const auto* p = std::get_if<PreciseRow>(&v)) {
      os << "\"precise\", \"mass\": ";
      write_numbers(os, p->mass);
    } else if (const auto* vl = std::get_if<VertexListRow>(&v)) {
      os << "\"vertices\", \"vertices\": [";
      for (std::size_t i = 0; i < vl->vertices.size(); ++i) {
        if (i) os << ", ";
        write_numbers(os, vl->vertices[i]);
      }
      os << ']';
    } else if (const auto* iv = std::get_if<IntervalRow>(&v)) {
      os << "\"intervals\", \"lower\": ";
      write_numbers(os, iv->lower);
      os << ", \"upper\": ";
      write_numbers(os, iv->upper);
    } else {
      os << "\"vacuous\"";
    }
    os << '}';
  }
  os << "\n  },\n  \"gambles\": {";
  for (std::size_t i = 0; i < model.gambles.size(); ++i) {
    const auto& [name, g] = model.gambles[i];
    os << (i ? ",\n" : "\n") << "    " << quoted(name) << ": ";
    write_numbers(os, std::vector<double>(g.values().begin(), g.values().end()));
  }
  os << (model.gambles.empty() ? "}\n}\n" : "\n  }\n}\n");
  return os.str();
}

void save_model(const Model& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file '" + path.string() + "'");
  out << serialize_model(model);
}

}  // namespace imc
