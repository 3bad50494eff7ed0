#include "vilenkin/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace vilenkin {

namespace {

nlohmann::json field_json(const RadixSystem& sys, const ComplexVector<double>& values, const char* kind) {
  nlohmann::json doc;
  doc["radices"] = sys.radices();
  doc["depth"] = sys.depth();
  doc["kind"] = kind;
  auto array = nlohmann::json::array();
  for (const auto& v : values) array.push_back({v.real(), v.imag()});
  doc["values"] = std::move(array);
  return doc;
}

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1, line_start = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
      line_start = i + 1;
    } else {
      ++column;
    }
  }
  auto line_end = text.find('\n', line_start);
  if (line_end == std::string::npos) line_end = text.size();
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << text.substr(line_start, std::min<std::size_t>(line_end - line_start, 120));
  return out.str();
}

}  // namespace

nlohmann::json to_json(const StepFunction& f) { return field_json(f.sys(), f.values(), "step"); }
nlohmann::json to_json(const SpectralVector& c) { return field_json(c.sys(), c.values(), "spectral"); }

FieldDocument field_from_json(const nlohmann::json& doc) {
  try {
    const auto radices = doc.at("radices").get<std::vector<int>>();
    const int depth = doc.at("depth").get<int>();
    FieldDocument out{RadixSystem(radices, depth), {}, doc.value("kind", std::string{})};
    const auto& values = doc.at("values");
    if (!values.is_array() || values.size() != out.sys.size()) {
      throw Error(ErrorCode::parse_error, "\"values\" must hold M_N = " + std::to_string(out.sys.size()) + " entries");
    }
    out.values.resize(static_cast<Eigen::Index>(values.size()));
    for (std::size_t t = 0; t < values.size(); ++t) {
      const auto& v = values[t];
      if (v.is_number()) {
        out.values[static_cast<Eigen::Index>(t)] = {v.get<double>(), 0.0};
      } else if (v.is_array() && v.size() == 2) {
        out.values[static_cast<Eigen::Index>(t)] = {v[0].get<double>(), v[1].get<double>()};
      } else {
        throw Error(ErrorCode::parse_error, "value " + std::to_string(t) + " is not [re, im]");
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

FieldDocument parse_field(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, source + ": " + line_context(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  return field_from_json(doc);
}

FieldDocument read_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_field(buffer.str(), path);
}

StepFunction as_step_function(FieldDocument doc) {
  if (!doc.kind.empty() && doc.kind != "step") throw Error(ErrorCode::parse_error, "expected a step function, got " + doc.kind);
  return StepFunction(std::move(doc.sys), std::move(doc.values));
}

SpectralVector as_spectral_vector(FieldDocument doc) {
  if (!doc.kind.empty() && doc.kind != "spectral") {
    throw Error(ErrorCode::parse_error, "expected a spectral vector, got " + doc.kind);
  }
  return SpectralVector(std::move(doc.sys), std::move(doc.values));
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(1) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << doc.dump(1) << '\n';
}

}  // namespace vilenkin
