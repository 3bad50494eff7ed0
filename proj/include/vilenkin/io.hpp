#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vilenkin/step_function.hpp"

namespace vilenkin {

/// Interchange format shared by CLI subcommands:
///   { "radices": [..], "depth": N, "kind": "step"|"spectral", "values": [[re, im], ...] }
/// "kind" is optional on input.
struct FieldDocument {
  RadixSystem sys;
  ComplexVector<double> values;
  std::string kind;
};

nlohmann::json to_json(const StepFunction& f);
nlohmann::json to_json(const SpectralVector& c);

FieldDocument field_from_json(const nlohmann::json& doc);

/// Parses text; malformed JSON raises parse-error naming line and column.
FieldDocument parse_field(const std::string& text, const std::string& source = "<input>");
FieldDocument read_field_file(const std::string& path);

StepFunction as_step_function(FieldDocument doc);
SpectralVector as_spectral_vector(FieldDocument doc);

void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace vilenkin
