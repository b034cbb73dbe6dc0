#include "waring/ring_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace waring {

namespace {

std::vector<i64> int_array(const nlohmann::json& j, const char* field) {
  if (!j.is_array())
    throw ValidationError(std::string("field `") + field +
                          "` must be an array of integers");
  std::vector<i64> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ValidationError(std::string("field `") + field +
                            "` must contain integers only");
    out.push_back(v.get<i64>());
  }
  return out;
}

}  // namespace

FiniteRingSpec parse_ring_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("ring spec parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("ring spec must be an object");
  for (const char* field : {"moduli", "mult", "one"})
    if (!doc.contains(field))
      throw ValidationError(std::string("ring spec missing field `") + field +
                            "`");
  FiniteRingSpec spec;
  spec.moduli = int_array(doc["moduli"], "moduli");
  spec.one = int_array(doc["one"], "one");
  const auto& mult = doc["mult"];
  if (!mult.is_array())
    throw ValidationError("field `mult` must be an r x r array");
  for (const auto& row : mult) {
    if (!row.is_array())
      throw ValidationError("field `mult` must be an r x r array");
    std::vector<std::vector<i64>> specs_row;
    for (const auto& entry : row) specs_row.push_back(int_array(entry, "mult"));
    spec.mult.push_back(std::move(specs_row));
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      throw ValidationError("field `label` must be a string");
    spec.label = doc["label"].get<std::string>();
  }
  return spec;
}

FiniteRingSpec load_ring_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open ring spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_spec(buf.str());
}

std::string serialize_ring_spec(const FiniteRingSpec& spec) {
  nlohmann::json doc;
  doc["moduli"] = spec.moduli;
  doc["mult"] = spec.mult;
  doc["one"] = spec.one;
  if (!spec.label.empty()) doc["label"] = spec.label;
  return doc.dump();
}

Ring make_from_spec(const std::string& text, const RingOptions& opt) {
  return Ring(parse_ring_spec(text), opt);
}

}  // namespace waring
