#pragma once

// JSON interchange formats. Keys are emitted in a fixed order so output is
// byte-stable:
//   pile configuration  {"n":8,"piles":[[6,4,1],[5,2],[8,7,3]]}
//   stable pair         {"R":<piles>,"S":<piles>}
//   shadow diagram      {"lines":[[[x,y],...],...]}
//   occurrence          {"positions":[1,3,4]}
//   count report        {"n":5,"label":"...","value":52}

#include <string>

#include <json.hpp>

#include "patience/core.hpp"
#include "patience/enumerate.hpp"
#include "patience/extended.hpp"
#include "patience/patterns.hpp"
#include "patience/shadow.hpp"

namespace patience::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const PileConfig& config) {
  Json j;
  j["n"] = config.n();
  j["piles"] = config.raw();
  return j;
}

inline Json to_json(const StablePair& pair) {
  Json j;
  j["R"] = to_json(pair.insertion);
  j["S"] = to_json(pair.recording);
  return j;
}

inline Json to_json(const ShadowDiagram& diagram) {
  Json lines = Json::array();
  for (const auto& line : diagram.lines) {
    Json corners = Json::array();
    for (const auto& c : line.corners) corners.push_back({c.x, c.y});
    lines.push_back(std::move(corners));
  }
  Json j;
  j["lines"] = std::move(lines);
  return j;
}

inline Json to_json(const Occurrence& occurrence) {
  Json j;
  j["positions"] = occurrence.positions;
  return j;
}

inline Json to_json(const CountReport& report) {
  Json j;
  j["n"] = report.n;
  j["label"] = report.label;
  j["value"] = report.value;
  return j;
}

/// Malformed structure raises ParseError; a well-formed document describing
/// an invalid configuration raises PileConfigError.
inline PileConfig pile_config_from_json(const Json& j) {
  RawPiles raw;
  std::size_t declared_n = 0;
  try {
    if (!j.is_object() || !j.contains("piles")) throw ParseError("pile configuration needs a \"piles\" array");
    raw = j.at("piles").get<RawPiles>();
    if (j.contains("n")) declared_n = j.at("n").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad pile configuration JSON: ") + e.what());
  }
  auto config = validate_pile_config(raw);
  if (j.contains("n") && declared_n != config.n()) {
    throw DomainError("declared n = " + std::to_string(declared_n) + " but piles hold " +
                      std::to_string(config.n()) + " cards");
  }
  return config;
}

inline StablePair stable_pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("R") || !j.contains("S")) {
    throw ParseError("stable pair JSON needs \"R\" and \"S\"");
  }
  return {pile_config_from_json(j.at("R")), pile_config_from_json(j.at("S"))};
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace patience::io
