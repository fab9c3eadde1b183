// Copyright 2026 The gatelab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatelab/network_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gatelab {

namespace {

using Json = nlohmann::ordered_json;

void require_keys(const Json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const char* where) {
  if (!obj.is_object()) {
    throw NetworkParseError(std::string(where) + ": expected an object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw NetworkParseError(std::string(where) + ": unknown field '" + key + "'");
    }
  }
  for (const std::string& key : required) {
    if (!obj.contains(key)) {
      throw NetworkParseError(std::string(where) + ": missing field '" + key + "'");
    }
  }
}

}  // namespace

std::string network_to_json(const NetworkFile& file) {
  file.network.validate();
  Json doc;
  doc["version"] = 1;
  doc["mode_count"] = file.network.mode_count;
  Json qubits = Json::array();
  for (const auto& [zero, one] : file.network.qubits) {
    qubits.push_back(Json::array({zero, one}));
  }
  doc["layout"] = Json{{"qubits", qubits}};
  Json ancillas = Json::array();
  for (int mode : file.network.ancillas) {
    ancillas.push_back(Json{{"mode", mode}, {"input", "vacuum"}, {"postselect", "vacuum"}});
  }
  doc["ancillas"] = ancillas;
  Json elements = Json::array();
  for (const Element& e : file.network.elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      elements.push_back(Json{{"type", "beamsplitter"},
                              {"modes", Json::array({bs->mode_a, bs->mode_b})},
                              {"transmittivity", bs->transmittivity},
                              {"phase", bs->phase}});
    } else {
      const auto& ps = std::get<PhaseShift>(e);
      elements.push_back(Json{{"type", "phaseshift"}, {"mode", ps.mode}, {"angle", ps.angle}});
    }
  }
  doc["elements"] = elements;
  Json metadata;
  metadata["phi"] = file.metadata.phi;
  metadata["ps"] = file.metadata.ps;
  metadata["generator"] = file.metadata.generator;
  if (!file.metadata.note.empty()) {
    metadata["note"] = file.metadata.note;
  }
  doc["metadata"] = metadata;
  return doc.dump(2) + "\n";
}

NetworkFile network_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw NetworkParseError(std::string("invalid JSON: ") + err.what());
  }
  require_keys(doc, {"version", "mode_count", "layout", "ancillas", "elements", "metadata"}, {},
               "document");
  try {
    if (doc["version"].get<int>() != 1) {
      throw NetworkParseError("unsupported schema version");
    }
    NetworkFile file;
    file.network.mode_count = doc["mode_count"].get<int>();

    require_keys(doc["layout"], {"qubits"}, {}, "layout");
    for (const Json& pair : doc["layout"]["qubits"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw NetworkParseError("layout.qubits entries must be [zero_mode, one_mode]");
      }
      file.network.qubits.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    for (const Json& anc : doc["ancillas"]) {
      require_keys(anc, {"mode", "input", "postselect"}, {}, "ancilla");
      if (anc["input"].get<std::string>() != "vacuum" ||
          anc["postselect"].get<std::string>() != "vacuum") {
        throw NetworkParseError("ancillas must be vacuum in and vacuum post-selected");
      }
      file.network.ancillas.push_back(anc["mode"].get<int>());
    }
    for (const Json& el : doc["elements"]) {
      if (!el.is_object() || !el.contains("type")) {
        throw NetworkParseError("element without a type");
      }
      const std::string type = el["type"].get<std::string>();
      if (type == "beamsplitter") {
        require_keys(el, {"type", "modes", "transmittivity", "phase"}, {}, "beamsplitter");
        const Json& modes = el["modes"];
        if (!modes.is_array() || modes.size() != 2) {
          throw NetworkParseError("beamsplitter.modes must be [a, b]");
        }
        file.network.elements.push_back(BeamSplitter{modes[0].get<int>(), modes[1].get<int>(),
                                                     el["transmittivity"].get<double>(),
                                                     el["phase"].get<double>()});
      } else if (type == "phaseshift") {
        require_keys(el, {"type", "mode", "angle"}, {}, "phaseshift");
        file.network.elements.push_back(
            PhaseShift{el["mode"].get<int>(), el["angle"].get<double>()});
      } else {
        throw NetworkParseError("unknown element type '" + type + "'");
      }
    }
    require_keys(doc["metadata"], {"phi", "ps", "generator"}, {"note"}, "metadata");
    file.metadata.phi = doc["metadata"]["phi"].get<double>();
    file.metadata.ps = doc["metadata"]["ps"].get<double>();
    file.metadata.generator = doc["metadata"]["generator"].get<std::string>();
    if (doc["metadata"].contains("note")) {
      file.metadata.note = doc["metadata"]["note"].get<std::string>();
    }

    file.network.validate();
    return file;
  } catch (const Json::exception& err) {
    throw NetworkParseError(std::string("schema error: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw NetworkParseError(std::string("invalid network: ") + err.what());
  }
}

void save_network(const NetworkFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << network_to_json(file);
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

NetworkFile load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw NetworkParseError("cannot open: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return network_from_json(buffer.str());
}

}  // namespace gatelab
