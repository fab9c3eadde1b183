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

#pragma once

#include <stdexcept>
#include <string>

#include "gatelab/network.hpp"

namespace gatelab {

struct NetworkMetadata {
  double phi = 0.0;
  double ps = 1.0;
  std::string generator;
  std::string note;  // optional; omitted from JSON when empty
};

struct NetworkFile {
  NetworkDescription network;
  NetworkMetadata metadata;
};

class NetworkParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes to the versioned JSON document (version 1). Numbers use the
/// shortest round-trip decimal form, so write/read/write is byte-stable.
std::string network_to_json(const NetworkFile& file);

/// Strict parse: schema version must be 1 and unknown fields are rejected.
/// Throws NetworkParseError.
NetworkFile network_from_json(const std::string& text);

void save_network(const NetworkFile& file, const std::string& path);
NetworkFile load_network(const std::string& path);

}  // namespace gatelab
