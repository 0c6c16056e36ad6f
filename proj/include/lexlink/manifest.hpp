// Copyright 2026 The lexlink Authors
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

#ifndef LEXLINK_MANIFEST_HPP
#define LEXLINK_MANIFEST_HPP

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexlink/common.hpp"

namespace lexlink {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

struct ManifestInput {
  std::string role;
  std::string path;
  std::string sha256;
};

// Record of one CLI run: what was read (with digests), how it was
// configured, and what was written.
struct RunManifest {
  std::string command;
  std::vector<ManifestInput> inputs;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> outputs;
  double elapsed_seconds = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = nlohmann::json::array();
    for (const auto& in : inputs) {
      j["inputs"].push_back(
          {{"role", in.role}, {"path", in.path}, {"sha256", in.sha256}});
    }
    j["config"] = config;
    j["outputs"] = outputs;
    j["elapsed_seconds"] = elapsed_seconds;
    return j;
  }

  static RunManifest from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    for (const auto& in : j.at("inputs")) {
      m.inputs.push_back({in.at("role").get<std::string>(),
                          in.at("path").get<std::string>(),
                          in.at("sha256").get<std::string>()});
    }
    m.config = j.value("config", nlohmann::json::object());
    m.outputs = j.value("outputs", std::vector<std::string>{});
    m.elapsed_seconds = j.value("elapsed_seconds", 0.0);
    return m;
  }

  // Paths whose current content no longer matches the recorded digest
  // (unreadable files included).
  std::vector<std::string> stale_inputs() const {
    std::vector<std::string> stale;
    for (const auto& in : inputs) {
      try {
        if (sha256_hex(read_file(in.path)) != in.sha256) stale.push_back(in.path);
      } catch (const IoError&) {
        stale.push_back(in.path);
      }
    }
    return stale;
  }
};

}  // namespace lexlink

#endif  // LEXLINK_MANIFEST_HPP
