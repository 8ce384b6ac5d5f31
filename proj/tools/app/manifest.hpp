#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace frontier::app {

inline constexpr const char* kManifestFile = "manifest.json";

/// Provenance of one CLI run. Output files reference it by name. Timestamps
/// and runtimes live only here, so every other output is reproducible byte
/// for byte.
struct RunManifest {
  std::string command;
  /// Arguments after the program name, exactly as given.
  std::vector<std::string> args;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string version;
  std::string started_at;
  std::string finished_at;
  double runtime_seconds = 0.0;
  std::vector<std::string> outputs;
  std::vector<std::string> notes;
};

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

void write_manifest(const std::string& path, const RunManifest& m);
RunManifest read_manifest(const std::string& path);

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

const char* software_version() noexcept;

}  // namespace frontier::app
