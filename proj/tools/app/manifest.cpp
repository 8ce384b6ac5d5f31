#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "frontier/error.hpp"

#ifndef FRONTIER_VERSION
#define FRONTIER_VERSION "0.0.0"
#endif

namespace frontier::app {

const char* software_version() noexcept { return FRONTIER_VERSION; }

nlohmann::json to_json(const RunManifest& m) {
  return {{"command", m.command},   {"args", m.args},
          {"config", m.config},     {"seed", m.seed},
          {"version", m.version},   {"started_at", m.started_at},
          {"finished_at", m.finished_at}, {"runtime_seconds", m.runtime_seconds},
          {"outputs", m.outputs},   {"notes", m.notes}};
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  try {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.args = j.at("args").get<std::vector<std::string>>();
    m.config = j.value("config", nlohmann::json::object());
    m.seed = j.value("seed", std::uint64_t{0});
    m.version = j.value("version", std::string());
    m.started_at = j.value("started_at", std::string());
    m.finished_at = j.value("finished_at", std::string());
    m.runtime_seconds = j.value("runtime_seconds", 0.0);
    m.outputs = j.value("outputs", std::vector<std::string>{});
    m.notes = j.value("notes", std::vector<std::string>{});
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("manifest: ") + e.what());
  }
}

void write_manifest(const std::string& path, const RunManifest& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << to_json(m).dump(2) << '\n';
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open manifest '" + path + "'");
  try {
    return manifest_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::MalformedInput, std::string("manifest: ") + e.what());
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace frontier::app
