#include "windsentry/manifest.hpp"

#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "windsentry/csvutil.hpp"
#include "windsentry/digest.hpp"

namespace windsentry {

namespace {

using nlohmann::json;

json files_json(const std::vector<FileDigest>& files) {
  json arr = json::array();
  for (const auto& f : files) {
    arr.push_back({{"name", f.name}, {"fnv1a64", f.fnv1a64}});
  }
  return arr;
}

std::vector<FileDigest> parse_files(const json& arr) {
  std::vector<FileDigest> files;
  for (const auto& jf : arr) {
    files.push_back({jf.at("name").get<std::string>(),
                     jf.at("fnv1a64").get<std::string>()});
  }
  return files;
}

}  // namespace

FileDigest digest_file(const std::string& path) {
  const std::string data = read_text_file(path);
  return {std::filesystem::path(path).filename().string(),
          fnv1a64_hex(data)};
}

std::string manifest_json_text(const RunManifest& manifest) {
  json j = {
      {"command", manifest.command},
      {"version", manifest.version},
      {"seed", manifest.seed},
      {"config", json::parse(manifest.config_json)},
      {"inputs", files_json(manifest.inputs)},
      {"outputs", files_json(manifest.outputs)},
  };
  return j.dump(2) + "\n";
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
  write_text_file(path, manifest_json_text(manifest));
}

RunManifest parse_manifest_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.version = j.at("version").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.config_json = j.at("config").dump(2);
    m.inputs = parse_files(j.at("inputs"));
    m.outputs = parse_files(j.at("outputs"));
    return m;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed manifest: ") + e.what());
  }
}

}  // namespace windsentry
