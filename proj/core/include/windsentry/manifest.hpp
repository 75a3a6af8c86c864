#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace windsentry {

// Run provenance written next to every command's outputs. File entries
// carry basenames only so reruns in different directories stay
// byte-identical; no wall-clock fields for the same reason.

struct FileDigest {
  std::string name;    // basename
  std::string fnv1a64; // 16 hex chars
};

struct RunManifest {
  std::string command;
  std::string version;
  std::uint64_t seed = 0;
  std::string config_json;  // effective config after overrides
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
};

// Digests the file's bytes; the stored name is the path's basename.
FileDigest digest_file(const std::string& path);

std::string manifest_json_text(const RunManifest& manifest);
void write_manifest(const std::string& path, const RunManifest& manifest);
RunManifest parse_manifest_json(const std::string& text);

}  // namespace windsentry
