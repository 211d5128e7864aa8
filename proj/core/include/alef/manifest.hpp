#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace alef {

// Reproduction record written next to every output file: the resolved
// argument vector plus input digests re-run a command bit-for-bit.
struct RunManifest {
  std::string tool;
  std::string version;
  std::string subcommand;
  std::vector<std::string> argv;  // fully resolved, defaults included
  std::vector<std::pair<std::string, std::string>> parameters;
  struct Input {
    std::string role;
    std::string path;
    std::string fnv1a64;  // hex digest of the file bytes
  };
  std::vector<Input> inputs;
  std::vector<std::string> outputs;
  double duration_seconds = 0.0;
};

// 64-bit FNV-1a over the file contents. Not cryptographic; it only
// detects that a re-run sees the same input bytes.
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

std::string to_hex(std::uint64_t value);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace alef
