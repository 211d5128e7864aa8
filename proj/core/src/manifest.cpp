#include "alef/manifest.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "alef/error.hpp"

namespace alef {

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out = "0x";
  for (int shift = 60; shift >= 0; shift -= 4) {
    out.push_back(digits[(value >> shift) & 0xf]);
  }
  return out;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["tool"] = manifest.tool;
  j["version"] = manifest.version;
  j["subcommand"] = manifest.subcommand;
  j["argv"] = manifest.argv;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : manifest.parameters) params[key] = value;
  j["parameters"] = params;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& input : manifest.inputs) {
    j["inputs"].push_back({{"role", input.role},
                           {"path", input.path},
                           {"fnv1a64", input.fnv1a64}});
  }
  j["outputs"] = manifest.outputs;
  j["duration_seconds"] = manifest.duration_seconds;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write error on " + path.string());
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  RunManifest m;
  m.tool = j.value("tool", "");
  m.version = j.value("version", "");
  m.subcommand = j.value("subcommand", "");
  for (const auto& arg : j.value("argv", nlohmann::json::array())) {
    m.argv.push_back(arg.get<std::string>());
  }
  if (j.contains("parameters")) {
    for (const auto& [key, value] : j["parameters"].items()) {
      m.parameters.emplace_back(key, value.get<std::string>());
    }
  }
  for (const auto& input : j.value("inputs", nlohmann::json::array())) {
    m.inputs.push_back(RunManifest::Input{input.value("role", ""),
                                          input.value("path", ""),
                                          input.value("fnv1a64", "")});
  }
  for (const auto& output : j.value("outputs", nlohmann::json::array())) {
    m.outputs.push_back(output.get<std::string>());
  }
  m.duration_seconds = j.value("duration_seconds", 0.0);
  return m;
}

}  // namespace alef
