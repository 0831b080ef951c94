#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glosshift {

inline constexpr const char* kVersion = "0.1.0";

std::string sha256_file(const std::filesystem::path& path);
std::string sha256_bytes(std::string_view data);

// Reproducibility record written next to a command's primary output as
// manifest.json (one per output directory; reruns overwrite it).
struct RunManifest {
  std::string command_line;
  std::string tool_version = kVersion;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256)
  std::vector<std::string> outputs;

  void add_input(const std::filesystem::path& path);
  // writes <dir>/manifest.json where dir holds primary_output
  void write_next_to(const std::filesystem::path& primary_output) const;
};

}  // namespace glosshift
