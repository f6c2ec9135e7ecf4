#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace windcorr {

inline constexpr const char* kToolVersion = "windcorr 0.1.0";

// FNV-1a 64-bit content hash; cheap, dependency-free, stable across runs.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hash_hex(std::uint64_t hash);

// Reproducibility record written next to every pipeline artifact set: tool
// version, parameters, input hashes and output list. No timestamps, so
// identical runs produce identical manifests.
struct Manifest {
  std::string tool_version = kToolVersion;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::string> input_hashes;  // path -> fnv1a64 hex
  std::vector<std::string> outputs;

  void add_input(const std::filesystem::path& path);
  void write(const std::filesystem::path& path) const;
};

}  // namespace windcorr
