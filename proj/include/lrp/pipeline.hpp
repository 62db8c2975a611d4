#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrp/descriptor.hpp"
#include "lrp/imaging_io.hpp"

namespace lrp {

struct ExtractOptions {
  ResizePolicy resize;
  bool normalize = true;
  /// Descriptors are cached here keyed by (file hash, method, resize, normalize).
  std::optional<std::filesystem::path> cache_dir;
};

struct ExtractOutcome {
  std::filesystem::path path;
  /// Indexed by static_cast<int>(Method); set for every requested method on success.
  std::array<std::optional<LrpDescriptor>, 2> descriptors;
  std::string error;
  bool from_cache = false;

  bool ok() const { return error.empty(); }
  const LrpDescriptor &get(Method m) const { return *descriptors[static_cast<int>(m)]; }
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string cache_key(std::uint64_t file_hash, Method method, const ResizePolicy &resize, bool normalize);

/// Loads and describes every file, parallel over files. Output order follows
/// input order. Per-file failures are recorded in ExtractOutcome::error.
std::vector<ExtractOutcome> extract_all(const std::vector<std::filesystem::path> &files,
                                        std::span<const Method> methods, const ExtractOptions &options);

} // namespace lrp
