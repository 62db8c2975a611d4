#include "lrp/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>

namespace lrp {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string cache_key(std::uint64_t file_hash, Method method, const ResizePolicy &resize, bool normalize) {
  std::string resize_tag = resize.target ? std::to_string(resize.target->width) + "x" + std::to_string(resize.target->height)
                                         : std::string("native");
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(file_hash));
  return std::string(hex) + "-" + std::string(to_string(method)) + "-" + resize_tag + (normalize ? "-n" : "-c") + ".lrp";
}

namespace {

std::optional<LrpDescriptor> read_cached(const fs::path &file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    return read_descriptor(in);
  } catch (const Error &) {
    return std::nullopt;
  }
}

void write_cached(const fs::path &file, const LrpDescriptor &d) {
  // Write to a temporary name first so concurrent readers never see a
  // partial record.
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    write_descriptor(out, d);
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
}

ExtractOutcome extract_one(const fs::path &path, std::span<const Method> methods, const ExtractOptions &options) {
  ExtractOutcome out;
  out.path = path;
  try {
    std::uint64_t hash = 0;
    if (options.cache_dir) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw FileNotFound("no such file: " + path.string());
      const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      hash = fnv1a64(bytes);
      bool all_cached = true;
      for (Method m : methods) {
        auto d = read_cached(*options.cache_dir / cache_key(hash, m, options.resize, options.normalize));
        if (d) out.descriptors[static_cast<int>(m)] = std::move(d);
        else all_cached = false;
      }
      if (all_cached) {
        out.from_cache = true;
        return out;
      }
    }
    const GrayImage image = load_gray(path, options.resize);
    for (Method m : methods) {
      auto &slot = out.descriptors[static_cast<int>(m)];
      if (slot) continue;
      slot = descriptor(image, m, options.normalize);
      if (options.cache_dir) write_cached(*options.cache_dir / cache_key(hash, m, options.resize, options.normalize), *slot);
    }
  } catch (const std::exception &e) {
    out.descriptors = {};
    out.error = e.what();
  }
  return out;
}

} // namespace

std::vector<ExtractOutcome> extract_all(const std::vector<fs::path> &files, std::span<const Method> methods,
                                        const ExtractOptions &options) {
  if (options.cache_dir) fs::create_directories(*options.cache_dir);
  std::vector<ExtractOutcome> out(files.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(files.size()); ++i)
    out[static_cast<std::size_t>(i)] = extract_one(files[static_cast<std::size_t>(i)], methods, options);
  return out;
}

} // namespace lrp
